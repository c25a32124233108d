#include <doctest.h>

#include <map>

#include "ecc/blocks.hpp"
#include "ecc/distance.hpp"
#include "ecc/error.hpp"
#include "ecc/generators.hpp"

using namespace ecc;

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
}

TEST_CASE("uniform draws stay in range and cover it") {
  SplitMix64 rng(5);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 6000; ++i) {
    const auto x = rng.uniform(3, 8);
    REQUIRE(x >= 3);
    REQUIRE(x <= 8);
    ++seen[x];
  }
  CHECK(seen.size() == 6);
  for (const auto& [x, c] : seen) CHECK(c > 800);
  CHECK(rng.uniform(7, 7) == 7);
  CHECK_NOTHROW(rng.uniform(0, ~0ull));
  CHECK_THROWS_AS(rng.uniform(2, 1), Error);
}

TEST_CASE("generation is a function of the spec") {
  GeneratorSpec spec;
  spec.seed = 42;
  spec.n_blocks = {6, 6};
  spec.block_size = {2, 4};
  const Graph a = random_ct_clique_tree(spec);
  CHECK(a == random_ct_clique_tree(spec));
  CHECK(decompose(a).blocks.size() == 6);
  spec.seed = 43;
  CHECK_FALSE(a == random_ct_clique_tree(spec));
}

TEST_CASE("edge blocks give trees") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    GeneratorSpec spec;
    spec.seed = s;
    spec.block_size = {2, 2};
    const Graph g = random_ct_clique_tree(spec);
    CHECK(g.connected());
    CHECK(g.size() + 1 == g.order());
  }
}

TEST_CASE("every generated graph is in the class") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    CAPTURE(s);
    GeneratorSpec spec = corpus_spec(s);
    const Graph g = random_ct_clique_tree(spec);
    CHECK(classify(g).in_ct);
    const auto blocks = decompose(g).blocks.size();
    CHECK(blocks >= spec.n_blocks.first);
    CHECK(blocks <= spec.n_blocks.second);
    for (const auto& b : decompose(g).blocks) {
      CHECK(b.size() >= spec.block_size.first);
      CHECK(b.size() <= spec.block_size.second);
    }
  }
}

TEST_CASE("shapes") {
  GeneratorSpec spec;
  spec.seed = 9;
  spec.n_blocks = {5, 5};
  spec.shape = Shape::Path;
  const Graph path = random_ct_clique_tree(spec);
  const auto tp = associated_tree(path, decompose(path));
  CHECK(tp.leaf_representatives.size() == 2);
  spec.shape = Shape::Star;
  const Graph star = random_ct_clique_tree(spec);
  CHECK(decompose(star).cut_vertices.size() == 1);
  CHECK(eccentricity_profile(all_pairs_distances(star)).diameter == 2);
}

TEST_CASE("named constructions") {
  const std::vector<std::size_t> edges{2, 2, 2};
  CHECK(clique_path(edges) == build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  const std::vector<std::size_t> triangles{3, 3};
  const Graph s = clique_star(triangles);
  CHECK(s.order() == 5);
  CHECK(s.size() == 6);
  CHECK(eccentricity_profile(all_pairs_distances(s)).diameter == 2);
  const Graph k4 = complete_graph(4);
  CHECK(k4.size() == 6);
  CHECK(eccentricity_profile(all_pairs_distances(k4)).diameter == 1);

  const std::vector<std::size_t> one{3};
  const std::vector<std::size_t> small{3, 1};
  CHECK_THROWS_AS(clique_path(one), Error);
  CHECK_THROWS_AS(clique_star(small), Error);
  CHECK_THROWS_AS(complete_graph(0), Error);
  GeneratorSpec bad;
  bad.block_size = {1, 3};
  CHECK_THROWS_AS(random_ct_clique_tree(bad), Error);
  bad.block_size = {2, 3};
  bad.n_blocks = {4, 2};
  CHECK_THROWS_AS(random_ct_clique_tree(bad), Error);
}

TEST_CASE("corpus instances") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = corpus_instance(s);
    CHECK(g.order() >= 5);
    CHECK(g.order() <= 40);
    CHECK(g.connected());
    CHECK(g == corpus_instance(s));
  }
  CHECK_THROWS_AS(corpus_instance(1, 10, 5), Error);
  CHECK_THROWS_AS(corpus_instance(1, 5000, 6000), Error);
}
