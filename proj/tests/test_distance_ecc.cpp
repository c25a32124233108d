#include <doctest.h>

#include <omp.h>

#include "ecc/ecc_matrix.hpp"
#include "ecc/error.hpp"
#include "ecc/kernels.hpp"
#include "support.hpp"

using namespace ecc;
using ecc::v;

TEST_CASE("BFS distances agree with Floyd-Warshall") {
  SplitMix64 rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng.uniform(0, 30);
    const Graph g = test::random_graph(rng, n, 1, 1 + rng.uniform(1, 8), rep % 4 != 0);
    CAPTURE(rep);
    CHECK(kernels::bfs_all_pairs(g) == test::floyd_warshall(g));
    if (g.connected()) CHECK(all_pairs_distances(g).entries() == test::floyd_warshall(g));
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  omp_set_num_threads(4);  // exercise the threaded branches even on one core
  SplitMix64 rng(99);
  for (std::size_t n : {5u, 70u, 130u}) {
    const Graph g = test::random_graph(rng, n, 1, 20, true);
    const auto d = kernels::bfs_all_pairs(g);
    CHECK(d == kernels::reference::bfs_all_pairs(g));
    const auto prof = eccentricity_profile(DistanceMatrix(n, d));
    CHECK(kernels::eccentricity_entries(d, prof.ecc) == kernels::reference::eccentricity_entries(d, prof.ecc));
  }
  for (std::size_t n : {1u, 6u, 55u}) {
    const auto a = test::random_symmetric(rng, n, -9, 9);
    CHECK(kernels::berkowitz(a) == kernels::reference::berkowitz(a));
  }
  const auto big = eccentricity_matrix(corpus_instance(5, 38, 40));
  CHECK(kernels::berkowitz(big) == kernels::reference::berkowitz(big));
  kernels::apply_thread_cap();
}

TEST_CASE("disconnected graphs are refused") {
  const Graph g = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(all_pairs_distances(g), Error);
  try {
    all_pairs_distances(g);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GraphDisconnected);
  }
}

TEST_CASE("eccentricity profile of the path P5") {
  const Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto prof = eccentricity_profile(all_pairs_distances(p5));
  CHECK(prof.ecc == std::vector<std::uint32_t>{4, 3, 2, 3, 4});
  CHECK(prof.radius == 2);
  CHECK(prof.diameter == 4);
  CHECK(prof.center == VertexSet{2});
  CHECK(diametral_pairs(all_pairs_distances(p5)) == std::vector<Edge>{{0, 4}});
}

TEST_CASE("eccentricity matrix of small families") {
  // P4: entries survive only between the two ends and end-to-centre pairs
  const auto p4 = eccentricity_matrix(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(p4 == IntSymMatrix::from_rows({{0, 0, 2, 3}, {0, 0, 0, 2}, {2, 0, 0, 0}, {3, 2, 0, 0}}));
  // K_n: the adjacency matrix
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto e = eccentricity_matrix(complete_graph(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(e(i, j) == (i == j ? 0 : 1));
  }
  // star K_{1,3}: e(centre) = 1, so the centre keeps its unit entries
  const auto star = eccentricity_matrix(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star == IntSymMatrix::from_rows({{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}}));
}

TEST_CASE("G1 rows in the published vertex ordering") {
  const auto e = eccentricity_matrix(test::fixture_graph("G1"));
  const std::vector<Vertex> order{v(1), v(3), v(4), v(5), v(6), v(2), v(8), v(9), v(10), v(11), v(7)};
  CHECK(test::row_in_order(e, v(1), order) == std::vector<long>{0, 0, 0, 0, 0, 0, 3, 3, 3, 3, 2});
  CHECK(test::row_in_order(e, v(2), order) == std::vector<long>{0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 0});
}

TEST_CASE("G2 rows in the published vertex ordering") {
  const auto e = eccentricity_matrix(test::fixture_graph("G2"));
  const std::vector<Vertex> order{v(1), v(3), v(4), v(5), v(6), v(2), v(8), v(9), v(10), v(7), v(11)};
  CHECK(test::row_in_order(e, v(1), order) == std::vector<long>{0, 0, 0, 0, 0, 0, 3, 3, 3, 2, 2});
  CHECK(test::row_in_order(e, v(2), order) == std::vector<long>{0, 0, 0, 0, 0, 0, 2, 2, 2, 0, 0});
  CHECK(test::row_in_order(e, v(8), order) == std::vector<long>{3, 3, 3, 3, 3, 2, 0, 0, 0, 0, 2});
}

TEST_CASE("G3 rows in the published vertex ordering") {
  const auto e = eccentricity_matrix(test::fixture_graph("G3"));
  const std::vector<Vertex> order{v(1), v(2), v(3), v(4), v(12), v(13), v(14), v(15),
                                  v(5), v(11), v(6), v(7), v(8), v(9), v(10)};
  CHECK(test::row_in_order(e, v(1), order) == std::vector<long>{0, 0, 0, 0, 4, 4, 4, 4, 0, 3, 2, 3, 3, 3, 3});
  CHECK(test::row_in_order(e, v(12), order) == std::vector<long>{4, 4, 4, 4, 0, 0, 0, 0, 3, 0, 2, 3, 3, 3, 3});
}

TEST_CASE("eccentricity matrix equals its defining rule") {
  SplitMix64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = test::random_graph(rng, 2 + rng.uniform(0, 20), 1, 4, true);
    const auto fw = test::floyd_warshall(g);
    const std::size_t n = g.order();
    std::vector<std::uint32_t> ecc(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) ecc[u] = std::max(ecc[u], fw[u * n + w]);
    const auto e = eccentricity_matrix(g);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) {
        const auto d = fw[u * n + w];
        CHECK(e(u, w) == (d == std::min(ecc[u], ecc[w]) ? d : 0u));
      }
  }
}

TEST_CASE("indicator graph and irreducibility") {
  // C4: eps is 2 on the two diagonals only, so Gamma is two disjoint edges
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto e = eccentricity_matrix(c4);
  CHECK(indicator_graph(e).edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK_FALSE(is_irreducible(e));
  CHECK(is_irreducible(eccentricity_matrix(test::fixture_graph("G1"))));
  CHECK_THROWS_AS(is_irreducible(IntSymMatrix(1)), Error);
}

TEST_CASE("principal submatrix and select") {
  const auto e = eccentricity_matrix(test::fixture_graph("G1"));
  const std::vector<Vertex> rows{v(7), v(1), v(1)};
  const auto sub = principal_submatrix(e, rows);
  CHECK(sub.order() == 2);
  CHECK(sub(0, 1) == e(v(1), v(7)));
  const auto sel = select(e, rows);
  CHECK(sel.order() == 3);
  CHECK(sel(0, 1) == e(v(7), v(1)));
  const std::vector<Vertex> bad{0, 11};
  CHECK_THROWS_AS(principal_submatrix(e, bad), Error);
  CHECK_THROWS_AS(select(e, bad), Error);
}
