#include "ecc/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "ecc/error.hpp"

namespace ecc {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::ParameterOutOfRange, "uniform: empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();  // full 64-bit range
  const std::uint64_t threshold = (0 - span) % span;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return lo + x % span;
  }
}

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
}

void check_sizes(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2) throw Error(ErrorCode::ParameterOutOfRange, "need at least two blocks");
  for (auto s : sizes)
    if (s < 2) throw Error(ErrorCode::ParameterOutOfRange, "block sizes must be >= 2");
}

// Tree on nodes 0..m-1 from a Pruefer sequence of length m-2.
std::vector<Edge> pruefer_tree(const std::vector<Vertex>& seq, std::size_t m) {
  std::vector<std::size_t> degree(m, 1);
  for (Vertex x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> rest;
  for (Vertex u = 0; u < m; ++u)
    if (degree[u] == 1) rest.push_back(u);
  edges.emplace_back(rest.at(0), rest.at(1));
  return edges;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "complete graph needs n >= 1");
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Edge> edges;
  add_clique(edges, all);
  return Graph::build(n, edges);
}

Graph clique_path(std::span<const std::size_t> sizes) {
  check_sizes(sizes);
  std::vector<Edge> edges;
  Vertex joint = 0;
  Vertex next = 1;
  for (auto s : sizes) {
    std::vector<Vertex> members{joint};
    for (std::size_t i = 1; i < s; ++i) members.push_back(next++);
    add_clique(edges, members);
    joint = members.back();
  }
  return Graph::build(next, edges);
}

Graph clique_star(std::span<const std::size_t> sizes) {
  check_sizes(sizes);
  std::vector<Edge> edges;
  Vertex next = 1;
  for (auto s : sizes) {
    std::vector<Vertex> members{0};
    for (std::size_t i = 1; i < s; ++i) members.push_back(next++);
    add_clique(edges, members);
  }
  return Graph::build(next, edges);
}

Graph random_ct_clique_tree(const GeneratorSpec& spec) {
  const auto [tlo, thi] = spec.n_blocks;
  const auto [slo, shi] = spec.block_size;
  if (tlo < 1 || tlo > thi) throw Error(ErrorCode::ParameterOutOfRange, "n_blocks range");
  if (slo < 2 || slo > shi) throw Error(ErrorCode::ParameterOutOfRange, "block_size range");

  SplitMix64 rng(spec.seed);
  const std::size_t t = rng.uniform(tlo, thi);
  const std::size_t nodes = t + 1;

  std::vector<Edge> skeleton;
  switch (spec.shape) {
    case Shape::Path:
      for (Vertex i = 0; i + 1 < nodes; ++i) skeleton.emplace_back(i, i + 1);
      break;
    case Shape::Star:
      for (Vertex i = 1; i < nodes; ++i) skeleton.emplace_back(0, i);
      break;
    case Shape::TreeRandom:
      if (nodes == 2) {
        skeleton.emplace_back(0, 1);
      } else {
        std::vector<Vertex> seq(nodes - 2);
        for (auto& x : seq) x = static_cast<Vertex>(rng.uniform(0, nodes - 1));
        skeleton = pruefer_tree(seq, nodes);
      }
      break;
  }

  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(nodes);
  for (auto [a, b] : skeleton) {
    const std::size_t s = rng.uniform(slo, shi);
    std::vector<Vertex> members{a, b};
    for (std::size_t i = 2; i < s; ++i) members.push_back(next++);
    add_clique(edges, members);
  }
  const Graph g = Graph::build(next, edges);

  std::vector<Vertex> perm(next);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
  return relabel(g, perm);
}

GeneratorSpec corpus_spec(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xC0FFEE5EEDULL);
  GeneratorSpec spec;
  spec.seed = seed;
  const auto pick = rng.uniform(0, 5);
  spec.shape = pick == 0 ? Shape::Path : pick == 1 ? Shape::Star : Shape::TreeRandom;
  spec.n_blocks = {2, 12};
  spec.block_size = {2, rng.uniform(2, 5)};
  return spec;
}

Graph corpus_instance(std::uint64_t seed, std::size_t min_order, std::size_t max_order) {
  if (min_order > max_order) throw Error(ErrorCode::ParameterOutOfRange, "order range");
  for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
    const auto spec = corpus_spec(seed + attempt * 0x100000001B3ULL);
    Graph g = random_ct_clique_tree(spec);
    if (g.order() >= min_order && g.order() <= max_order) return g;
  }
  throw Error(ErrorCode::ParameterOutOfRange, "no corpus graph with order in the requested range");
}

}  // namespace ecc
