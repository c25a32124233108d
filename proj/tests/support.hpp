#pragma once

// Independent oracles and small builders shared by the test binaries.

#include <cstdint>
#include <limits>
#include <vector>

#include "ecc/distance.hpp"
#include "ecc/fixtures.hpp"
#include "ecc/generators.hpp"
#include "ecc/graph.hpp"
#include "ecc/int_matrix.hpp"

namespace test {

using namespace ecc;

inline Graph fixture_graph(const char* name) { return std::get<Graph>(fixture(name)); }
inline IntSymMatrix fixture_matrix(const char* name) { return std::get<IntSymMatrix>(fixture(name)); }

/// Erdos-Renyi G(n, p) with p = num/den, made connected by a random spanning path when asked.
inline Graph random_graph(SplitMix64& rng, std::size_t n, unsigned num, unsigned den, bool connect) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform(1, den) <= num) edges.emplace_back(u, v);
  if (connect) {
    std::vector<Vertex> order(n);
    for (Vertex i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(order[i], order[i + 1]);
  }
  return Graph::build(n, edges);
}

/// Floyd-Warshall on the adjacency relation; UINT32_MAX for unreachable.
inline std::vector<std::uint32_t> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint64_t inf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint64_t> d(n * n, inf);
  for (Vertex u = 0; u < n; ++u) {
    d[u * n + u] = 0;
    for (Vertex v : g.neighbors(u)) d[u * n + v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i * n + k] + d[k * n + j] < d[i * n + j]) d[i * n + j] = d[i * n + k] + d[k * n + j];
  return {d.begin(), d.end()};
}

/// Connectivity of g after deleting the vertices flagged in `gone`.
inline bool connected_without(const Graph& g, const std::vector<char>& gone) {
  const std::size_t n = g.order();
  Vertex start = 0;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) ++alive, start = v;
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!gone[w] && !seen[w]) seen[w] = 1, ++reached, stack.push_back(w);
  }
  return reached == alive;
}

/// Cut-vertices by deleting each vertex in turn (connected g).
inline VertexSet brute_cut_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<char> gone(g.order(), 0);
    gone[v] = 1;
    if (!connected_without(g, gone)) out.push_back(v);
  }
  return out;
}

/// Blocks by subset enumeration: maximal vertex sets of size >= 2 whose
/// induced subgraph is connected with no cut-vertex. n <= 14 or so.
inline std::vector<VertexSet> brute_blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> good;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    const Graph h = induced_subgraph(g, s);
    if (!h.connected()) continue;
    bool biconnected = true;
    if (s.size() > 2) {
      for (Vertex v = 0; v < h.order() && biconnected; ++v) {
        std::vector<char> gone(h.order(), 0);
        gone[v] = 1;
        biconnected = connected_without(h, gone);
      }
    }
    if (biconnected) good.push_back(mask);
  }
  std::vector<VertexSet> out;
  for (auto m : good) {
    bool maximal = true;
    for (auto o : good)
      if (o != m && (o & m) == m) maximal = false;
    if (!maximal) continue;
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline IntSymMatrix random_symmetric(SplitMix64& rng, std::size_t n, long lo, long hi) {
  IntSymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      a.set(i, j, BigInt(lo + static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(hi - lo)))));
  return a;
}

/// Row `r` of a restricted to and ordered by `order`.
inline std::vector<long> row_in_order(const IntSymMatrix& a, Vertex r, const std::vector<Vertex>& order) {
  std::vector<long> out;
  for (Vertex c : order) out.push_back(a(r, c).get_si());
  return out;
}

}  // namespace test
