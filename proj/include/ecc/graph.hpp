#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ecc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate-free

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Collapses duplicate edges and sorts adjacency lists.
  /// Throws InvalidEdge on self-loops and VertexOutOfRange on bad endpoints.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::build(n, edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Copy of g without the edges whose endpoints both lie in `clique`.
Graph remove_edges_within(const Graph& g, std::span<const Vertex> clique);

/// Vertex set of the connected component containing `root`.
VertexSet component_of(const Graph& g, Vertex root);

/// Graph with vertex v relabelled to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace ecc
