#include "ecc/graph.hpp"

#include <algorithm>
#include <string>

#include "ecc/error.hpp"

namespace ecc {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  if (adj_.empty()) return true;
  return component_of(*this, 0).size() == adj_.size();
}

VertexSet component_of(const Graph& g, Vertex root) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{root};
  seen.at(root) = 1;
  VertexSet out;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "induced_subgraph");
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (index[w] > static_cast<std::int64_t>(i)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
    }
  }
  return Graph::build(vertices.size(), edges);
}

Graph remove_edges_within(const Graph& g, std::span<const Vertex> clique) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : clique) in.at(v) = 1;
  std::vector<Edge> kept;
  for (auto [u, w] : g.edges())
    if (!(in[u] && in[w])) kept.emplace_back(u, w);
  return Graph::build(g.order(), kept);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw Error(ErrorCode::SizeOutOfRange, "relabel: permutation size");
  std::vector<Edge> edges;
  for (auto [u, w] : g.edges()) edges.emplace_back(perm[u], perm[w]);
  return Graph::build(g.order(), edges);
}

}  // namespace ecc
