#pragma once

#include <cstdint>
#include <vector>

#include "ecc/graph.hpp"

namespace ecc {

/// Dense all-pairs graph distances (unit edge length) of a connected graph.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> entries);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return d_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

struct EccentricityProfile {
  std::vector<std::uint32_t> ecc;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
  VertexSet center;
};

/// Per-source BFS. Throws GraphDisconnected.
DistanceMatrix all_pairs_distances(const Graph& g);

EccentricityProfile eccentricity_profile(const DistanceMatrix& d);

/// Unordered pairs (u < v) at distance diam, lexicographically sorted.
std::vector<Edge> diametral_pairs(const DistanceMatrix& d);

/// True iff v lies on some shortest x-y path.
inline bool on_shortest_path(const DistanceMatrix& d, Vertex x, Vertex v, Vertex y) {
  return d(x, v) + d(v, y) == d(x, y);
}

}  // namespace ecc
