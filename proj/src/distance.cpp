#include "ecc/distance.hpp"

#include <algorithm>
#include <limits>

#include "ecc/error.hpp"
#include "ecc/kernels.hpp"

namespace ecc {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::uint32_t> entries)
    : n_(n), d_(std::move(entries)) {
  if (d_.size() != n_ * n_) throw Error(ErrorCode::SizeOutOfRange, "distance matrix data length");
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  auto dist = kernels::bfs_all_pairs(g);
  if (std::find(dist.begin(), dist.end(), std::numeric_limits<std::uint32_t>::max()) != dist.end()) {
    throw Error(ErrorCode::GraphDisconnected, "graph with " + std::to_string(g.order()) + " vertices is not connected");
  }
  return DistanceMatrix(g.order(), std::move(dist));
}

EccentricityProfile eccentricity_profile(const DistanceMatrix& d) {
  const std::size_t n = d.order();
  if (n == 0) throw Error(ErrorCode::SizeOutOfRange, "eccentricity of the empty graph");
  EccentricityProfile p;
  p.ecc.assign(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) p.ecc[u] = std::max(p.ecc[u], d(u, v));
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  for (Vertex u = 0; u < n; ++u)
    if (p.ecc[u] == p.radius) p.center.push_back(u);
  return p;
}

std::vector<Edge> diametral_pairs(const DistanceMatrix& d) {
  std::uint32_t diam = 0;
  for (auto x : d.entries()) diam = std::max(diam, x);
  std::vector<Edge> out;
  if (diam == 0) return out;
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = u + 1; v < d.order(); ++v)
      if (d(u, v) == diam) out.emplace_back(u, v);
  return out;
}

}  // namespace ecc
