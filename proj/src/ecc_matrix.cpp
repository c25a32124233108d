#include "ecc/ecc_matrix.hpp"

#include <algorithm>

#include "ecc/error.hpp"
#include "ecc/kernels.hpp"

namespace ecc {

IntSymMatrix eccentricity_matrix(const DistanceMatrix& d, const EccentricityProfile& profile) {
  if (profile.ecc.size() != d.order()) throw Error(ErrorCode::SizeOutOfRange, "profile and distance matrix differ in order");
  return IntSymMatrix(d.order(), kernels::eccentricity_entries(d.entries(), profile.ecc));
}

IntSymMatrix eccentricity_matrix(const Graph& g) {
  auto d = all_pairs_distances(g);
  return eccentricity_matrix(d, eccentricity_profile(d));
}

Graph indicator_graph(const IntSymMatrix& a) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u + 1; v < a.order(); ++v)
      if (sgn(a(u, v)) != 0) edges.emplace_back(u, v);
  return Graph::build(a.order(), edges);
}

bool is_irreducible(const IntSymMatrix& a) {
  if (a.order() <= 1) throw Error(ErrorCode::OrderOne, "irreducibility needs order > 1");
  return indicator_graph(a).connected();
}

IntSymMatrix select(const IntSymMatrix& a, std::span<const Vertex> indices) {
  for (Vertex i : indices)
    if (i >= a.order()) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i));
  const std::size_t m = indices.size();
  std::vector<BigInt> data(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) data[i * m + j] = a(indices[i], indices[j]);
  return IntSymMatrix(m, std::move(data));
}

IntSymMatrix principal_submatrix(const IntSymMatrix& a, std::span<const Vertex> rows) {
  VertexSet sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return select(a, sorted);
}

}  // namespace ecc
