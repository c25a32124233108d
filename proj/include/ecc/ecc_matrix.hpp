#pragma once

#include <span>

#include "ecc/distance.hpp"
#include "ecc/graph.hpp"
#include "ecc/int_matrix.hpp"

namespace ecc {

/// eps(u,v) = d(u,v) when d(u,v) = min(e(u), e(v)), otherwise 0.
IntSymMatrix eccentricity_matrix(const DistanceMatrix& d, const EccentricityProfile& profile);

/// Convenience: distances, profile and matrix in one go.
IntSymMatrix eccentricity_matrix(const Graph& g);

/// Graph on the matrix's index set with uv present iff a(u,v) != 0, u != v.
Graph indicator_graph(const IntSymMatrix& a);

/// Irreducible iff the indicator graph is connected. Throws OrderOne.
bool is_irreducible(const IntSymMatrix& a);

/// Restriction to `rows`; indices are sorted and deduplicated first, so the
/// result keeps the original relative order. Throws IndexOutOfRange.
IntSymMatrix principal_submatrix(const IntSymMatrix& a, std::span<const Vertex> rows);

/// Restriction in the caller's order (duplicates allowed). Throws IndexOutOfRange.
IntSymMatrix select(const IntSymMatrix& a, std::span<const Vertex> indices);

}  // namespace ecc
