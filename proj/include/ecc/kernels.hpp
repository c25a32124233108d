#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a straight serial version in `reference`, kept for tests and
// for the benchmark. Both must produce identical results.

#include <cstdint>
#include <vector>

#include "ecc/graph.hpp"
#include "ecc/int_matrix.hpp"

namespace ecc::kernels {

/// Row-major n*n BFS distances; UINT32_MAX marks unreachable pairs.
std::vector<std::uint32_t> bfs_all_pairs(const Graph& g);

/// Entries of the eccentricity matrix from row-major distances and
/// per-vertex eccentricities.
std::vector<BigInt> eccentricity_entries(const std::vector<std::uint32_t>& dist,
                                         const std::vector<std::uint32_t>& ecc);

/// Characteristic polynomial coefficients of a, highest degree first
/// (leading 1), by Berkowitz's algorithm.
std::vector<BigInt> berkowitz(const IntSymMatrix& a);

namespace reference {
std::vector<std::uint32_t> bfs_all_pairs(const Graph& g);
std::vector<BigInt> eccentricity_entries(const std::vector<std::uint32_t>& dist,
                                         const std::vector<std::uint32_t>& ecc);
std::vector<BigInt> berkowitz(const IntSymMatrix& a);
}  // namespace reference

/// Upper bound on OpenMP threads, from ECC_SPECTRA_THREADS when set.
int thread_cap();
/// Applies thread_cap() to the OpenMP runtime.
void apply_thread_cap();

}  // namespace ecc::kernels
