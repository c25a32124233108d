#pragma once

#include <cstddef>
#include <vector>

#include "ecc/exact.hpp"
#include "ecc/int_matrix.hpp"

namespace ecc {

struct Spectrum {
  std::vector<double> eigenvalues;  // descending

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double operator[](std::size_t i) const { return eigenvalues[i]; }
};

struct JacobiOptions {
  double tol = 1e-12;      // stop when off-diagonal norm <= tol * ||A||_F
  int max_sweeps = 100;
};

/// Cyclic Jacobi rotations on a private double copy of `a`.
/// Throws NoConvergence when the sweep cap is hit.
Spectrum symmetric_eigenvalues(const IntSymMatrix& a, JacobiOptions opts = {});
Spectrum symmetric_eigenvalues(std::vector<double> a, std::size_t n, JacobiOptions opts = {});

/// max |xi_i|. Throws SizeOutOfRange on an empty spectrum.
double spectral_radius(const Spectrum& s);

/// Default zero tolerance for a matrix of the given Frobenius norm.
inline double default_zero_tol(double frobenius) {
  return 1e-7 * (frobenius > 1.0 ? frobenius : 1.0);
}

InertiaTriple inertia_float(const Spectrum& s, double zero_tol);

/// Cauchy interlacing: full[i] + slack >= sub[i] >= full[n-m+i] - slack.
bool interlaces(const Spectrum& sub, const Spectrum& full, double slack = 1e-9);

/// Distinct values after clustering eigenvalues closer than `gap`.
struct EigenCluster {
  double value;
  std::size_t multiplicity;
};
std::vector<EigenCluster> cluster_eigenvalues(const Spectrum& s, double gap = 1e-6);

}  // namespace ecc
