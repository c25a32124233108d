#include "ecc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ecc/error.hpp"

namespace ecc {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    a[k * n + p] = a[p * n + k] = c * akp - s * akq;
    a[k * n + q] = a[q * n + k] = s * akp + c * akq;
  }
  a[p * n + p] -= t * apq;
  a[q * n + q] += t * apq;
  a[p * n + q] = a[q * n + p] = 0.0;
}

}  // namespace

Spectrum symmetric_eigenvalues(std::vector<double> a, std::size_t n, JacobiOptions opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "Jacobi tolerance must be positive");
  if (a.size() != n * n) throw Error(ErrorCode::SizeOutOfRange, "matrix data length");
  double norm = 0.0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  const double target = opts.tol * norm;

  bool converged = off_diagonal_norm(a, n) <= target;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, n, p, q);
    converged = off_diagonal_norm(a, n) <= target;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
  }
  Spectrum s;
  s.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.eigenvalues[i] = a[i * n + i];
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

Spectrum symmetric_eigenvalues(const IntSymMatrix& a, JacobiOptions opts) {
  std::vector<double> data;
  data.reserve(a.data().size());
  for (const auto& x : a.data()) data.push_back(x.get_d());
  return symmetric_eigenvalues(std::move(data), a.order(), opts);
}

double spectral_radius(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw Error(ErrorCode::SizeOutOfRange, "empty spectrum");
  double r = 0.0;
  for (double x : s.eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

InertiaTriple inertia_float(const Spectrum& s, double zero_tol) {
  InertiaTriple t;
  for (double x : s.eigenvalues) {
    if (x > zero_tol) ++t.n_plus;
    else if (x < -zero_tol) ++t.n_minus;
    else ++t.n_zero;
  }
  return t;
}

bool interlaces(const Spectrum& sub, const Spectrum& full, double slack) {
  const std::size_t m = sub.size();
  const std::size_t n = full.size();
  if (m > n) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (sub[i] > full[i] + slack) return false;
    if (sub[i] < full[n - m + i] - slack) return false;
  }
  return true;
}

std::vector<EigenCluster> cluster_eigenvalues(const Spectrum& s, double gap) {
  std::vector<EigenCluster> out;
  double sum = 0.0;
  for (double x : s.eigenvalues) {
    if (!out.empty() && std::abs(out.back().value - x) < gap) {
      // value tracks the running mean of the cluster
      sum += x;
      ++out.back().multiplicity;
      out.back().value = sum / static_cast<double>(out.back().multiplicity);
    } else {
      out.push_back({x, 1});
      sum = x;
    }
  }
  return out;
}

}  // namespace ecc
