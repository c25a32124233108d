#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "ecc/graph.hpp"

namespace ecc {

using BigInt = mpz_class;

/// Dense symmetric matrix with arbitrary-precision integer entries.
class IntSymMatrix {
public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(std::size_t order) : n_(order), a_(order * order) {}

  /// Row-major data; throws NotSymmetric if data is not symmetric and
  /// SizeOutOfRange if its length is not order^2.
  IntSymMatrix(std::size_t order, std::vector<BigInt> data);

  static IntSymMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t order() const noexcept { return n_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const BigInt& value);

  std::span<const BigInt> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
  const std::vector<BigInt>& data() const noexcept { return a_; }

  /// Frobenius norm in double precision.
  double frobenius_norm() const;
  bool is_zero() const;

  friend bool operator==(const IntSymMatrix& a, const IntSymMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

}  // namespace ecc
