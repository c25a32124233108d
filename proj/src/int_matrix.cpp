#include "ecc/int_matrix.hpp"

#include <cmath>
#include <string>

#include "ecc/error.hpp"

namespace ecc {

IntSymMatrix::IntSymMatrix(std::size_t order, std::vector<BigInt> data) : n_(order), a_(std::move(data)) {
  if (a_.size() != n_ * n_) throw Error(ErrorCode::SizeOutOfRange, "matrix data length does not match order");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (a_[i * n_ + j] != a_[j * n_ + i]) {
        throw Error(ErrorCode::NotSymmetric,
                    "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") differs from its transpose");
      }
}

IntSymMatrix IntSymMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  std::vector<BigInt> data;
  data.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::SizeOutOfRange, "matrix is not square");
    for (long x : r) data.emplace_back(x);
  }
  return IntSymMatrix(n, std::move(data));
}

void IntSymMatrix::set(std::size_t i, std::size_t j, const BigInt& value) {
  a_.at(i * n_ + j) = value;
  a_.at(j * n_ + i) = value;
}

double IntSymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) {
    const double v = x.get_d();
    s += v * v;
  }
  return std::sqrt(s);
}

bool IntSymMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace ecc
