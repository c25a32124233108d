#include "ecc/exact.hpp"

#include <algorithm>
#include <sstream>

#include "ecc/error.hpp"
#include "ecc/kernels.hpp"

namespace ecc {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long x : coeffs) c_.emplace_back(x);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, const BigInt& c) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::sign_normalized() const {
  if (!c_.empty() && sgn(c_.back()) < 0) return -*this;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigInt& c = c_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

IntPolynomial char_poly(const IntSymMatrix& a) {
  auto hi_first = kernels::berkowitz(a);
  std::reverse(hi_first.begin(), hi_first.end());
  return IntPolynomial(std::move(hi_first));
}

BigInt determinant(const IntSymMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t m = idx.size();
  if (m == 0) return 1;
  std::vector<BigInt> w(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) w[i * m + j] = a(idx[i], idx[j]);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return w[i * m + j]; };

  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < m && sgn(at(p, k)) == 0) ++p;
      if (p == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(m - 1, m - 1);
}

BigInt determinant(const IntSymMatrix& a) {
  std::vector<std::size_t> idx(a.order());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return determinant(a, idx);
}

BigInt principal_minor_sum(const IntSymMatrix& a, std::size_t k) {
  const std::size_t n = a.order();
  if (k < 1 || k > n) throw Error(ErrorCode::SizeOutOfRange, "minor size " + std::to_string(k) + " for order " + std::to_string(n));
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  BigInt sum = 0;
  while (true) {
    sum += determinant(a, idx);
    // next k-combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return sum;
}

namespace {

void require_nonzero(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no inertia");
}

}  // namespace

std::size_t zero_root_multiplicity(const IntPolynomial& p) {
  require_nonzero(p);
  std::size_t m = 0;
  while (sgn(p.coeffs()[m]) == 0) ++m;
  return m;
}

IntPolynomial reduced(const IntPolynomial& p) {
  const std::size_t m = zero_root_multiplicity(p);
  return IntPolynomial(std::vector<BigInt>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m), p.coeffs().end()));
}

InertiaTriple inertia_exact(const IntPolynomial& p) {
  InertiaTriple t;
  t.n_zero = zero_root_multiplicity(p);
  int last = 0;
  for (std::size_t i = t.n_zero; i < p.coeffs().size(); ++i) {
    const int s = sgn(p.coeffs()[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++t.n_plus;
    last = s;
  }
  t.n_minus = static_cast<std::size_t>(p.degree()) - t.n_zero - t.n_plus;
  return t;
}

std::size_t rank_exact(const IntPolynomial& p) {
  return static_cast<std::size_t>(p.degree()) - zero_root_multiplicity(p);
}

bool is_spectrum_symmetric_exact(const IntPolynomial& p) {
  const auto r = reduced(p);
  for (std::size_t i = 1; i < r.coeffs().size(); i += 2)
    if (sgn(r.coeffs()[i]) != 0) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> asymmetry_witness(const IntPolynomial& p) {
  const auto r = reduced(p);
  const std::size_t deg = static_cast<std::size_t>(r.degree());
  // c_i multiplies x^{deg - i}
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(r.coeffs()[deg - i]) != 0 && sgn(r.coeffs()[deg - i - 1]) != 0) return std::make_pair(i, i + 1);
  }
  return std::nullopt;
}

}  // namespace ecc
