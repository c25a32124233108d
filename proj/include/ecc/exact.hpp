#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecc/int_matrix.hpp"

namespace ecc {

/// Polynomial with big-integer coefficients, coeffs[i] multiplying x^i.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t power, const BigInt& c = 1);

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  /// Multiplies by -1 if the leading coefficient is negative.
  IntPolynomial sign_normalized() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  BigInt evaluate(const BigInt& x) const;

  /// Human-readable, highest degree first, e.g. "x^4 - 216*x^2 + 320".
  std::string to_string(char var = 'x') const;

private:
  void trim();
  std::vector<BigInt> c_;
};

struct InertiaTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t order() const noexcept { return n_plus + n_minus + n_zero; }
  std::size_t rank() const noexcept { return n_plus + n_minus; }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

/// det(xI - A) by Berkowitz's division-free algorithm.
IntPolynomial char_poly(const IntSymMatrix& a);

/// Fraction-free (Bareiss) determinant of the rows/columns `idx` of a.
BigInt determinant(const IntSymMatrix& a, const std::vector<std::size_t>& idx);
BigInt determinant(const IntSymMatrix& a);

/// Sum of all principal minors of size k, by enumeration of index subsets.
/// Throws SizeOutOfRange unless 1 <= k <= order.
BigInt principal_minor_sum(const IntSymMatrix& a, std::size_t k);

/// Multiplicity of the root 0: index of the lowest nonzero coefficient.
std::size_t zero_root_multiplicity(const IntPolynomial& p);

/// p(x) / x^m with m = zero_root_multiplicity(p).
IntPolynomial reduced(const IntPolynomial& p);

/// Inertia from the characteristic polynomial of a real symmetric matrix.
/// Every root is real, so Descartes' sign count is exact for the positive
/// roots. Throws ZeroPolynomial.
InertiaTriple inertia_exact(const IntPolynomial& p);

/// degree - multiplicity of 0. Throws ZeroPolynomial.
std::size_t rank_exact(const IntPolynomial& p);

/// True iff the reduced polynomial has no odd-degree terms, i.e. the
/// (all-real) root multiset is invariant under negation. Throws ZeroPolynomial.
bool is_spectrum_symmetric_exact(const IntPolynomial& p);

/// Writes the reduced polynomial as x^r + c_1 x^{r-1} + ... + c_r and returns
/// the first (i, i+1), scanning from c_0, with c_i and c_{i+1} both nonzero.
/// A witness rules out a symmetric spectrum.
std::optional<std::pair<std::size_t, std::size_t>> asymmetry_witness(const IntPolynomial& p);

}  // namespace ecc
