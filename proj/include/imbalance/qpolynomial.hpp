#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imbalance/ints.hpp"

namespace imbalance {

// Polynomial in one variable q with exact integer coefficients.
// Invariants: dense storage indexed by exponent, no negative exponents,
// trailing coefficient nonzero unless the polynomial is zero (empty vector).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs);
  QPolynomial(std::initializer_list<long long> coeffs);

  static QPolynomial zero() { return QPolynomial(); }
  static QPolynomial one();
  static QPolynomial monomial(int exponent, Int coeff = 1);

  bool is_zero() const { return c_.empty(); }
  // degree()/min_degree() are -1 on the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int min_degree() const;
  Int coeff(int exponent) const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(long long x) const;
  Int at_one() const;
  Int at_minus_one() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& add_monomial(int exponent, const Int& coeff);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  QPolynomial operator-() const;

  QPolynomial scaled(const Int& k) const;
  // Multiplication by q^k.
  QPolynomial shifted(int k) const;

  // Exact division by (1 - q^h); nullopt when the division leaves a remainder.
  std::optional<QPolynomial> divided_by_one_minus_q_pow(int h) const;

  // Coefficient symmetry c_i == c_{d-i} for 0 <= i <= d (d may exceed the
  // degree, in which case the window is padded with zeros).
  bool palindromic(int d) const;

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return c_ != o.c_; }

  // "1 + 2q + q^3" style rendering; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

// [n]_q = 1 + q + ... + q^{n-1}.
QPolynomial q_int(int n);
// [n]_q! = [1]_q [2]_q ... [n]_q.
QPolynomial q_factorial(int n);

}  // namespace imbalance
