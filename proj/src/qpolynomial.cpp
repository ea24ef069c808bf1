#include "imbalance/qpolynomial.hpp"

#include <ostream>
#include <sstream>

namespace imbalance {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  trim();
}

QPolynomial QPolynomial::one() { return monomial(0); }

QPolynomial QPolynomial::monomial(int exponent, Int coeff) {
  QPolynomial p;
  if (coeff != 0) {
    p.c_.assign(exponent + 1, Int(0));
    p.c_[exponent] = std::move(coeff);
  }
  return p;
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPolynomial::min_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Int QPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
  return c_[exponent];
}

Int QPolynomial::eval(long long x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int QPolynomial::at_one() const {
  Int acc = 0;
  for (const Int& v : c_) acc += v;
  return acc;
}

Int QPolynomial::at_minus_one() const {
  Int acc = 0;
  bool neg = false;
  for (const Int& v : c_) {
    if (neg) acc -= v; else acc += v;
    neg = !neg;
  }
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::add_monomial(int exponent, const Int& coeff) {
  if (coeff == 0) return *this;
  if (exponent >= static_cast<int>(c_.size())) c_.resize(exponent + 1, Int(0));
  c_[exponent] += coeff;
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial p(*this);
  for (Int& v : p.c_) v = -v;
  return p;
}

QPolynomial QPolynomial::scaled(const Int& k) const {
  if (k == 0) return QPolynomial();
  QPolynomial p(*this);
  for (Int& v : p.c_) v *= k;
  return p;
}

QPolynomial QPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : QPolynomial(*this);
  QPolynomial p;
  p.c_.assign(c_.size() + k, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) p.c_[i + k] = c_[i];
  return p;
}

std::optional<QPolynomial> QPolynomial::divided_by_one_minus_q_pow(int h) const {
  if (is_zero()) return QPolynomial();
  // Quotient of p / (1 - q^h) as a power series: r_j = p_j + r_{j-h}.
  // Exact iff the series terminates, i.e. r vanishes above deg(p) - h.
  int d = degree();
  if (d < h) return std::nullopt;
  std::vector<Int> r(d + 1, Int(0));
  for (int j = 0; j <= d; ++j) {
    r[j] = c_[j];
    if (j >= h) r[j] += r[j - h];
  }
  for (int j = d - h + 1; j <= d; ++j)
    if (r[j] != 0) return std::nullopt;
  r.resize(d - h + 1);
  return QPolynomial(std::move(r));
}

bool QPolynomial::palindromic(int d) const {
  if (degree() > d) return false;
  for (int i = 0; 2 * i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i > 0) {
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

QPolynomial q_int(int n) {
  std::vector<Int> c(std::max(n, 0), Int(1));
  return QPolynomial(std::move(c));
}

QPolynomial q_factorial(int n) {
  QPolynomial p = QPolynomial::one();
  for (int i = 2; i <= n; ++i) p = p * q_int(i);
  return p;
}

}  // namespace imbalance
