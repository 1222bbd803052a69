#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magicsq {

// Exact rational number, always in lowest terms with positive denominator.
// Thin value wrapper over GMP's mpq_class: the two-argument constructors
// canonicalize, and GMP keeps canonical operands canonical under arithmetic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long n, long d) : v_(static_cast<signed long>(n), static_cast<signed long>(d)) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "p" or "p/q" (optional sign, base 10).
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    v.canonicalize();
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return Rational(std::move(v));
  }

  // Canonical form: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }
  double to_double() const { return v_.get_d(); }

  // Exact conversion helpers; throw if the value does not fit.
  long num_long() const {
    if (!v_.get_num().fits_slong_p()) throw std::range_error("Rational: numerator too large");
    return v_.get_num().get_si();
  }
  long den_long() const {
    if (!v_.get_den().fits_slong_p()) throw std::range_error("Rational: denominator too large");
    return v_.get_den().get_si();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

 private:
  mpq_class v_;
};

// Dense coordinate vector over Q.
using QVector = std::vector<Rational>;

// Sparse coordinate vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline QVector& add_scaled(QVector& dst, const Rational& c, const QVector& src) {
  for (size_t i = 0; i < src.size(); ++i)
    if (!src[i].is_zero()) dst[i] += c * src[i];
  return dst;
}

inline QVector scaled(const QVector& v, const Rational& c) {
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline QVector vec_add(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVector vec_sub(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline SparseVec to_sparse(const QVector& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

inline QVector to_dense(const SparseVec& s, int dim) {
  QVector v(dim);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

}  // namespace magicsq
