#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rotary {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, int degree) {
    std::vector<T> c(static_cast<size_t>(degree) + 1, T(0));
    c.back() = v;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& lead() const { return c_.back(); }
  size_t size() const { return c_.size(); }

  /// Coefficient of x^i, zero past the degree.
  T operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0);
  }
  const std::vector<T>& coeffs() const { return c_; }

  void set(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, T(0));
    c_[i] = v;
    trim();
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    if (s == 0) return Poly();
    Poly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

 private:
  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);

/// Gcd of the coefficients (non-negative; zero for the zero polynomial).
Integer content(const IntPoly& p);

/// Divides out the content and makes the leading coefficient positive.
IntPoly primitive_part(const IntPoly& p);

/// Clears denominators and returns the primitive integer polynomial with
/// positive leading coefficient spanning the same line.
IntPoly primitive_part(const RatPoly& p);

RatPoly monic(const RatPoly& p);

/// Euclidean division over Q. Throws on division by the zero polynomial.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
IntPoly gcd(const IntPoly& a, const IntPoly& b);

struct XgcdResult {
  RatPoly g, s, t;  // s*a + t*b = g, g monic
};
XgcdResult xgcd(const RatPoly& a, const RatPoly& b);

/// Quotient a / b when b divides a exactly over Z, otherwise nullopt.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Product of the distinct irreducible factors (primitive, lc > 0).
IntPoly squarefree_part(const IntPoly& p);

/// Sign of p at a rational point, computed exactly.
int sign_at(const IntPoly& p, const Rational& x);
Rational eval_at(const IntPoly& p, const Rational& x);

/// Polynomial composition p(q(x)).
RatPoly compose(const RatPoly& p, const RatPoly& q);

/// Exact resultant of integer polynomials (multi-modular).
Integer resultant(const IntPoly& a, const IntPoly& b);

/// `[c0, c1, ...]` ascending.
std::string to_string(const IntPoly& p);

}  // namespace rotary
