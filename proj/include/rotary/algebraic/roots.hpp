#pragma once

#include <vector>

#include "rotary/algebraic/poly.hpp"

namespace rotary {

/// Closed rational interval [lo, hi]; lo == hi denotes an exact point.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

/// Widens an interval outward to dyadic endpoints with `bits` fractional
/// bits, keeping the rational numbers in interval computations small.
Interval round_outward(const Interval& a, int bits);

/// Interval Horner evaluation of a rational polynomial.
Interval eval(const RatPoly& p, const Interval& x, int bits);

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  /// Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots in the closed interval [a, b].
  int count_closed(const Rational& a, const Rational& b) const;
  /// Number of real roots strictly below x.
  int count_below(const Rational& x) const;
  int total() const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int sign) const;

  std::vector<IntPoly> chain_;
};

/// Power of two strictly bounding the absolute value of every real root.
Rational root_bound(const IntPoly& p);

/// Isolating intervals for the distinct real roots of a squarefree
/// polynomial, ascending. Rational roots come back as point intervals;
/// every other interval has non-root dyadic endpoints.
std::vector<Interval> isolate_real_roots(const IntPoly& squarefree);

/// Halves an isolating interval (lo, hi) of a simple root, using the
/// sign of p at hi, until its width is at most 2^-bits. Point intervals
/// are returned unchanged.
Interval refine_root(const IntPoly& p, Interval iv, int bits);

/// `2^-bits` as a rational.
Rational pow2_neg(int bits);

}  // namespace rotary
