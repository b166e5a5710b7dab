#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rotary/algebraic/number_field.hpp"
#include "rotary/algebraic/poly.hpp"
#include "rotary/algebraic/roots.hpp"

namespace rotary {

/// Exact real algebraic number. Internally an element of an interned
/// number field; the minimal polynomial and an isolating interval are
/// derived on request.
class AlgReal {
 public:
  AlgReal() : field_(NumberField::rationals()) {}
  AlgReal(long v) : AlgReal(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  AlgReal(const Rational& v);                 // NOLINT(google-explicit-constructor)
  AlgReal(NumberField::Ptr field, RatPoly coords);

  const NumberField::Ptr& field() const { return field_; }
  const RatPoly& coords() const { return coords_; }

  bool is_rational() const { return field_->is_rational(); }
  bool is_zero() const { return coords_.is_zero(); }
  /// Throws unless is_rational().
  Rational rational_value() const;

  /// Primitive, irreducible, positive leading coefficient.
  IntPoly min_poly() const;
  /// Interval containing exactly one root of min_poly(), namely this value.
  Interval isolating_interval() const;
  /// Enclosure of width at most 2^-bits.
  Interval approx(int bits) const;
  double to_double() const;
  int sign() const;

  friend AlgReal operator+(const AlgReal& a, const AlgReal& b);
  friend AlgReal operator-(const AlgReal& a, const AlgReal& b);
  friend AlgReal operator*(const AlgReal& a, const AlgReal& b);
  friend AlgReal operator/(const AlgReal& a, const AlgReal& b);
  AlgReal operator-() const { return AlgReal(field_, -coords_); }
  AlgReal& operator+=(const AlgReal& o) { return *this = *this + o; }
  AlgReal& operator-=(const AlgReal& o) { return *this = *this - o; }
  AlgReal& operator*=(const AlgReal& o) { return *this = *this * o; }

  friend bool operator==(const AlgReal& a, const AlgReal& b);
  friend std::strong_ordering operator<=>(const AlgReal& a, const AlgReal& b);

 private:
  NumberField::Ptr field_;
  RatPoly coords_;
};

/// -1, 0 or 1.
int compare(const AlgReal& a, const AlgReal& b);

AlgReal sqrt_nonneg(const AlgReal& a);

/// Distinct real roots in ascending order.
std::vector<AlgReal> real_roots(const IntPoly& p);

/// cos(n arccos c); requires -1 <= c <= 1.
AlgReal chebyshev_T(unsigned n, const AlgReal& c);

/// Whether arccos(c) is a rational multiple of pi; requires -1 <= c <= 1.
bool is_rational_angle(const AlgReal& c);
/// arccos(c) as a multiple of pi ("0", "pi/3", "2*pi/5", "pi") when it is
/// rational, otherwise nullopt.
std::optional<std::string> rational_angle_witness(const AlgReal& c);

/// Rational within 2^-bits of a.
Rational to_float(const AlgReal& a, int bits);

/// n-th cyclotomic polynomial.
IntPoly cyclotomic(int n);

}  // namespace rotary
