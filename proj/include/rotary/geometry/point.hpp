#pragma once

#include <array>
#include <string>

#include "rotary/algebraic/alg_real.hpp"

namespace rotary {

using Vec3 = std::array<AlgReal, 3>;

AlgReal dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const AlgReal& s, const Vec3& v);
bool is_zero(const Vec3& v);

/// Point of the projective plane, stored as its canonical unit lift: the
/// first nonzero coordinate is positive, so equal points have equal lifts.
class ProjPoint {
 public:
  /// Normalizes any nonzero vector. Throws kZeroVector on (0, 0, 0).
  static ProjPoint from_vector(const Vec3& v);
  /// Skips the square root; `unit` must already have norm 1.
  static ProjPoint from_unit(const Vec3& unit);
  static ProjPoint basis(int i);

  const Vec3& lift() const { return lift_; }
  const AlgReal& operator[](int i) const { return lift_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.lift_ == b.lift_; }

 private:
  explicit ProjPoint(Vec3 lift) : lift_(std::move(lift)) {}
  Vec3 lift_;
};

ProjPoint make_point(const AlgReal& a, const AlgReal& b, const AlgReal& c);

/// Cosine of the elliptic distance, |<lift p, lift q>|, in [0, 1].
AlgReal dist_cos(const ProjPoint& p, const ProjPoint& q);

/// Unit lift of q with non-negative inner product against lift(p).
Vec3 aligned_lift(const ProjPoint& p, const ProjPoint& q);

}  // namespace rotary
