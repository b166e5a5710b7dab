#include "rotary/geometry/point.hpp"

#include "rotary/error.hpp"

namespace rotary {

AlgReal dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
Vec3 operator*(const AlgReal& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

ProjPoint ProjPoint::from_unit(const Vec3& unit) {
  for (const AlgReal& c : unit) {
    const int s = c.sign();
    if (s > 0) return ProjPoint(unit);
    if (s < 0) return ProjPoint(-unit);
  }
  throw Error(ErrorCode::kZeroVector, "zero vector does not span a line");
}

ProjPoint ProjPoint::from_vector(const Vec3& v) {
  if (is_zero(v)) throw Error(ErrorCode::kZeroVector, "zero vector does not span a line");
  const AlgReal n2 = dot(v, v);
  if (n2 == AlgReal(1)) return from_unit(v);
  return from_unit((AlgReal(1) / sqrt_nonneg(n2)) * v);
}

ProjPoint ProjPoint::basis(int i) {
  Vec3 v{AlgReal(0), AlgReal(0), AlgReal(0)};
  v.at(static_cast<size_t>(i)) = AlgReal(1);
  return ProjPoint(v);
}

ProjPoint make_point(const AlgReal& a, const AlgReal& b, const AlgReal& c) {
  return ProjPoint::from_vector({a, b, c});
}

AlgReal dist_cos(const ProjPoint& p, const ProjPoint& q) {
  AlgReal t = dot(p.lift(), q.lift());
  return t.sign() < 0 ? -t : t;
}

Vec3 aligned_lift(const ProjPoint& p, const ProjPoint& q) {
  return dot(p.lift(), q.lift()).sign() < 0 ? -q.lift() : q.lift();
}

}  // namespace rotary
