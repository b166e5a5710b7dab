#include "rotary/geometry/elliptic.hpp"

#include "rotary/error.hpp"

namespace rotary {
namespace {

const AlgReal& one() {
  static const AlgReal v(1);
  return v;
}

void require_open_unit(const DistCos& c, const char* what) {
  if (c.sign() <= 0 || compare(c, one()) >= 0) {
    throw Error(ErrorCode::kOutOfRange, std::string(what) + " must lie strictly between 0 and 1");
  }
}

void require_closed_unit(const DistCos& c, const char* what) {
  if (c.sign() < 0 || compare(c, one()) > 0) {
    throw Error(ErrorCode::kOutOfRange, std::string(what) + " must lie in [0, 1]");
  }
}

// A nonzero vector orthogonal to the unit vectors x and y (Gram-Schmidt
// from the first usable basis vector when x and y are parallel).
Vec3 orthogonal_to(const Vec3& x, const Vec3& y) {
  Vec3 z = cross(x, y);
  if (!is_zero(z)) return z;
  for (int i = 0; i < 3; ++i) {
    Vec3 e = ProjPoint::basis(i).lift();
    Vec3 g = e - dot(e, x) * x;
    if (!is_zero(g)) return g;
  }
  throw Error(ErrorCode::kInternal, "no orthogonal direction");
}

// Unit u with <u, x> = c1 and <u, y> = c2 for unit x, y (t = <x, y>), taking
// the non-negative multiple of the orthogonal direction.
std::optional<Vec3> solve_two_products(const Vec3& x, const Vec3& y, const AlgReal& c1, const AlgReal& c2) {
  const AlgReal t = dot(x, y);
  const AlgReal denom = one() - t * t;
  const Vec3 z = orthogonal_to(x, y);
  const AlgReal zz = dot(z, z);
  if (denom.is_zero()) {
    // x = +-y: need c2 = t c1; then u = c1 x + mu z.
    if (c2 != t * c1) return std::nullopt;
    const AlgReal rest = one() - c1 * c1;
    if (rest.sign() < 0) return std::nullopt;
    const AlgReal mu = sqrt_nonneg(rest / zz);
    return c1 * x + mu * z;
  }
  const AlgReal a = (c1 - t * c2) / denom;
  const AlgReal b = (c2 - t * c1) / denom;
  const AlgReal rest = one() - a * c1 - b * c2;
  if (rest.sign() < 0) return std::nullopt;
  const AlgReal mu = sqrt_nonneg(rest / zz);
  return a * x + b * y + mu * z;
}

}  // namespace

bool within_two_steps(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l) {
  const AlgReal t2 = AlgReal(2) * cos_l * cos_l - one();
  return t2.sign() <= 0 || compare(dist_cos(p, q), t2) >= 0;
}

ProjPoint equidistant_point(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l) {
  require_open_unit(cos_l, "cos_l");
  if (!within_two_steps(p, q, cos_l)) throw Error(ErrorCode::kInfeasible, "d(p, q) exceeds 2l");
  const Vec3& x = p.lift();
  const Vec3 y = aligned_lift(p, q);
  const AlgReal t = dot(x, y);
  const Vec3 z = orthogonal_to(x, y);
  // cos^2 l ||x + y + lz||^2 = <x, x + y>^2 gives
  // l^2 = (1 + t)(1 + t - 2c^2) / (c^2 ||z||^2) and ||x + y + lz|| = (1 + t) / c.
  const AlgReal s = one() + t;
  const AlgReal c2 = cos_l * cos_l;
  const AlgReal lambda = sqrt_nonneg(s * (s - AlgReal(2) * c2) / (c2 * dot(z, z)));
  return ProjPoint::from_unit((cos_l / s) * (x + y + lambda * z));
}

ProjPoint circle_intersect(const ProjPoint& p, const DistCos& cos_r1, const ProjPoint& q, const DistCos& cos_r2) {
  require_closed_unit(cos_r1, "cos_r1");
  require_closed_unit(cos_r2, "cos_r2");
  const Vec3& x = p.lift();
  const Vec3 y = aligned_lift(p, q);
  for (int sign : {1, -1}) {
    if (sign < 0 && cos_r2.is_zero()) break;
    const AlgReal c2 = sign > 0 ? cos_r2 : -cos_r2;
    if (auto u = solve_two_products(x, y, cos_r1, c2)) return ProjPoint::from_unit(*u);
  }
  throw Error(ErrorCode::kInfeasible, "circles do not intersect");
}

ProjPoint geodesic_step(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l) {
  require_closed_unit(cos_l, "cos_l");
  if (p == q) throw Error(ErrorCode::kPrecondition, "geodesic step needs distinct points");
  const Vec3& x = p.lift();
  const Vec3 y = aligned_lift(p, q);
  const AlgReal t = dot(x, y);
  if (compare(cos_l, t) < 0) throw Error(ErrorCode::kPrecondition, "step longer than the remaining distance");
  const AlgReal s = sqrt_nonneg(one() - cos_l * cos_l);
  const AlgReal sin_d = sqrt_nonneg(one() - t * t);
  return ProjPoint::from_unit(cos_l * x + (s / sin_d) * (y - t * x));
}

AlgReal geodesic_remaining_cos(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l) {
  const AlgReal t = dist_cos(p, q);
  return t * cos_l + sqrt_nonneg(one() - t * t) * sqrt_nonneg(one() - cos_l * cos_l);
}

LinearMap rotation_about(const ProjPoint& axis, const AlgReal& cos_a, const AlgReal& sin_a) {
  if (cos_a * cos_a + sin_a * sin_a != one()) {
    throw Error(ErrorCode::kPrecondition, "cos_a^2 + sin_a^2 must equal 1");
  }
  const Vec3& k = axis.lift();
  const AlgReal v = one() - cos_a;
  const AlgReal z(0);
  // [k]x, the cross-product matrix.
  const LinearMap::Rows kx{Vec3{z, -k[2], k[1]}, Vec3{k[2], z, -k[0]}, Vec3{-k[1], k[0], z}};
  LinearMap::Rows r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r[i][j] = (i == j ? cos_a : z) + sin_a * kx[i][j] + v * k[i] * k[j];
    }
  }
  return LinearMap(std::move(r));
}

AlgReal apex_angle_cos(const DistCos& cos_l) {
  require_open_unit(cos_l, "cos_l");
  return cos_l / (one() + cos_l);
}

DistCos ell_n_cos(const DistCos& cos_l, unsigned n) {
  require_open_unit(cos_l, "cos_l");
  if (n == 0) return one();
  const AlgReal c2 = cos_l * cos_l;
  AlgReal v = c2 + (one() - c2) * chebyshev_T(n, apex_angle_cos(cos_l));
  return v.sign() < 0 ? -v : v;
}

EllNWitness construct_ell_n_witness(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l, unsigned n) {
  require_open_unit(cos_l, "cos_l");
  if (n == 0) throw Error(ErrorCode::kPrecondition, "n must be positive");
  const AlgReal cos_a = apex_angle_cos(cos_l);
  const AlgReal c2 = cos_l * cos_l;
  // Signed <x, R^n x> for a rotation by angle a about a centre at distance l.
  const AlgReal signed_target = c2 + (one() - c2) * chebyshev_T(n, cos_a);
  const Vec3& x = p.lift();
  const AlgReal t = dot(x, q.lift());
  Vec3 y;
  if (t == signed_target) {
    y = q.lift();
  } else if (-t == signed_target) {
    y = -q.lift();
  } else {
    throw Error(ErrorCode::kPrecondition, "dist_cos(p, q) differs from ell_n_cos(cos_l, n)");
  }
  auto u = solve_two_products(x, y, cos_l, cos_l);
  if (!u) throw Error(ErrorCode::kInternal, "no centre for the witness chain");
  const ProjPoint o = ProjPoint::from_unit(*u);
  const AlgReal sin_a = sqrt_nonneg(one() - cos_a * cos_a);
  for (const AlgReal& s : {sin_a, -sin_a}) {
    const LinearMap r = rotation_about(o, cos_a, s);
    std::vector<ProjPoint> chain{p};
    for (unsigned i = 0; i < n; ++i) chain.push_back(apply(r, chain.back()));
    if (chain.back() == q) return {o, std::move(chain)};
  }
  throw Error(ErrorCode::kInternal, "neither orientation reaches q");
}

bool verify_ell_n_witness(const ProjPoint& o, const std::vector<ProjPoint>& chain, const DistCos& cos_l) {
  if (chain.empty()) throw Error(ErrorCode::kPrecondition, "witness chain is empty");
  for (const auto& pt : chain) {
    if (dist_cos(pt, o) != cos_l) return false;
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (dist_cos(chain[i], chain[i + 1]) != cos_l) return false;
  }
  for (size_t i = 0; i + 2 < chain.size(); ++i) {
    if (chain[i] == chain[i + 2]) return false;
  }
  return true;
}

ProjPoint ell_n_partner(const ProjPoint& p, const DistCos& cos_l, unsigned n) {
  const ProjPoint o = equidistant_point(p, p, cos_l);
  const AlgReal cos_a = apex_angle_cos(cos_l);
  const LinearMap r = rotation_about(o, cos_a, sqrt_nonneg(one() - cos_a * cos_a));
  ProjPoint cur = p;
  for (unsigned i = 0; i < n; ++i) cur = apply(r, cur);
  return cur;
}

}  // namespace rotary
