#pragma once

#include <optional>
#include <vector>

#include "rotary/geometry/isometry.hpp"
#include "rotary/geometry/point.hpp"

namespace rotary {

/// Distances are carried as their cosines, a value in [0, 1].
using DistCos = AlgReal;

/// A point o with dist_cos(o, p) = dist_cos(o, q) = cos_l. Requires
/// 0 < cos_l < 1 and d(p, q) <= 2l; throws kInfeasible otherwise.
ProjPoint equidistant_point(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l);

/// Whether d(p, q) <= 2l, decided exactly.
bool within_two_steps(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l);

/// A point at cosine-distance cos_r1 from p and cos_r2 from q.
ProjPoint circle_intersect(const ProjPoint& p, const DistCos& cos_r1, const ProjPoint& q, const DistCos& cos_r2);

/// The point at distance l from p on the geodesic toward q. Requires p != q
/// and l <= d(p, q).
ProjPoint geodesic_step(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l);
/// cos(d(p, q) - l) by angle subtraction.
AlgReal geodesic_remaining_cos(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l);

/// Rotation by angle a about the axis (Rodrigues). Requires cos_a^2 + sin_a^2 = 1.
LinearMap rotation_about(const ProjPoint& axis, const AlgReal& cos_a, const AlgReal& sin_a);

/// cos of the apex angle of the equilateral spherical triangle of side l.
AlgReal apex_angle_cos(const DistCos& cos_l);

/// cos l_n = |cos^2 l + sin^2 l * T_n(cos a)|, with l_0 = 0.
DistCos ell_n_cos(const DistCos& cos_l, unsigned n);

struct EllNWitness {
  ProjPoint o;
  std::vector<ProjPoint> chain;
};

/// Centre o and chain p = p_0, ..., p_n = q on the circle of radius l about
/// o, consecutive points l apart. Requires dist_cos(p, q) = ell_n_cos(cos_l, n).
EllNWitness construct_ell_n_witness(const ProjPoint& p, const ProjPoint& q, const DistCos& cos_l, unsigned n);

bool verify_ell_n_witness(const ProjPoint& o, const std::vector<ProjPoint>& chain, const DistCos& cos_l);

/// A point at distance l_n from p, obtained by rotating p n times about a
/// centre at distance l.
ProjPoint ell_n_partner(const ProjPoint& p, const DistCos& cos_l, unsigned n);

}  // namespace rotary
