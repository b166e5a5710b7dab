#include "rotary/geometry/graph.hpp"

#include <cmath>
#include <numeric>

#include "rotary/error.hpp"

namespace rotary {

GraphSpec GraphSpec::make(const AlgReal& cos_l) {
  if (cos_l.sign() <= 0 || compare(cos_l, AlgReal(1)) >= 0) {
    throw Error(ErrorCode::kOutOfRange, "cos_l must lie strictly between 0 and 1");
  }
  return {cos_l, compare(AlgReal(2) * cos_l * cos_l, AlgReal(1)) > 0};
}

bool is_edge(const GraphSpec& spec, const ProjPoint& p, const ProjPoint& q) { return dist_cos(p, q) == spec.cos_l; }

unsigned quarter_turn_steps(const GraphSpec& spec) {
  AlgReal prev(1), cur = spec.cos_l;
  const AlgReal two_c = AlgReal(2) * spec.cos_l;
  unsigned k = 1;
  while (cur.sign() > 0) {
    AlgReal next = two_c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
    ++k;
  }
  return k;
}

bool within_k_steps(const GraphSpec& spec, const AlgReal& dcos, unsigned k) {
  if (k >= quarter_turn_steps(spec)) return true;
  return compare(dcos, chebyshev_T(k, spec.cos_l)) >= 0;
}

DistanceResult graph_distance(const GraphSpec& spec, const ProjPoint& p, const ProjPoint& q) {
  DistanceResult r;
  r.dist_cos = dist_cos(p, q);
  if (p == q) return r;
  if (r.dist_cos == spec.cos_l) {
    r.distance = 1;
    return r;
  }
  const unsigned big_k = quarter_turn_steps(spec);
  // Smallest k with d <= k l; below big_k the cosines decrease with k.
  unsigned k = 1;
  AlgReal prev(1), cur = spec.cos_l;
  const AlgReal two_c = AlgReal(2) * spec.cos_l;
  while (k < big_k && compare(r.dist_cos, cur) < 0) {
    AlgReal next = two_c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
    ++k;
  }
  r.upper_bound_cos = cur;
  r.wraps = k == big_k;
  if (k >= 2) r.lower_bound_cos = prev;
  if (k < 2) {
    // d < l: two edges are needed and suffice.
    k = 2;
    r.upper_bound_cos = chebyshev_T(2, spec.cos_l);
    r.lower_bound_cos.reset();
  }
  r.distance = k;
  return r;
}

Path witness_path(const GraphSpec& spec, const ProjPoint& p, const ProjPoint& q) {
  Path path{{p}};
  if (p == q) return path;
  ProjPoint cur = p;
  for (;;) {
    const AlgReal remaining = dist_cos(cur, q);
    if (remaining == spec.cos_l) {
      path.vertices.push_back(q);
      return path;
    }
    if (within_k_steps(spec, remaining, 2)) break;
    cur = geodesic_step(cur, q, spec.cos_l);
    path.vertices.push_back(cur);
  }
  path.vertices.push_back(equidistant_point(cur, q, spec.cos_l));
  path.vertices.push_back(q);
  return path;
}

bool is_valid_path(const GraphSpec& spec, const Path& path) {
  if (path.vertices.empty()) return false;
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    if (!is_edge(spec, path.vertices[i], path.vertices[i + 1])) return false;
  }
  return true;
}

DiameterResult diameter(const GraphSpec& spec) {
  DiameterResult r;
  r.strict = spec.strict;
  r.quarter_turn_steps = quarter_turn_steps(spec);
  r.diameter = std::max(2u, r.quarter_turn_steps);
  r.t_k = chebyshev_T(r.quarter_turn_steps, spec.cos_l);
  r.t_k_minus_1 = chebyshev_T(r.quarter_turn_steps - 1, spec.cos_l);
  return r;
}

SpecReport validate_spec(const GraphSpec& spec) {
  SpecReport r;
  r.strict = spec.strict;
  r.cos_alpha = apex_angle_cos(spec.cos_l);
  r.alpha_witness = rational_angle_witness(r.cos_alpha);
  r.alpha_rational = r.alpha_witness.has_value();
  r.hypotheses_hold = r.strict && !r.alpha_rational;
  return r;
}

AlgReal choose_ell_for_diameter(unsigned k, std::stop_token stop, long max_denominator) {
  if (k < 3) throw Error(ErrorCode::kPrecondition, "diameter search needs k >= 3");
  // K(cos l) = k exactly when cos l lies in (cos(pi/(2(k-1))), cos(pi/(2k))].
  const double lo = std::cos(M_PI / (2.0 * (k - 1)));
  const double hi = std::cos(M_PI / (2.0 * k));
  for (long den = 2; den <= max_denominator; ++den) {
    if (stop.stop_requested()) throw Error(ErrorCode::kCancelled, "search cancelled");
    // Float bounds only pick candidates; each one is checked exactly.
    const long first = static_cast<long>(std::floor(lo * den));
    const long last = static_cast<long>(std::ceil(hi * den));
    for (long num = std::max(first, 1L); num <= last && num < den; ++num) {
      if (std::gcd(num, den) != 1) continue;  // already tried with a smaller denominator
      const Rational c(num, den);
      const GraphSpec spec = GraphSpec::make(AlgReal(c));
      if (diameter(spec).diameter != k) continue;
      if (!validate_spec(spec).hypotheses_hold) continue;
      return spec.cos_l;
    }
  }
  throw Error(ErrorCode::kBoundExceeded, "no rational cos_l found below the denominator bound");
}

namespace right_angle {

bool is_edge(const ProjPoint& p, const ProjPoint& q) { return dist_cos(p, q).is_zero(); }

unsigned distance(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) return 0;
  return is_edge(p, q) ? 1 : 2;
}

Path witness_path(const ProjPoint& p, const ProjPoint& q) {
  switch (distance(p, q)) {
    case 0:
      return {{p}};
    case 1:
      return {{p, q}};
    default:
      return {{p, ProjPoint::from_vector(cross(p.lift(), q.lift())), q}};
  }
}

}  // namespace right_angle

}  // namespace rotary
