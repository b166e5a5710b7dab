#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "rotary/geometry/elliptic.hpp"

namespace rotary {

/// The graph on the projective plane joining points at distance exactly l.
struct GraphSpec {
  AlgReal cos_l;
  bool strict;  // l < pi/4, i.e. cos_l^2 > 1/2

  /// Throws kOutOfRange unless 0 < cos_l < 1.
  static GraphSpec make(const AlgReal& cos_l);
};

struct Path {
  std::vector<ProjPoint> vertices;
  size_t length() const { return vertices.size() - 1; }
};

bool is_edge(const GraphSpec& spec, const ProjPoint& p, const ProjPoint& q);

/// Whether d <= k l for an elliptic distance with cosine `dcos`.
bool within_k_steps(const GraphSpec& spec, const AlgReal& dcos, unsigned k);

/// Smallest k with T_k(cos_l) <= 0, i.e. ceil((pi/2) / l).
unsigned quarter_turn_steps(const GraphSpec& spec);

struct DistanceResult {
  unsigned distance = 0;
  AlgReal dist_cos;
  // d > (k - 1) l: dist_cos < T_{k-1}(cos_l); present when distance >= 2.
  std::optional<AlgReal> lower_bound_cos;
  // d <= k l: dist_cos >= T_k(cos_l), or T_k(cos_l) <= 0 (wrap-around).
  std::optional<AlgReal> upper_bound_cos;
  bool wraps = false;
};

DistanceResult graph_distance(const GraphSpec& spec, const ProjPoint& p, const ProjPoint& q);

/// Path of length graph_distance from p to q; every step an exact edge.
Path witness_path(const GraphSpec& spec, const ProjPoint& p, const ProjPoint& q);

bool is_valid_path(const GraphSpec& spec, const Path& path);

struct DiameterResult {
  unsigned diameter = 0;
  bool strict = false;
  unsigned quarter_turn_steps = 0;
  AlgReal t_k;          // T_K(cos_l) <= 0
  AlgReal t_k_minus_1;  // T_{K-1}(cos_l) > 0
};

DiameterResult diameter(const GraphSpec& spec);

struct SpecReport {
  bool strict = false;
  AlgReal cos_alpha;
  bool alpha_rational = false;
  std::optional<std::string> alpha_witness;
  bool hypotheses_hold = false;  // strict and the apex angle is not in pi*Q
};

SpecReport validate_spec(const GraphSpec& spec);

/// Rational cos_l with diameter k, strict regime and apex angle outside
/// pi*Q. Requires k >= 3; throws kBoundExceeded past `max_denominator` and
/// kCancelled when `stop` is requested.
AlgReal choose_ell_for_diameter(unsigned k, std::stop_token stop = {}, long max_denominator = 1000000);

/// The l = pi/2 graph, where edges join orthogonal points and any two
/// points are at most two steps apart.
namespace right_angle {
bool is_edge(const ProjPoint& p, const ProjPoint& q);
unsigned distance(const ProjPoint& p, const ProjPoint& q);
Path witness_path(const ProjPoint& p, const ProjPoint& q);
}  // namespace right_angle

}  // namespace rotary
