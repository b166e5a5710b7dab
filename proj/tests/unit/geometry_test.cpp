#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../support/samples.hpp"
#include "rotary/algebraic/expr.hpp"
#include "rotary/error.hpp"
#include "rotary/geometry/elliptic.hpp"
#include "rotary/geometry/graph.hpp"
#include "rotary/geometry/isometry.hpp"

namespace rotary {
namespace {

AlgReal E(const char* s) { return parse_expr(s); }
ProjPoint P(const char* a, const char* b, const char* c) { return make_point(E(a), E(b), E(c)); }
const ProjPoint e1 = ProjPoint::basis(0), e2 = ProjPoint::basis(1), e3 = ProjPoint::basis(2);

TEST(Point, MakeAndCanonicalize) {
  EXPECT_EQ(P("1", "0", "0"), e1);
  EXPECT_EQ(P("0", "0", "-3"), e3);
  ProjPoint h = P("1", "1", "0");
  EXPECT_EQ(h[0], E("sqrt(2)/2"));
  EXPECT_EQ(h[1], E("sqrt(2)/2"));
  EXPECT_EQ(P("-2", "4", "1"), P("2", "-4", "-1"));
  EXPECT_THROW(P("0", "0", "0"), Error);
}

TEST(Point, DistCos) {
  EXPECT_EQ(dist_cos(e1, e1), AlgReal(1));
  EXPECT_EQ(dist_cos(e1, e2), AlgReal(0));
  EXPECT_EQ(dist_cos(P("1", "1", "0"), e1), E("sqrt(2)/2"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    ProjPoint p = testing::random_integer_point(rng), q = testing::random_rational_point(rng);
    EXPECT_EQ(dist_cos(p, q), dist_cos(q, p));
    EXPECT_EQ(dist_cos(p, q) == AlgReal(1), p == q);
    EXPECT_EQ(dist_cos(p, p), AlgReal(1));
  }
}

TEST(Elliptic, EquidistantExamples) {
  const AlgReal c = E("4/5");
  ProjPoint o = equidistant_point(e1, e1, c);
  EXPECT_EQ(dist_cos(o, e1), c);
  ProjPoint q = P("7/25", "24/25", "0");
  o = equidistant_point(e1, q, c);
  EXPECT_EQ(dist_cos(o, e1), c);
  EXPECT_EQ(dist_cos(o, q), c);
  o = equidistant_point(e1, e2, E("1/2"));
  EXPECT_EQ(dist_cos(o, e1), E("1/2"));
  EXPECT_EQ(dist_cos(o, e2), E("1/2"));
  EXPECT_THROW(equidistant_point(e1, e2, c), Error);  // pi/2 > 2 arccos(4/5)
}

TEST(Elliptic, TwoBallCharacterization) {
  std::mt19937_64 rng(8);
  int feasible = 0;
  for (int i = 0; i < 100; ++i) {
    ProjPoint p = testing::random_rational_point(rng), q = testing::random_rational_point(rng);
    AlgReal c(testing::random_cos(rng, 1, 19, 20));
    bool predicate = within_two_steps(p, q, c);
    bool constructed = true;
    try {
      ProjPoint o = equidistant_point(p, q, c);
      EXPECT_EQ(dist_cos(o, p), c);
      EXPECT_EQ(dist_cos(o, q), c);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
      constructed = false;
    }
    EXPECT_EQ(predicate, constructed);
    feasible += constructed;
  }
  EXPECT_GT(feasible, 20);
  EXPECT_LT(feasible, 100);
}

TEST(Elliptic, CircleIntersect) {
  EXPECT_EQ(circle_intersect(e1, AlgReal(1), e2, AlgReal(0)), e1);
  EXPECT_EQ(circle_intersect(e1, E("3/5"), e2, E("4/5")), P("3/5", "4/5", "0"));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 15; ++i) {
    ProjPoint p = testing::random_rational_point(rng), q = testing::random_integer_point(rng);
    AlgReal c1(testing::random_cos(rng, 5, 19, 20)), c2(testing::random_cos(rng, 5, 19, 20));
    try {
      ProjPoint u = circle_intersect(p, c1, q, c2);
      EXPECT_EQ(dist_cos(u, p), c1);
      EXPECT_EQ(dist_cos(u, q), c2);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
    }
  }
  EXPECT_THROW(circle_intersect(e1, E("1"), e2, E("1")), Error);
}

TEST(Elliptic, GeodesicStep) {
  const AlgReal c = E("4/5");
  ProjPoint r = geodesic_step(e1, e2, c);
  EXPECT_EQ(r, P("4/5", "3/5", "0"));
  EXPECT_EQ(dist_cos(r, e2), E("3/5"));
  EXPECT_EQ(geodesic_remaining_cos(e1, e2, c), E("3/5"));
  ProjPoint q = P("4/5", "3/5", "0");
  EXPECT_EQ(geodesic_step(e1, q, c), q);
  EXPECT_THROW(geodesic_step(e1, e1, c), Error);
  EXPECT_THROW(geodesic_step(e1, P("1", "1/10", "0"), c), Error);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 10; ++i) {
    ProjPoint p = testing::random_rational_point(rng), qq = testing::random_rational_point(rng);
    if (compare(dist_cos(p, qq), E("9/10")) > 0) continue;
    ProjPoint s = geodesic_step(p, qq, E("9/10"));
    EXPECT_EQ(dist_cos(p, s), E("9/10"));
    EXPECT_EQ(dist_cos(s, qq), geodesic_remaining_cos(p, qq, E("9/10")));
  }
}

TEST(Elliptic, RotationAbout) {
  EXPECT_EQ(rotation_about(e3, AlgReal(1), AlgReal(0)), LinearMap::identity());
  EXPECT_EQ(apply(rotation_about(e3, AlgReal(0), AlgReal(1)), e1), e2);
  LinearMap r = rotation_about(e3, E("4/9"), E("sqrt(65)/9"));
  EXPECT_TRUE(is_orthogonal(r));
  EXPECT_EQ(r.determinant(), AlgReal(1));
  EXPECT_EQ(apply(r, e3), e3);
  EXPECT_THROW(rotation_about(e3, E("1/2"), E("1/2")), Error);
}

TEST(Elliptic, ApexAndLadder) {
  EXPECT_EQ(apex_angle_cos(E("4/5")), E("4/9"));
  EXPECT_EQ(apex_angle_cos(E("1/2")), E("1/3"));
  EXPECT_THROW(apex_angle_cos(E("1")), Error);
  // Float oracle: build an equilateral spherical triangle of side l and
  // measure the angle at a vertex between the tangent directions.
  for (double c : {0.8, 0.5, 0.3}) {
    const double s = std::sqrt(1 - c * c);
    const double a[3] = {0, 0, 1}, b[3] = {s, 0, c};
    // Third vertex: <v, a> = <v, b> = c, unit norm.
    const double vx = (c - c * c) / s, vz = c, vy = std::sqrt(1 - vx * vx - vz * vz);
    const double v[3] = {vx, vy, vz};
    double tb[3], tv[3], nb = 0, nv = 0, d = 0;
    for (int i = 0; i < 3; ++i) {
      tb[i] = b[i] - c * a[i];
      tv[i] = v[i] - c * a[i];
      nb += tb[i] * tb[i];
      nv += tv[i] * tv[i];
      d += tb[i] * tv[i];
    }
    EXPECT_NEAR(d / std::sqrt(nb * nv), c / (1 + c), 1e-12);
  }
  EXPECT_EQ(ell_n_cos(E("4/5"), 0), AlgReal(1));
  EXPECT_EQ(ell_n_cos(E("4/5"), 1), E("4/5"));
  EXPECT_EQ(ell_n_cos(E("4/5"), 2), E("19/45"));
}

TEST(Elliptic, LadderIsChoiceIndependent) {
  std::mt19937_64 rng(12);
  const AlgReal c = E("4/5");
  const AlgReal ca = apex_angle_cos(c);
  const AlgReal sa = sqrt_nonneg(AlgReal(1) - ca * ca);
  for (int i = 0; i < 20; ++i) {
    ProjPoint axis = testing::random_rational_point(rng);
    ProjPoint y = geodesic_step(axis, testing::random_rational_point(rng), c);
    const LinearMap r = rotation_about(axis, ca, sa);
    ProjPoint cur = y;
    const unsigned n_max = 1 + static_cast<unsigned>(i % 8);
    for (unsigned n = 1; n <= n_max; ++n) {
      cur = apply(r, cur);
      EXPECT_EQ(dist_cos(y, cur), ell_n_cos(c, n)) << "n=" << n;
    }
  }
}

TEST(Elliptic, WitnessRoundTrip) {
  const AlgReal c = E("4/5");
  for (unsigned n = 1; n <= 7; ++n) {
    ProjPoint q = ell_n_partner(e1, c, n);
    EXPECT_EQ(dist_cos(e1, q), ell_n_cos(c, n));
    EllNWitness w = construct_ell_n_witness(e1, q, c, n);
    ASSERT_EQ(w.chain.size(), n + 1);
    EXPECT_EQ(w.chain.front(), e1);
    EXPECT_EQ(w.chain.back(), q);
    EXPECT_TRUE(verify_ell_n_witness(w.o, w.chain, c));
    if (n >= 2) {
      auto bad = w.chain;
      bad[2] = bad[0];
      EXPECT_FALSE(verify_ell_n_witness(w.o, bad, c));
      bad = w.chain;
      bad[1] = e3;
      EXPECT_FALSE(verify_ell_n_witness(w.o, bad, c));
    }
  }
  EXPECT_THROW(construct_ell_n_witness(e1, e2, c, 2), Error);
}

TEST(Isometry, ApplyAndOrthogonal) {
  std::mt19937_64 rng(13);
  ProjPoint p = testing::random_integer_point(rng);
  EXPECT_EQ(apply(LinearMap::identity(), p), p);
  EXPECT_EQ(apply(LinearMap::diagonal(AlgReal(2), AlgReal(2), AlgReal(2)), p), p);
  EXPECT_TRUE(is_orthogonal(LinearMap::identity()));
  EXPECT_FALSE(is_orthogonal(LinearMap::diagonal(AlgReal(1), AlgReal(1), AlgReal(2))));
  EXPECT_TRUE(is_orthogonal(rotation_about(e3, E("3/5"), E("4/5"))));
  EXPECT_THROW(LinearMap::diagonal(AlgReal(1), AlgReal(0), AlgReal(1)), Error);
  for (int i = 0; i < 10; ++i) {
    LinearMap m1 = random_rational_orthogonal(rng()), m2 = random_rational_orthogonal(rng());
    EXPECT_TRUE(is_orthogonal(m1));
    EXPECT_EQ(m1.determinant(), AlgReal(1));
    EXPECT_EQ(apply(m1 * m2, p), apply(m1, apply(m2, p)));
    ProjPoint a = testing::random_rational_point(rng), b = testing::random_integer_point(rng);
    EXPECT_EQ(dist_cos(apply(m1, a), apply(m1, b)), dist_cos(a, b));
  }
  EXPECT_EQ(random_rational_orthogonal(42), random_rational_orthogonal(42));
}

TEST(Isometry, FixedPointExamples) {
  EXPECT_EQ(fixed_point(LinearMap::identity()), e1);
  EXPECT_EQ(fixed_point(rotation_about(e3, E("4/9"), E("sqrt(65)/9"))), e3);
  const AlgReal z(0), o(1);
  LinearMap m(LinearMap::Rows{Vec3{z, o, z}, Vec3{z, z, o}, Vec3{AlgReal(2), z, z}});
  ProjPoint p = fixed_point(m);
  EXPECT_EQ(apply(m, p), p);
  // Eigenvector for 2^(1/3) is (1, c, c^2) up to scale.
  EXPECT_EQ(p[1] / p[0], E("root(-2,0,0,1,0)"));
}

TEST(Isometry, FixedPointOfAlgebraicMap) {
  // Non-orthogonal map with irrational entries goes through the norm polynomial.
  const AlgReal z(0), o(1);
  LinearMap m(LinearMap::Rows{Vec3{E("sqrt(2)"), o, z}, Vec3{z, o, o}, Vec3{o, z, E("2")}});
  ProjPoint p = fixed_point(m);
  EXPECT_EQ(apply(m, p), p);
}

TEST(Isometry, FixedPointsOfRandomMaps) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int i = 0; i < 8; ++i) {
    LinearMap r = random_rational_orthogonal(rng());
    ProjPoint p = fixed_point(r);
    EXPECT_EQ(apply(r, p), p);
    // Eigenvalue exactly 1: the lift is in the kernel of r - I.
    Vec3 v = r * p.lift();
    EXPECT_EQ(v, p.lift());
  }
  for (int i = 0; i < 8; ++i) {
    LinearMap::Rows rows;
    for (auto& row : rows) {
      for (auto& v : row) v = AlgReal(entry(rng));
    }
    if (determinant(rows).is_zero()) continue;
    LinearMap m(rows);
    ProjPoint p = fixed_point(m);
    EXPECT_EQ(apply(m, p), p);
  }
}

TEST(Isometry, EdgeSamples) {
  const AlgReal c = E("4/5");
  std::vector<PointPair> sample{{e1, P("4/5", "3/5", "0")}, {e2, P("0", "4/5", "3/5")}, {e1, e2}};
  EXPECT_TRUE(preserves_edges_on_sample(random_rational_orthogonal(3), c, sample));
  EXPECT_TRUE(preserves_edges_on_sample(LinearMap::diagonal(AlgReal(1), AlgReal(1), AlgReal(2)), c, {}));
  // (4/5, 0, 3/5) is at distance l from e1; stretching z moves it off.
  std::vector<PointPair> edge{{e1, P("4/5", "0", "3/5")}};
  EXPECT_FALSE(preserves_edges_on_sample(LinearMap::diagonal(AlgReal(1), AlgReal(1), AlgReal(2)), c, edge));
}

TEST(Isometry, TransitivityWitness) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 10; ++i) {
    ProjPoint p = testing::random_rational_point(rng), q = testing::random_integer_point(rng);
    LinearMap r = rotation_sending(p, q);
    EXPECT_TRUE(is_orthogonal(r));
    EXPECT_EQ(r.determinant(), AlgReal(1));
    EXPECT_EQ(apply(r, p), q);
  }
}

TEST(Graph, Edges) {
  GraphSpec s = GraphSpec::make(E("4/5"));
  EXPECT_FALSE(is_edge(s, e1, e1));
  EXPECT_TRUE(is_edge(s, e1, P("4/5", "3/5", "0")));
  EXPECT_FALSE(is_edge(s, e1, e2));
  EXPECT_THROW(GraphSpec::make(E("1")), Error);
  EXPECT_THROW(GraphSpec::make(E("0")), Error);
}

TEST(Graph, DistanceAndPath) {
  GraphSpec s = GraphSpec::make(E("4/5"));
  EXPECT_EQ(graph_distance(s, e1, e1).distance, 0u);
  DistanceResult d = graph_distance(s, e1, e2);
  EXPECT_EQ(d.distance, 3u);
  // Lower bound d > 2l: cos d = 0 < T_2 = 7/25.
  ASSERT_TRUE(d.lower_bound_cos.has_value());
  EXPECT_EQ(*d.lower_bound_cos, E("7/25"));
  Path path = witness_path(s, e1, e2);
  EXPECT_EQ(path.length(), 3u);
  EXPECT_TRUE(is_valid_path(s, path));
  ProjPoint near = P("1", "1/10", "0");
  EXPECT_EQ(graph_distance(s, e1, near).distance, 2u);
  EXPECT_EQ(witness_path(s, e1, near).length(), 2u);
  EXPECT_EQ(witness_path(s, e1, P("4/5", "3/5", "0")).length(), 1u);
}

TEST(Graph, RandomPathsMatchDistance) {
  std::mt19937_64 rng(16);
  for (const char* cs : {"4/5", "7/8"}) {
    GraphSpec s = GraphSpec::make(E(cs));
    for (int i = 0; i < 12; ++i) {
      ProjPoint p = testing::random_rational_point(rng), q = testing::random_rational_point(rng);
      DistanceResult d = graph_distance(s, p, q);
      Path path = witness_path(s, p, q);
      EXPECT_TRUE(is_valid_path(s, path));
      EXPECT_EQ(path.length(), d.distance);
      if (d.lower_bound_cos) EXPECT_LT(compare(d.dist_cos, *d.lower_bound_cos), 0);
    }
  }
}

TEST(Graph, Diameter) {
  DiameterResult d = diameter(GraphSpec::make(E("4/5")));
  EXPECT_EQ(d.diameter, 3u);
  EXPECT_EQ(d.t_k, E("-44/125"));
  EXPECT_EQ(d.t_k_minus_1, E("7/25"));
  EXPECT_EQ(diameter(GraphSpec::make(E("7/8"))).diameter, 4u);
  // Float oracle: ceil((pi/2) / arccos(7/8)) = 4.
  EXPECT_EQ(std::ceil(M_PI / 2 / std::acos(7.0 / 8)), 4);
  DiameterResult loose = diameter(GraphSpec::make(E("1/10")));
  EXPECT_FALSE(loose.strict);
  EXPECT_EQ(loose.diameter, 2u);
}

TEST(Graph, ValidateSpec) {
  SpecReport r = validate_spec(GraphSpec::make(E("4/5")));
  EXPECT_TRUE(r.strict);
  EXPECT_EQ(r.cos_alpha, E("4/9"));
  EXPECT_FALSE(r.alpha_rational);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_FALSE(validate_spec(GraphSpec::make(E("1/2"))).strict);
  EXPECT_FALSE(validate_spec(GraphSpec::make(E("sqrt(2)/2"))).strict);
}

TEST(Graph, ChooseEll) {
  for (unsigned k = 3; k <= 7; ++k) {
    AlgReal c = choose_ell_for_diameter(k);
    GraphSpec s = GraphSpec::make(c);
    EXPECT_TRUE(c.is_rational());
    EXPECT_EQ(diameter(s).diameter, k);
    EXPECT_TRUE(validate_spec(s).hypotheses_hold);
  }
  EXPECT_THROW(choose_ell_for_diameter(2), Error);
  std::stop_source src;
  src.request_stop();
  EXPECT_THROW(choose_ell_for_diameter(5, src.get_token()), Error);
  EXPECT_THROW(choose_ell_for_diameter(40, {}, 3), Error);
}

TEST(Graph, RightAngleRegime) {
  EXPECT_TRUE(right_angle::is_edge(e1, e2));
  EXPECT_EQ(right_angle::distance(e1, e1), 0u);
  ProjPoint p = P("1", "2", "3"), q = P("3", "-1", "2");
  EXPECT_EQ(right_angle::distance(p, q), 2u);
  Path path = right_angle::witness_path(p, q);
  ASSERT_EQ(path.length(), 2u);
  EXPECT_TRUE(right_angle::is_edge(path.vertices[0], path.vertices[1]));
  EXPECT_TRUE(right_angle::is_edge(path.vertices[1], path.vertices[2]));
}

}  // namespace
}  // namespace rotary
