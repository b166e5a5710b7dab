#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>
#include <random>

#include "rotary/algebraic/alg_real.hpp"
#include "rotary/algebraic/expr.hpp"
#include "rotary/error.hpp"

namespace rotary {
namespace {

AlgReal E(const char* s) { return parse_expr(s); }

// 200-bit MPFR value, used as an independent oracle.
class Big {
 public:
  Big() { mpfr_init2(v_, 200); mpfr_set_zero(v_, 1); }
  explicit Big(const Rational& q) : Big() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Big(const Big& o) : Big() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Big& operator=(const Big& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Big() { mpfr_clear(v_); }
  friend Big operator+(const Big& a, const Big& b) { Big r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Big operator-(const Big& a, const Big& b) { Big r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Big operator*(const Big& a, const Big& b) { Big r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Big sqrt(const Big& a) { Big r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Sign if |v| is clearly above the working precision, otherwise 0.
  int confident_sign() const {
    if (mpfr_zero_p(v_) || mpfr_get_exp(v_) < -150) return 0;
    return mpfr_sgn(v_);
  }

 private:
  mpfr_t v_;
};

TEST(AlgReal, SpecExamples) {
  EXPECT_EQ(E("1/2") + E("1/2"), AlgReal(1));
  EXPECT_EQ(E("sqrt(2)") * E("sqrt(2)"), AlgReal(2));
  EXPECT_LT(E("sqrt(2)") + E("sqrt(3)"), E("sqrt(10)"));
  EXPECT_EQ(compare(AlgReal(0), AlgReal(0)), 0);
  EXPECT_LT(E("sqrt(2)"), E("3/2"));
  EXPECT_GT(E("root(-2,0,0,1,0)"), E("5/4"));
  EXPECT_EQ(sqrt_nonneg(AlgReal(0)), AlgReal(0));
  EXPECT_EQ(sqrt_nonneg(AlgReal(4)), AlgReal(2));
  EXPECT_EQ(sqrt_nonneg(sqrt_nonneg(AlgReal(16))), AlgReal(2));
  EXPECT_THROW(sqrt_nonneg(AlgReal(-1)), Error);
  EXPECT_THROW(AlgReal(1) / AlgReal(0), Error);
}

TEST(AlgReal, RealRoots) {
  EXPECT_TRUE(real_roots(IntPoly{1, 0, 1}).empty());
  auto r = real_roots(IntPoly{-2, 0, 1});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], -E("sqrt(2)"));
  EXPECT_EQ(r[1], E("sqrt(2)"));
  auto c = real_roots(IntPoly{-2, 0, 0, 1});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c[0].to_double(), 1.2599210498948732, 1e-15);
  EXPECT_THROW(real_roots(IntPoly()), Error);
}

TEST(AlgReal, RealRootsOfProductMerge) {
  IntPoly p{-2, 0, 0, 1}, q{1, -3, 0, 1};
  auto rp = real_roots(p), rq = real_roots(q), rpq = real_roots(p * q);
  std::vector<AlgReal> merged = rp;
  merged.insert(merged.end(), rq.begin(), rq.end());
  std::sort(merged.begin(), merged.end());
  ASSERT_EQ(merged.size(), rpq.size());
  for (size_t i = 0; i < merged.size(); ++i) EXPECT_EQ(merged[i], rpq[i]);
}

TEST(AlgReal, MinPolyAndInterval) {
  AlgReal a = E("sqrt(2)+sqrt(3)");
  EXPECT_EQ(a.min_poly(), (IntPoly{1, 0, -10, 0, 1}));
  Interval iv = a.isolating_interval();
  EXPECT_EQ(SturmSequence(a.min_poly()).count_closed(iv.lo, iv.hi), 1);
  EXPECT_LT(iv.lo, Rational(31463, 10000));
  EXPECT_GT(iv.hi, Rational(31462, 10000));
  EXPECT_EQ(AlgReal(Rational(3, 7)).min_poly(), (IntPoly{-3, 7}));
}

TEST(AlgReal, ToFloat) {
  EXPECT_LE(abs(to_float(AlgReal(Rational(1, 3)), 10) - Rational(1, 3)), pow2_neg(10));
  EXPECT_NEAR(to_float(E("sqrt(2)"), 30).get_d(), 1.41421356, 1e-8);
  EXPECT_EQ(to_float(AlgReal(0), 1), 0);
}

TEST(AlgReal, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(3);
  std::vector<AlgReal> pool{E("sqrt(2)"), E("sqrt(3)"), E("1/3"), E("root(-2,0,0,1,0)"), E("sqrt(5)-1"),
                            E("2/7*sqrt(2)+1")};
  for (int t = 0; t < 25; ++t) {
    const AlgReal& a = pool[rng() % pool.size()];
    const AlgReal& b = pool[rng() % pool.size()];
    const AlgReal& c = pool[rng() % pool.size()];
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    if (!a.is_zero()) EXPECT_EQ(a * (AlgReal(1) / a), AlgReal(1));
    EXPECT_EQ(a - a, AlgReal(0));
  }
}

TEST(AlgReal, SqrtSquaresBack) {
  for (const char* s : {"2", "7/3", "sqrt(2)", "1+sqrt(3)", "root(-2,0,0,1,0)", "9/16", "3+2*sqrt(2)"}) {
    AlgReal a = E(s);
    AlgReal r = sqrt_nonneg(a);
    EXPECT_EQ(r * r, a) << s;
    EXPECT_GE(r.sign(), 0);
  }
  // 3 + 2 sqrt2 = (1 + sqrt2)^2 stays in Q(sqrt2).
  EXPECT_EQ(sqrt_nonneg(E("3+2*sqrt(2)")), E("1+sqrt(2)"));
  EXPECT_EQ(sqrt_nonneg(E("3+2*sqrt(2)")).field()->degree(), 2);
}

TEST(AlgReal, CompareAgreesWithOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(1, 30);
  for (int t = 0; t < 60; ++t) {
    Rational p(small(rng)), q(small(rng)), r(small(rng), small(rng)), s(small(rng), 7);
    r.canonicalize();
    s.canonicalize();
    AlgReal a = sqrt_nonneg(AlgReal(p)) + sqrt_nonneg(AlgReal(q)) * AlgReal(r);
    AlgReal b = sqrt_nonneg(AlgReal(s)) * AlgReal(3) + AlgReal(r);
    Big ba = sqrt(Big(p)) + sqrt(Big(q)) * Big(r);
    Big bb = sqrt(Big(s)) * Big(Rational(3)) + Big(r);
    const int oracle = (ba - bb).confident_sign();
    if (oracle != 0) EXPECT_EQ(compare(a, b), oracle);
  }
}

TEST(AlgReal, Chebyshev) {
  EXPECT_EQ(chebyshev_T(0, E("4/5")), AlgReal(1));
  EXPECT_EQ(chebyshev_T(2, E("4/5")), E("7/25"));
  // 4c^3 - 3c at c = 4/5; float oracle cos(3 acos 0.8) = -0.352.
  EXPECT_EQ(chebyshev_T(3, E("4/5")), E("-44/125"));
  EXPECT_NEAR(std::cos(3 * std::acos(0.8)), -0.352, 1e-12);
  EXPECT_THROW(chebyshev_T(2, E("6/5")), Error);
  for (const char* s : {"4/5", "sqrt(2)/3", "1/7"}) {
    AlgReal c = E(s);
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(chebyshev_T(m, chebyshev_T(n, c)), chebyshev_T(m * n, c));
    }
  }
}

IntPoly chebyshev_poly(int n) {
  IntPoly prev{1}, cur{0, 1};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    IntPoly next = IntPoly{0, 2} * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

TEST(AlgReal, RationalAngleDecision) {
  for (const char* s : {"1", "sqrt(3)/2", "sqrt(2)/2", "1/2", "0", "-1/2", "-1"}) {
    EXPECT_TRUE(is_rational_angle(E(s))) << s;
  }
  for (const char* s : {"1/3", "4/9", "2/5", "sqrt(2)/3", "4/5"}) EXPECT_FALSE(is_rational_angle(E(s))) << s;
  EXPECT_EQ(*rational_angle_witness(E("1/2")), "pi/3");
  EXPECT_EQ(*rational_angle_witness(E("-1")), "pi");
  EXPECT_EQ(*rational_angle_witness(E("sqrt(2)/2")), "pi/4");
  EXPECT_EQ(*rational_angle_witness(E("-sqrt(3)/2")), "5*pi/6");
  EXPECT_FALSE(rational_angle_witness(E("4/9")).has_value());
  EXPECT_THROW(is_rational_angle(E("3/2")), Error);
}

TEST(AlgReal, CosinesOfRationalAnglesAreDetected) {
  // Roots of T_q(x) = +-1 are exactly cos(pi j / q).
  for (int q = 1; q <= 12; ++q) {
    for (int sgn : {1, -1}) {
      IntPoly p = chebyshev_poly(q) - IntPoly{sgn};
      for (const AlgReal& c : real_roots(p)) EXPECT_TRUE(is_rational_angle(c)) << "q=" << q;
    }
  }
  for (int d = 2; d <= 12; ++d) {
    for (int n = 1; n < d; ++n) {
      Rational c(n, d);
      c.canonicalize();
      if (c.get_den() == 2) continue;
      EXPECT_FALSE(is_rational_angle(AlgReal(c)));
    }
  }
}

TEST(Expr, RoundTrip) {
  for (const char* s : {"3/4", "-2", "sqrt(2)", "-sqrt(3)/2", "1/2+sqrt(5)/3", "root(-2,0,0,1,0)",
                        "sqrt(2)+sqrt(3)", "(1+sqrt(5))/2", "root(1,-3,0,1,1)"}) {
    AlgReal a = E(s);
    std::string f = format_expr(a);
    EXPECT_EQ(E(f.c_str()), a) << s << " -> " << f;
  }
  EXPECT_EQ(format_expr(E("(1+sqrt(5))/2")), "1/2+1/2*sqrt(5)");
  EXPECT_EQ(format_expr(E("-sqrt(8)")), "-2*sqrt(2)");
  EXPECT_EQ(format_expr(E("root(-2,0,0,1,0)")), "root(-2,0,0,1,0)");
  EXPECT_THROW(E("1+"), Error);
  EXPECT_THROW(E("root(1,0,1,0)"), Error);
  EXPECT_THROW(E("2/0"), Error);
}

}  // namespace
}  // namespace rotary
