#include <gtest/gtest.h>

#include <random>

#include "rotary/algebraic/factor.hpp"
#include "rotary/algebraic/poly.hpp"
#include "rotary/algebraic/roots.hpp"
#include "rotary/error.hpp"

namespace rotary {
namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

IntPoly product(const std::vector<IntPoly>& fs) {
  IntPoly p = ip({1});
  for (const auto& f : fs) p = p * f;
  return p;
}

TEST(Poly, DivmodReconstructs) {
  RatPoly a = to_rational(ip({3, -1, 0, 5, 2}));
  RatPoly b = to_rational(ip({1, 2, 3}));
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(Poly, GcdAndXgcd) {
  IntPoly f = ip({-1, 1});   // x - 1
  IntPoly g = ip({2, 0, 1});  // x^2 + 2
  IntPoly h = ip({3, 1});    // x + 3
  EXPECT_EQ(gcd(f * g, f * h), f);
  auto r = xgcd(to_rational(g), to_rational(h));
  EXPECT_EQ(r.s * to_rational(g) + r.t * to_rational(h), r.g);
  EXPECT_EQ(r.g, RatPoly::constant(1));
}

TEST(Poly, SquarefreePart) {
  IntPoly f = ip({-2, 0, 1});
  IntPoly g = ip({1, 1});
  EXPECT_EQ(squarefree_part(f * f * g * g * g), f * g);
}

TEST(Poly, ResultantOfLinearFactors) {
  // res(x - a, x - b) = a - b up to sign convention; here (x-2),(x-5).
  EXPECT_EQ(abs(resultant(ip({-2, 1}), ip({-5, 1}))), 3);
  EXPECT_EQ(resultant(ip({-2, 0, 1}), ip({-8, 0, 0, 1}) - ip({-8, 0, 0, 1})), 0);
}

TEST(Factor, KnownFactorizations) {
  auto fs = irreducible_factors(ip({-1, 0, 0, 0, 1}));  // x^4 - 1
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0], ip({-1, 1}));
  EXPECT_EQ(fs[1], ip({1, 1}));
  EXPECT_EQ(fs[2], ip({1, 0, 1}));
  EXPECT_TRUE(is_irreducible(ip({-2, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible(ip({-4, 0, 1})));
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  EXPECT_TRUE(is_irreducible(ip({1, 0, 0, 0, 1})));
  EXPECT_THROW(irreducible_factors(IntPoly()), Error);
}

TEST(Factor, SwinnertonDyerQuartic) {
  // Minimal polynomial of sqrt2 + sqrt3: x^4 - 10x^2 + 1.
  EXPECT_TRUE(is_irreducible(ip({1, 0, -10, 0, 1})));
  auto fs = irreducible_factors(ip({1, 0, -10, 0, 1}) * ip({-3, 0, 1}) * ip({-3, 0, 1}));
  ASSERT_EQ(fs.size(), 2u);
}

TEST(Factor, RandomProductsRecoverFactors) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntPoly> parts;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const int deg = 1 + static_cast<int>(rng() % 4);
      std::vector<Integer> c;
      for (int j = 0; j < deg; ++j) c.emplace_back(coef(rng));
      c.emplace_back(1 + static_cast<int>(rng() % 3));
      parts.emplace_back(c);
    }
    IntPoly p = product(parts);
    if (p.degree() < 1) continue;
    auto fs = irreducible_factors(p);
    // Every factor divides p, and the factors multiply to the squarefree part.
    for (const auto& f : fs) EXPECT_TRUE(exact_quotient(p, f).has_value());
    EXPECT_EQ(product(fs), squarefree_part(p));
  }
}

TEST(Roots, SturmCounts) {
  SturmSequence s(ip({0, -1, 0, 1}));  // x^3 - x: roots -1, 0, 1
  EXPECT_EQ(s.total(), 3);
  EXPECT_EQ(s.count(-1, 1), 2);
  EXPECT_EQ(s.count_closed(-1, 1), 3);
  EXPECT_EQ(s.count_below(Rational(1, 2)), 2);
}

TEST(Roots, IsolationAndRefinement) {
  IntPoly p = ip({-2, 0, 0, 1});
  auto ivs = isolate_real_roots(p);
  ASSERT_EQ(ivs.size(), 1u);
  Interval r = refine_root(p, ivs[0], 40);
  EXPECT_LE(r.width(), pow2_neg(40));
  // Newton oracle: 2^(1/3) = 1.2599210498948732
  EXPECT_NEAR(r.mid().get_d(), 1.2599210498948732, 1e-12);
  EXPECT_TRUE(isolate_real_roots(ip({1, 0, 1})).empty());
}

}  // namespace
}  // namespace rotary
