#include "rotary/algebraic/alg_real.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "rotary/algebraic/factor.hpp"
#include "rotary/error.hpp"

namespace rotary {

AlgReal::AlgReal(const Rational& v) : field_(NumberField::rationals()), coords_(RatPoly::constant(v)) {}

AlgReal::AlgReal(NumberField::Ptr field, RatPoly coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.degree() <= 0 && !field_->is_rational()) field_ = NumberField::rationals();
}

Rational AlgReal::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::kInternal, "value is not rational");
  return coords_.is_zero() ? Rational(0) : coords_.lead();
}

IntPoly AlgReal::min_poly() const { return field_->minimal_polynomial(coords_); }

Interval AlgReal::isolating_interval() const {
  if (is_rational()) {
    Rational v = rational_value();
    return {v, v};
  }
  SturmSequence sturm(min_poly());
  for (int bits = 16;; bits *= 2) {
    Interval iv = approx(bits);
    if (sturm.count_closed(iv.lo, iv.hi) == 1) return iv;
  }
}

Interval AlgReal::approx(int bits) const { return field_->approx(coords_, bits); }

double AlgReal::to_double() const { return approx(64).mid().get_d(); }

int AlgReal::sign() const { return field_->sign(coords_); }

AlgReal operator+(const AlgReal& a, const AlgReal& b) {
  if (a.field_->id() == b.field_->id()) return AlgReal(a.field_, a.coords_ + b.coords_);
  CommonField u = unify(a.field_, a.coords_, b.field_, b.coords_);
  return AlgReal(u.field, u.a + u.b);
}

AlgReal operator-(const AlgReal& a, const AlgReal& b) { return a + (-b); }

AlgReal operator*(const AlgReal& a, const AlgReal& b) {
  if (a.field_->id() == b.field_->id()) return AlgReal(a.field_, a.field_->mul(a.coords_, b.coords_));
  if (a.is_rational()) return AlgReal(b.field_, a.rational_value() * b.coords_);
  if (b.is_rational()) return AlgReal(a.field_, b.rational_value() * a.coords_);
  CommonField u = unify(a.field_, a.coords_, b.field_, b.coords_);
  return AlgReal(u.field, u.field->mul(u.a, u.b));
}

AlgReal operator/(const AlgReal& a, const AlgReal& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (b.is_rational()) return AlgReal(a.field_, (1 / b.rational_value()) * a.coords_);
  const AlgReal inv(b.field_, b.field_->inverse(b.coords_));
  return a * inv;
}

namespace {

bool separated(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

bool equal_slow(const AlgReal& a, const AlgReal& b) {
  if (a.is_rational() != b.is_rational()) return false;
  const IntPoly p = a.min_poly();
  if (p != b.min_poly()) return false;
  SturmSequence sturm(p);
  for (int bits = 32;; bits *= 2) {
    Interval ia = a.approx(bits), ib = b.approx(bits);
    if (separated(ia, ib)) return false;
    if (sturm.count_closed(std::min(ia.lo, ib.lo), std::max(ia.hi, ib.hi)) == 1) return true;
  }
}

}  // namespace

bool operator==(const AlgReal& a, const AlgReal& b) {
  if (a.field_->id() == b.field_->id()) return a.coords_ == b.coords_;
  if (a.is_rational() || b.is_rational()) return false;
  if (separated(a.approx(64), b.approx(64))) return false;
  return equal_slow(a, b);
}

int compare(const AlgReal& a, const AlgReal& b) {
  if (a.field()->id() == b.field()->id()) return a.field()->sign(a.coords() - b.coords());
  for (int bits = 64;; bits *= 2) {
    Interval ia = a.approx(bits), ib = b.approx(bits);
    if (ia.hi < ib.lo) return -1;
    if (ia.lo > ib.hi) return 1;
    if (bits == 64 && a == b) return 0;
  }
}

std::strong_ordering operator<=>(const AlgReal& a, const AlgReal& b) {
  const int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// Bounds on sqrt(x) for x >= 0 with `bits` fractional bits.
Rational sqrt_floor(const Rational& x, int bits) {
  if (x <= 0) return 0;
  Integer scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * bits));
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  mpz_sqrt(scaled.get_mpz_t(), scaled.get_mpz_t());
  return Rational(scaled) * pow2_neg(bits);
}

Rational sqrt_ceil(const Rational& x, int bits) {
  if (x <= 0) return 0;
  Integer scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * bits));
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  if (r * r < scaled) r += 1;
  return Rational(r) * pow2_neg(bits);
}

AlgReal sqrt_rational(const Rational& q) {
  // sqrt(n/d) = sqrt(n*d)/d; pull square factors out of n*d.
  Integer r = q.get_num() * q.get_den();
  Integer outside = 1;
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
    Rational v(s, q.get_den());
    v.canonicalize();
    return AlgReal(v);
  }
  for (unsigned long p = 2; p < 100000; ++p) {
    Integer pp = Integer(p) * Integer(p);
    if (pp > r) break;
    while (mpz_divisible_p(r.get_mpz_t(), pp.get_mpz_t())) {
      r /= pp;
      outside *= p;
    }
  }
  Integer lo;
  mpz_sqrt(lo.get_mpz_t(), r.get_mpz_t());
  auto field = NumberField::from_root(IntPoly{-r, Integer(0), Integer(1)}, Interval{Rational(lo), Rational(lo + 1)});
  Rational scale(outside, q.get_den());
  scale.canonicalize();
  return AlgReal(field, RatPoly{Rational(0), scale});
}

}  // namespace

AlgReal sqrt_nonneg(const AlgReal& a) {
  const int s = a.sign();
  if (s < 0) throw Error(ErrorCode::kNegativeSqrt, "square root of a negative number");
  if (s == 0) return AlgReal();
  if (a.is_rational()) return sqrt_rational(a.rational_value());
  const std::vector<RatPoly> lower{-a.coords(), RatPoly()};
  Adjunction adj = adjoin_root(a.field(), lower, [&a](int bits) {
    Interval iv = a.approx(2 * bits + 8);
    return Interval{sqrt_floor(iv.lo, bits), sqrt_ceil(iv.hi, bits) + pow2_neg(bits)};
  });
  return AlgReal(adj.field, adj.root);
}

std::vector<AlgReal> real_roots(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "real roots of the zero polynomial");
  std::vector<AlgReal> out;
  for (const IntPoly& f : irreducible_factors(p)) {
    if (f.degree() == 1) {
      Rational r(-f[0], f[1]);
      r.canonicalize();
      out.emplace_back(r);
      continue;
    }
    for (const Interval& iv : isolate_real_roots(f)) {
      out.emplace_back(NumberField::from_root(f, iv), RatPoly{Rational(0), Rational(1)});
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgReal& a, const AlgReal& b) { return compare(a, b) < 0; });
  return out;
}

AlgReal chebyshev_T(unsigned n, const AlgReal& c) {
  if (compare(c, AlgReal(-1)) < 0 || compare(c, AlgReal(1)) > 0) {
    throw Error(ErrorCode::kOutOfRange, "chebyshev_T requires -1 <= c <= 1");
  }
  if (n == 0) return AlgReal(1);
  AlgReal prev(1), cur = c;
  const AlgReal two_c = AlgReal(2) * c;
  for (unsigned k = 1; k < n; ++k) {
    AlgReal next = two_c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(Integer(1), n) - IntPoly::constant(Integer(1));
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = *exact_quotient(p, cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

namespace {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

void check_unit_range(const AlgReal& c) {
  if (compare(c, AlgReal(-1)) < 0 || compare(c, AlgReal(1)) > 0) {
    throw Error(ErrorCode::kOutOfRange, "cosine must lie in [-1, 1]");
  }
}

// Order m of the root of unity c + i sqrt(1 - c^2), or 0 if none.
int root_of_unity_order(const AlgReal& c) {
  check_unit_range(c);
  if (c.is_rational()) {
    const Rational v = c.rational_value();
    if (v == 1) return 1;
    if (v == -1) return 2;
    if (v == 0) return 4;
    if (v == Rational(1, 2)) return 6;
    if (v == Rational(-1, 2)) return 3;
    return 0;
  }
  // zeta + 1/zeta = 2c, so zeta is a root of (2x)^e m((x^2 + 1) / (2x)).
  const IntPoly m = c.min_poly();
  const int e = m.degree();
  const IntPoly x2p1{Integer(1), Integer(0), Integer(1)};
  const IntPoly two_x{Integer(0), Integer(2)};
  IntPoly p;
  IntPoly pow_a = IntPoly::constant(Integer(1));
  for (int i = 0; i <= e; ++i) {
    IntPoly pow_b = IntPoly::constant(Integer(1));
    for (int j = 0; j < e - i; ++j) pow_b = pow_b * two_x;
    p = p + IntPoly::constant(m[i]) * pow_a * pow_b;
    pow_a = pow_a * x2p1;
  }
  p = primitive_part(p);
  for (int n = 3; n <= 8 * e * e; ++n) {
    if (euler_phi(n) != 2 * e) continue;
    if (cyclotomic(n) == p) return n;
  }
  return 0;
}

}  // namespace

bool is_rational_angle(const AlgReal& c) { return root_of_unity_order(c) != 0; }

std::optional<std::string> rational_angle_witness(const AlgReal& c) {
  const int m = root_of_unity_order(c);
  if (m == 0) return std::nullopt;
  // arccos(c) = 2 pi j / m with gcd(j, m) = 1 and 0 <= j <= m/2.
  const double target = c.to_double();
  int best = 0;
  double best_err = 1e300;
  for (int j = 0; 2 * j <= m; ++j) {
    if (std::gcd(j, m) != 1) continue;
    double err = std::fabs(std::cos(2.0 * M_PI * j / m) - target);
    if (err < best_err) {
      best_err = err;
      best = j;
    }
  }
  int num = 2 * best, den = m;
  const int g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (num == 0) return std::string("0");
  std::string s = num == 1 ? "pi" : std::to_string(num) + "*pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

Rational to_float(const AlgReal& a, int bits) {
  if (bits < 1) throw Error(ErrorCode::kOutOfRange, "bits must be positive");
  return a.approx(bits).mid();
}

}  // namespace rotary
