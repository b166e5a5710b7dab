#include "rotary/algebraic/poly.hpp"

#include <sstream>

#include "rotary/error.hpp"

namespace rotary {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<Integer> c(p.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Integer den = 1;
  for (const auto& v : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    Integer n = den / v.get_den();
    c.emplace_back(n * v.get_num());
  }
  return primitive_part(IntPoly(std::move(c)));
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.lead();
  return inv * p;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree() + 1), Rational(0));
  const int db = b.degree();
  const Rational inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(static_cast<size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = rem(x, y);
    x = std::move(y);
    // Normalizing each remainder keeps the rational coefficients small.
    y = r.is_zero() ? r : to_rational(primitive_part(r));
  }
  return monic(x);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  return primitive_part(gcd(to_rational(a), to_rational(b)));
}

XgcdResult xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(static_cast<size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  Integer f, m;
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpz_fdiv_qr(f.get_mpz_t(), m.get_mpz_t(), r[i].get_mpz_t(), b.lead().get_mpz_t());
    if (m != 0) return std::nullopt;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "squarefree part of zero polynomial");
  IntPoly pp = primitive_part(p);
  if (pp.degree() <= 0) return pp;
  IntPoly g = gcd(pp, pp.derivative());
  if (g.degree() == 0) return pp;
  auto q = exact_quotient(pp, g);
  if (!q) throw Error(ErrorCode::kInternal, "squarefree division not exact");
  return primitive_part(*q);
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // Homogeneous evaluation: sum c_i a^i b^(n-i) with x = a/b, b > 0.
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  const int n = p.degree();
  acc = p.coeffs()[n];
  for (int i = n - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + p.coeffs()[i] * bpow;
  }
  return sgn(acc);
}

Rational eval_at(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Rational(p.coeffs()[i]);
  return acc;
}

RatPoly compose(const RatPoly& p, const RatPoly& q) {
  RatPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + RatPoly::constant(p[i]);
  return acc;
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  // res(A, B) = lc(B)^(deg A - deg R) * (-1)^(deg A deg B) * res(B, R).
  RatPoly x = to_rational(a), y = to_rational(b);
  Rational acc = 1;
  while (y.degree() > 0) {
    RatPoly r = rem(x, y);
    if (r.is_zero()) return 0;
    const int da = x.degree(), db = y.degree(), dr = r.degree();
    if ((da * db) % 2 == 1) acc = -acc;
    Rational f;
    mpq_class base = y.lead();
    f = 1;
    for (int i = 0; i < da - dr; ++i) f *= base;
    acc *= f;
    x = std::move(y);
    y = std::move(r);
  }
  if (y.is_zero()) return 0;
  Rational f = 1;
  for (int i = 0; i < x.degree(); ++i) f *= y.lead();
  acc *= f;
  if (acc.get_den() != 1) throw Error(ErrorCode::kInternal, "non-integral resultant");
  return acc.get_num();
}

std::string to_string(const IntPoly& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i].get_str();
  }
  os << ']';
  return os.str();
}

}  // namespace rotary
