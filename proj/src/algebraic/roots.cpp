#include "rotary/algebraic/roots.hpp"

#include <algorithm>

#include "rotary/error.hpp"

namespace rotary {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

Rational pow2_neg(int bits) {
  Rational r = 1;
  if (bits >= 0) {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  } else {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(-bits));
  }
  r.canonicalize();
  return r;
}

namespace {

Rational floor_dyadic(const Rational& x, int bits) {
  Integer scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  Rational r(q);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  r.canonicalize();
  return r;
}

Rational ceil_dyadic(const Rational& x, int bits) { return -floor_dyadic(-x, bits); }

}  // namespace

Interval round_outward(const Interval& a, int bits) {
  // Exact dyadics with small denominators are left as they are.
  auto small = [bits](const Rational& v) {
    return mpz_sizeinbase(v.get_den_mpz_t(), 2) <= static_cast<size_t>(bits) + 1;
  };
  Interval r = a;
  if (!small(a.lo)) r.lo = floor_dyadic(a.lo, bits);
  if (!small(a.hi)) r.hi = ceil_dyadic(a.hi, bits);
  return r;
}

Interval eval(const RatPoly& p, const Interval& x, int bits) {
  if (p.is_zero()) return {0, 0};
  Interval acc{p.lead(), p.lead()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc = acc * x;
    acc.lo += p.coeffs()[i];
    acc.hi += p.coeffs()[i];
    acc = round_outward(acc, bits);
  }
  return acc;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Sturm sequence of zero polynomial");
  chain_.push_back(primitive_part(p));
  if (p.degree() == 0) return;
  chain_.push_back(primitive_part(p.derivative()));
  while (chain_.back().degree() > 0) {
    RatPoly r = rem(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
    if (r.is_zero()) break;
    // Negated remainder; scaling by a positive constant keeps the signs.
    chain_.push_back(primitive_part(-r));
    if (to_rational(chain_.back()).lead() * (-r).lead() < 0) chain_.back() = -chain_.back();
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int prev = 0, changes = 0;
  for (const auto& q : chain_) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(int sign) const {
  int prev = 0, changes = 0;
  for (const auto& q : chain_) {
    int s = sgn(q.lead());
    if (sign < 0 && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
  return count(a, b) + (sign_at(chain_.front(), a) == 0 ? 1 : 0);
}

int SturmSequence::count_below(const Rational& x) const {
  int n = variations_at_infinity(-1) - variations_at(x);
  if (sign_at(chain_.front(), x) == 0) --n;
  return n;
}

int SturmSequence::total() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

Rational root_bound(const IntPoly& p) {
  // Cauchy: |x| < 1 + max |c_i / c_n|, rounded up to a power of two.
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = Rational(abs(p.coeffs()[i])) / Rational(abs(p.lead()));
    if (r > m) m = r;
  }
  m += 1;
  Rational b = 1;
  while (b <= m) b *= 2;
  return b;
}

namespace {

void isolate(const IntPoly& p, const SturmSequence& sturm, const Rational& a, const Rational& b, int n,
             std::vector<Interval>& out) {
  // Invariant: exactly n roots in (a, b].
  if (n == 0) return;
  if (n == 1) {
    if (sign_at(p, b) == 0) {
      out.push_back({b, b});
      return;
    }
    Interval iv{a, b};
    if (sign_at(p, a) == 0) {
      // Pull the lower endpoint off the neighbouring root.
      Rational lo = a, hi = b;
      for (;;) {
        Rational mid = (lo + hi) / 2;
        int s = sign_at(p, mid);
        if (s == 0) {
          out.push_back({mid, mid});
          return;
        }
        if (sturm.count(mid, hi) == 1) {
          iv = {mid, hi};
          break;
        }
        hi = mid;
        iv = {lo, hi};
      }
    }
    out.push_back(iv);
    return;
  }
  Rational mid = (a + b) / 2;
  int left = sturm.count(a, mid);
  isolate(p, sturm, a, mid, left, out);
  isolate(p, sturm, mid, b, n - left, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "root isolation of zero polynomial");
  std::vector<Interval> out;
  if (squarefree.degree() == 0) return out;
  IntPoly p = primitive_part(squarefree);
  SturmSequence sturm(p);
  Rational b = root_bound(p);
  isolate(p, sturm, -b, b, sturm.count(-b, b), out);
  return out;
}

Interval refine_root(const IntPoly& p, Interval iv, int bits) {
  if (iv.lo == iv.hi) return iv;
  const Rational target = pow2_neg(bits);
  const int s_hi = sign_at(p, iv.hi);
  if (s_hi == 0) return {iv.hi, iv.hi};
  while (iv.width() > target) {
    Rational mid = iv.mid();
    int s = sign_at(p, mid);
    if (s == 0) return {mid, mid};
    if (s == s_hi) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

}  // namespace rotary
