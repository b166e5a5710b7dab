#pragma once

// Dense polynomials over Z/pZ for word-size primes p < 2^31. Internal to
// the factorization code.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace rotary::zp {

using Coeffs = std::vector<uint64_t>;

class Field {
 public:
  explicit Field(uint64_t p) : p_(p) {}
  uint64_t p() const { return p_; }

  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p_ ? s - p_ : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p_; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p_ - 2); }

  uint64_t from(const mpz_class& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
  }

  static void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

  Coeffs sub(const Coeffs& a, const Coeffs& b) const {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  Coeffs mul(const Coeffs& a, const Coeffs& b) const {
    if (a.empty() || b.empty()) return {};
    // Accumulate without reduction while the sum cannot overflow.
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i] * b[j]);
    }
    Coeffs r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint64_t>(acc[i] % p_);
    trim(r);
    return r;
  }

  Coeffs scale(const Coeffs& a, uint64_t s) const {
    Coeffs r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s);
    trim(r);
    return r;
  }

  Coeffs monic(const Coeffs& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }

  // Remainder of a modulo b; b nonzero.
  Coeffs rem(Coeffs a, const Coeffs& b) const {
    const int db = deg(b);
    if (deg(a) < db) return a;
    const uint64_t inv_lc = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      uint64_t f = mul(a[i], inv_lc);
      if (!f) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(f, b[j]));
    }
    a.resize(static_cast<size_t>(db));
    trim(a);
    return a;
  }

  std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b) const {
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    Coeffs q(static_cast<size_t>(deg(a) - db + 1), 0);
    const uint64_t inv_lc = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      uint64_t f = mul(a[i], inv_lc);
      q[i - db] = f;
      if (!f) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(f, b[j]));
    }
    a.resize(static_cast<size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
  }

  Coeffs gcd(Coeffs a, Coeffs b) const {
    while (!b.empty()) {
      Coeffs r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = g (monic).
  void xgcd(const Coeffs& a, const Coeffs& b, Coeffs& g, Coeffs& s, Coeffs& t) const {
    Coeffs r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      Coeffs s2 = sub(s0, mul(q, s1));
      Coeffs t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1); r1 = std::move(r);
      s0 = std::move(s1); s1 = std::move(s2);
      t0 = std::move(t1); t1 = std::move(t2);
    }
    uint64_t inv_lc = inv(r0.back());
    g = scale(r0, inv_lc);
    s = scale(s0, inv_lc);
    t = scale(t0, inv_lc);
  }

  Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const { return rem(mul(a, b), m); }

  Coeffs powmod(Coeffs base, const mpz_class& e, const Coeffs& m) const {
    Coeffs r{1};
    base = rem(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = mulmod(r, r, m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
    }
    return r;
  }

  Coeffs derivative(const Coeffs& a) const {
    if (a.size() <= 1) return {};
    Coeffs r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
    trim(r);
    return r;
  }

 private:
  uint64_t p_;
};

}  // namespace rotary::zp
