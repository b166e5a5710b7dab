#include "rotary/algebraic/factor.hpp"

#include <algorithm>
#include <numeric>

#include "rotary/error.hpp"
#include "zp_poly.hpp"

namespace rotary {
namespace {

using zp::Coeffs;
using ZVec = std::vector<Integer>;

const std::vector<uint64_t>& odd_primes() {
  static const std::vector<uint64_t> primes = [] {
    const int limit = 20000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<uint64_t> out;
    for (int i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      if (i > 2) out.push_back(static_cast<uint64_t>(i));
      for (long j = static_cast<long>(i) * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Coeffs reduce_mod(const zp::Field& F, const IntPoly& f) {
  Coeffs r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = F.from(f.coeffs()[i]);
  zp::Field::trim(r);
  return r;
}

std::vector<std::pair<Coeffs, int>> distinct_degree(const zp::Field& F, Coeffs f) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs x{0, 1};
  Coeffs h = x;
  const mpz_class p = static_cast<unsigned long>(F.p());
  for (int i = 1; 2 * i <= zp::Field::deg(f); ++i) {
    h = F.powmod(h, p, f);
    Coeffs g = F.gcd(f, F.sub(h, x));
    if (zp::Field::deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (zp::Field::deg(f) > 0) out.emplace_back(F.monic(f), zp::Field::deg(f));
  return out;
}

void equal_degree(const zp::Field& F, const Coeffs& g, int d, std::mt19937_64& rng,
                  std::vector<Coeffs>& out) {
  const int n = zp::Field::deg(g);
  if (n == d) {
    out.push_back(F.monic(g));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p()), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<uint64_t> dist(0, F.p() - 1);
  for (;;) {
    Coeffs a(static_cast<size_t>(n));
    for (auto& v : a) v = dist(rng);
    zp::Field::trim(a);
    if (zp::Field::deg(a) < 1) continue;
    Coeffs b = F.powmod(a, e, g);
    b = F.sub(b, Coeffs{1});
    Coeffs h = F.gcd(g, b);
    const int dh = zp::Field::deg(h);
    if (dh > 0 && dh < n) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// ---- integer polynomials modulo m (coefficients kept in [0, m)) ----

void trim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec mod_vec(const ZVec& a, const Integer& m) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ZVec add_m(const ZVec& a, const ZVec& b, const Integer& m) {
  ZVec r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return mod_vec(r, m);
}

ZVec sub_m(const ZVec& a, const ZVec& b, const Integer& m) {
  ZVec r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return mod_vec(r, m);
}

ZVec mul_m(const ZVec& a, const ZVec& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return mod_vec(r, m);
}

// Division by a monic polynomial modulo m.
std::pair<ZVec, ZVec> divmod_monic_m(ZVec a, const ZVec& b, const Integer& m) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {{}, a};
  ZVec q(static_cast<size_t>(da - db + 1));
  for (int i = da; i >= db; --i) {
    mpz_fdiv_r(a[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    Integer f = a[i];
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) mpz_submul(a[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
  }
  a.resize(static_cast<size_t>(db));
  return {mod_vec(q, m), mod_vec(a, m)};
}

ZVec lift_coeffs(const Coeffs& c) {
  ZVec r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = static_cast<unsigned long>(c[i]);
  return r;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Integer& mm) {
  ZVec e = sub_m(f, mul_m(g, h, mm), mm);
  auto [q, r] = divmod_monic_m(mul_m(s, e, mm), h, mm);
  ZVec g2 = add_m(add_m(g, mul_m(t, e, mm), mm), mul_m(q, g, mm), mm);
  ZVec h2 = add_m(h, r, mm);
  ZVec b = sub_m(add_m(mul_m(s, g2, mm), mul_m(t, h2, mm), mm), ZVec{Integer(1)}, mm);
  auto [c, d] = divmod_monic_m(mul_m(s, b, mm), h2, mm);
  ZVec s2 = sub_m(s, d, mm);
  ZVec t2 = sub_m(sub_m(t, mul_m(t, b, mm), mm), mul_m(c, g2, mm), mm);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts the monic modular factorization f = lc * prod(factors) mod p to
// modulus p^(2^k) = target.
std::vector<ZVec> multifactor_lift(const IntPoly& f, const zp::Field& F, const std::vector<Coeffs>& factors,
                                   int doublings, const Integer& target) {
  std::vector<ZVec> out;
  ZVec cur = mod_vec(f.coeffs(), target);
  const uint64_t lc_mod = F.from(f.lead());
  for (size_t idx = 0; idx + 1 < factors.size(); ++idx) {
    Coeffs hp = factors[idx];
    Coeffs gp{lc_mod};
    for (size_t j = idx + 1; j < factors.size(); ++j) gp = F.mul(gp, factors[j]);
    Coeffs gg, sp, tp;
    F.xgcd(gp, hp, gg, sp, tp);
    ZVec g = lift_coeffs(gp), h = lift_coeffs(hp), s = lift_coeffs(sp), t = lift_coeffs(tp);
    Integer m = static_cast<unsigned long>(F.p());
    for (int k = 0; k < doublings; ++k) {
      m = m * m;
      hensel_step(mod_vec(cur, m), g, h, s, t, m);
    }
    out.push_back(h);
    cur = g;
  }
  // The remaining cofactor is lc * last; divide out lc modulo the target.
  Integer lc_inv;
  Integer lc = f.lead();
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
  ZVec last(cur.size());
  for (size_t i = 0; i < cur.size(); ++i) last[i] = cur[i] * lc_inv;
  out.push_back(mod_vec(last, target));
  return out;
}

Integer symmetric(const Integer& v, const Integer& m, const Integer& half) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (r > half) r -= m;
  return r;
}

// Bitset over degrees 0..n of the subset sums of a degree multiset.
std::vector<bool> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> ok(static_cast<size_t>(n) + 1, false);
  ok[0] = true;
  for (int d : degrees) {
    for (int s = n; s >= d; --s) {
      if (ok[s - d]) ok[s] = true;
    }
  }
  return ok;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  const Integer lc = f.lead();

  // Pick the prime giving the fewest modular factors among a few
  // candidates; intersect the degree patterns to prune recombination.
  std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
  uint64_t best_p = 0;
  size_t best_count = SIZE_MAX;
  int tried = 0;
  for (uint64_t p : odd_primes()) {
    if (mpz_fdiv_ui(lc.get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    zp::Field F(p);
    Coeffs fp = F.monic(reduce_mod(F, f));
    if (zp::Field::deg(fp) != n) continue;
    if (zp::Field::deg(F.gcd(fp, F.derivative(fp))) != 0) continue;
    auto ddf = distinct_degree(F, fp);
    std::vector<int> degs;
    for (const auto& [g, d] : ddf) {
      for (int k = 0; k < zp::Field::deg(g) / d; ++k) degs.push_back(d);
    }
    if (degs.size() == 1) return {f};
    auto sums = subset_sums(degs, n);
    bool any = false;
    for (int d = 1; d < n; ++d) {
      allowed[d] = allowed[d] && sums[d];
      any = any || allowed[d];
    }
    if (!any) return {f};
    if (degs.size() < best_count) {
      best_count = degs.size();
      best_p = p;
    }
    if (++tried >= 6) break;
  }
  if (best_p == 0) throw Error(ErrorCode::kInternal, "no suitable prime for factorization");

  zp::Field F(best_p);
  Coeffs fp = F.monic(reduce_mod(F, f));
  std::mt19937_64 rng(0x5eed);
  std::vector<Coeffs> local;
  for (const auto& [g, d] : distinct_degree(F, fp)) equal_degree(F, g, d, rng, local);
  std::sort(local.begin(), local.end());

  // Landau-Mignotte: coefficients of lc * (factor) are below |lc| 2^n |f|_2.
  Integer sumsq = 0;
  for (const auto& c : f.coeffs()) sumsq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
  norm += 1;
  Integer bound = abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));

  Integer modulus = static_cast<unsigned long>(best_p);
  int doublings = 0;
  while (modulus <= bound) {
    modulus *= modulus;
    ++doublings;
  }
  std::vector<ZVec> lifted = multifactor_lift(f, F, local, doublings, modulus);
  const Integer half = modulus / 2;

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<ZVec> pool = lifted;
  size_t subset_size = 1;
  while (2 * subset_size <= pool.size()) {
    const size_t r = pool.size();
    std::vector<size_t> idx(subset_size);
    std::iota(idx.begin(), idx.end(), 0);
    bool progressed = false;
    const Integer rest_lc = rest.lead();
    const Integer test_const = rest_lc * rest.coeffs()[0];
    while (true) {
      int deg_sum = 0;
      for (size_t i : idx) deg_sum += static_cast<int>(pool[i].size()) - 1;
      if (deg_sum < n && allowed[deg_sum]) {
        Integer c0 = rest_lc;
        for (size_t i : idx) c0 = (c0 * pool[i][0]) % modulus;
        c0 = symmetric(c0, modulus, half);
        if (c0 != 0 && mpz_divisible_p(test_const.get_mpz_t(), c0.get_mpz_t())) {
          ZVec prod{rest_lc};
          for (size_t i : idx) prod = mul_m(prod, pool[i], modulus);
          std::vector<Integer> sym(prod.size());
          for (size_t i = 0; i < prod.size(); ++i) sym[i] = symmetric(prod[i], modulus, half);
          IntPoly cand = primitive_part(IntPoly(sym));
          if (auto q = exact_quotient(rest, cand)) {
            found.push_back(cand);
            rest = primitive_part(*q);
            std::vector<ZVec> remaining;
            for (size_t i = 0; i < r; ++i) {
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(pool[i]);
            }
            pool = std::move(remaining);
            progressed = true;
            break;
          }
        }
      }
      // Next combination in lexicographic order.
      int k = static_cast<int>(subset_size) - 1;
      while (k >= 0 && idx[k] == r - subset_size + static_cast<size_t>(k)) --k;
      if (k < 0) break;
      ++idx[k];
      for (size_t j = static_cast<size_t>(k) + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progressed) ++subset_size;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  if (n == 2) {
    const Integer& a = f.coeffs()[2];
    const Integer& b = f.coeffs()[1];
    const Integer& c = f.coeffs()[0];
    Integer disc = b * b - 4 * a * c;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return {f};
    Integer root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    return {primitive_part(IntPoly{b - root, 2 * a}), primitive_part(IntPoly{b + root, 2 * a})};
  }
  return zassenhaus(f);
}

bool less_poly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

}  // namespace

std::vector<IntPoly> irreducible_factors(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "cannot factor the zero polynomial");
  if (p.degree() <= 0) return {};
  IntPoly f = squarefree_part(p);
  std::vector<IntPoly> out;
  if (f.coeffs()[0] == 0) {
    out.push_back(IntPoly{Integer(0), Integer(1)});
    std::vector<Integer> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    f = IntPoly(std::move(shifted));
  }
  if (f.degree() >= 1) {
    for (auto& g : factor_squarefree(f)) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), less_poly);
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  auto f = irreducible_factors(p);
  return f.size() == 1 && f[0].degree() == p.degree();
}

}  // namespace rotary
