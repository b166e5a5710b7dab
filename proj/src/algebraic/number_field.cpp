#include "rotary/algebraic/number_field.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "rotary/algebraic/factor.hpp"
#include "rotary/error.hpp"

namespace rotary {
namespace {

struct FieldImages {
  NumberField::Ptr field;
  RatPoly image_a;
  RatPoly image_b;
};

struct Registry {
  std::mutex mu;
  uint64_t next_id = 2;
  std::map<std::string, std::vector<NumberField::Ptr>> by_minpoly;
  std::map<std::pair<uint64_t, uint64_t>, FieldImages> composita;
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

const RatPoly& generator_poly() {
  static const RatPoly x{Rational(0), Rational(1)};
  return x;
}

bool same_root(const IntPoly& p, const Interval& a, const Interval& b) {
  if (a.hi < b.lo || b.hi < a.lo) return false;
  Interval u{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  return SturmSequence(p).count_closed(u.lo, u.hi) == 1;
}

}  // namespace

NumberField::NumberField(IntPoly minpoly, Interval isolating, uint64_t id)
    : minpoly_(std::move(minpoly)),
      monic_(monic(to_rational(minpoly_))),
      degree_(minpoly_.degree()),
      id_(id),
      interval_(std::move(isolating)) {}

NumberField::Ptr NumberField::rationals() {
  static const Ptr q = std::make_shared<NumberField>(IntPoly{Integer(0), Integer(1)}, Interval{0, 0}, 1);
  return q;
}

NumberField::Ptr NumberField::from_root(const IntPoly& minpoly, const Interval& isolating) {
  if (minpoly.degree() < 2) throw Error(ErrorCode::kInternal, "number field generator must be irrational");
  IntPoly p = primitive_part(minpoly);
  const std::string key = to_string(p);
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto& bucket = reg.by_minpoly[key];
  for (const auto& f : bucket) {
    if (same_root(p, f->generator(0), isolating)) return f;
  }
  auto f = std::make_shared<NumberField>(p, isolating, reg.next_id++);
  bucket.push_back(f);
  return f;
}

Interval NumberField::generator(int bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (interval_.lo != interval_.hi && interval_.width() > pow2_neg(bits)) {
    interval_ = refine_root(minpoly_, interval_, bits);
  }
  return interval_;
}

RatPoly NumberField::reduce(const RatPoly& a) const {
  if (a.degree() < degree_) return a;
  return rem(a, monic_);
}

RatPoly NumberField::mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }

RatPoly NumberField::inverse(const RatPoly& a) const {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (a.degree() == 0) return RatPoly::constant(1 / a.lead());
  XgcdResult r = xgcd(a, monic_);
  if (r.g.degree() != 0) throw Error(ErrorCode::kInternal, "non-invertible field element");
  return reduce(r.s);
}

RatPoly NumberField::compose(const RatPoly& outer, const RatPoly& inner) const {
  RatPoly acc;
  for (int i = outer.degree(); i >= 0; --i) acc = mul(acc, inner) + RatPoly::constant(outer[i]);
  return acc;
}

Interval NumberField::approx(const RatPoly& a, int bits) const {
  if (a.degree() <= 0) {
    Rational v = a.is_zero() ? Rational(0) : a.lead();
    return {v, v};
  }
  const Rational target = pow2_neg(bits);
  int prec = bits + 16;
  for (;;) {
    Interval r = eval(a, generator(prec), prec + 8);
    if (r.width() <= target) return r;
    prec += prec / 2 + 16;
  }
}

int NumberField::sign(const RatPoly& a) const {
  if (a.is_zero()) return 0;
  if (a.degree() == 0) return sgn(a.lead());
  for (int bits = 24;; bits *= 2) {
    Interval r = eval(a, generator(bits), bits + 8);
    if (r.lo > 0) return 1;
    if (r.hi < 0) return -1;
  }
}

IntPoly NumberField::minimal_polynomial(const RatPoly& a) const {
  if (a.degree() <= 0) {
    Rational v = a.is_zero() ? Rational(0) : a.lead();
    return primitive_part(RatPoly{-v, Rational(1)});
  }
  const size_t d = static_cast<size_t>(degree_);
  auto coords = [d](const RatPoly& p) {
    linalg::Vec v(d);
    for (size_t i = 0; i < d; ++i) v[i] = p[static_cast<int>(i)];
    return v;
  };
  linalg::DependencyTracker tracker(d);
  RatPoly power = RatPoly::constant(1);
  for (size_t k = 0;; ++k) {
    if (auto dep = tracker.insert(coords(power))) {
      std::vector<Rational> c(k + 1);
      for (size_t i = 0; i < k; ++i) c[i] = -(*dep)[i];
      c[k] = 1;
      return primitive_part(RatPoly(std::move(c)));
    }
    power = mul(power, a);
  }
}

void NumberField::add_subfield(const Ptr& sub, const RatPoly& image) const {
  if (sub->id() == id_) return;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& [f, img] : subfields_) {
    if (f->id() == sub->id()) return;
  }
  subfields_.emplace_back(sub, image);
  embedding_cache_[sub->id()] = image;
}

std::optional<RatPoly> NumberField::embedding_of(const NumberField& sub) const {
  std::vector<uint64_t> visiting;
  return embedding_of_impl(sub, visiting);
}

std::optional<RatPoly> NumberField::embedding_of_impl(const NumberField& sub,
                                                      std::vector<uint64_t>& visiting) const {
  if (sub.id() == id_) return generator_poly();
  if (sub.is_rational()) return RatPoly();
  if (std::find(visiting.begin(), visiting.end(), id_) != visiting.end()) return std::nullopt;
  std::vector<std::pair<Ptr, RatPoly>> parents;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = embedding_cache_.find(sub.id());
    if (it != embedding_cache_.end()) return it->second;
    parents = subfields_;
  }
  visiting.push_back(id_);
  std::optional<RatPoly> found;
  for (const auto& [parent, image] : parents) {
    if (auto inner = parent->embedding_of_impl(sub, visiting)) {
      found = compose(*inner, image);
      break;
    }
  }
  visiting.pop_back();
  if (found) {
    std::lock_guard<std::mutex> lock(mu_);
    embedding_cache_[sub.id()] = *found;
  }
  return found;
}

Adjunction adjoin_root(const NumberField::Ptr& base, const std::vector<RatPoly>& lower,
                       const std::function<Interval(int)>& root_enclosure) {
  const int d = base->degree();
  const int e = static_cast<int>(lower.size());
  const int D = d * e;
  if (e < 1) throw Error(ErrorCode::kInternal, "adjoining a root of a constant");
  const RatPoly theta = base->is_rational() ? RatPoly() : generator_poly();

  using AlgebraElem = std::vector<RatPoly>;  // coefficient of Y^j, j < e
  auto flatten = [&](const AlgebraElem& v) {
    linalg::Vec out(static_cast<size_t>(D));
    for (int j = 0; j < e; ++j) {
      for (int i = 0; i < d; ++i) out[static_cast<size_t>(j * d + i)] = v[j][i];
    }
    return out;
  };

  const int max_shift = 24;
  for (int attempt = 0; attempt < 2 * max_shift; ++attempt) {
    const int k = (attempt % 2 == 0) ? attempt / 2 + 1 : -(attempt / 2 + 1);
    if (base->is_rational() && attempt > 0) break;

    // gamma = Y + k*theta acting on the algebra base[Y]/(g).
    auto times_gamma = [&](const AlgebraElem& v) {
      AlgebraElem r(static_cast<size_t>(e));
      for (int j = 0; j + 1 < e; ++j) r[j + 1] = v[j];
      const RatPoly& top = v[e - 1];
      if (!top.is_zero()) {
        for (int j = 0; j < e; ++j) r[j] -= base->mul(top, lower[j]);
      }
      if (!theta.is_zero()) {
        for (int j = 0; j < e; ++j) r[j] += Rational(k) * base->mul(theta, v[j]);
      }
      return r;
    };

    std::vector<linalg::Vec> columns;
    columns.reserve(static_cast<size_t>(D));
    AlgebraElem cur(static_cast<size_t>(e));
    cur[0] = RatPoly::constant(1);
    for (int i = 0; i < D; ++i) {
      columns.push_back(flatten(cur));
      cur = times_gamma(cur);
    }
    AlgebraElem theta_elem(static_cast<size_t>(e));
    theta_elem[0] = theta;
    AlgebraElem y_elem(static_cast<size_t>(e));
    if (e >= 2) {
      y_elem[1] = RatPoly::constant(1);
    } else {
      y_elem[0] = -lower[0];
    }
    auto sol = linalg::solve_columns(columns, {flatten(cur), flatten(theta_elem), flatten(y_elem)});
    if (!sol) continue;

    std::vector<Rational> rc(static_cast<size_t>(D) + 1);
    for (int i = 0; i < D; ++i) rc[i] = -(*sol)[0][i];
    rc[D] = 1;
    const IntPoly R = primitive_part(RatPoly(std::move(rc)));
    const RatPoly theta_in_gamma((*sol)[1]);
    const RatPoly root_in_gamma((*sol)[2]);

    const std::vector<IntPoly> factors = irreducible_factors(R);
    std::vector<SturmSequence> sturms;
    for (const auto& f : factors) sturms.emplace_back(f);
    int which = -1;
    Interval J;
    for (int bits = 32;; bits *= 2) {
      if (bits > (1 << 16)) throw Error(ErrorCode::kInternal, "root selection failed to converge");
      J = root_enclosure(bits);
      if (!theta.is_zero()) J = J + Rational(k) * base->generator(bits);
      which = -1;
      bool unique = true;
      for (size_t i = 0; i < factors.size(); ++i) {
        const int c = sturms[i].count_closed(J.lo, J.hi);
        if (c == 0) continue;
        if (which >= 0 || c > 1) unique = false;
        which = static_cast<int>(i);
      }
      if (which >= 0 && unique) break;
    }
    const IntPoly& M = factors[static_cast<size_t>(which)];
    const RatPoly monic_m = monic(to_rational(M));

    if (M.degree() == d) {
      // The root already lies in the base field.
      const RatPoly theta_e = rem(theta_in_gamma, monic_m);
      std::vector<linalg::Vec> basis;
      RatPoly power = RatPoly::constant(1);
      for (int j = 0; j < d; ++j) {
        linalg::Vec v(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) v[i] = power[i];
        basis.push_back(std::move(v));
        power = rem(power * theta_e, monic_m);
      }
      linalg::Vec gamma_vec(static_cast<size_t>(d));
      if (d == 1) {
        gamma_vec[0] = rem(generator_poly(), monic_m)[0];
      } else {
        gamma_vec[1] = 1;
      }
      auto r = linalg::solve_columns(basis, {gamma_vec});
      if (!r) throw Error(ErrorCode::kInternal, "subfield coordinates are singular");
      RatPoly gamma_in_base((*r)[0]);
      RatPoly root = base->reduce(gamma_in_base - Rational(k) * theta);
      return {base, theta.is_zero() ? RatPoly() : generator_poly(), root};
    }
    auto field = NumberField::from_root(M, J);
    const RatPoly base_image = rem(theta_in_gamma, monic_m);
    field->add_subfield(base, base_image);
    return {field, base_image, rem(root_in_gamma, monic_m)};
  }
  throw Error(ErrorCode::kInternal, "no primitive element found for adjunction");
}

namespace {

FieldImages compositum(const NumberField::Ptr& fa, const NumberField::Ptr& fb) {
  Registry& reg = registry();
  const auto key = std::make_pair(fa->id(), fb->id());
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.composita.find(key);
    if (it != reg.composita.end()) return it->second;
  }
  const bool a_is_base = fa->degree() >= fb->degree();
  const NumberField::Ptr& base = a_is_base ? fa : fb;
  const NumberField::Ptr& other = a_is_base ? fb : fa;
  const RatPoly m = monic(to_rational(other->minpoly()));
  std::vector<RatPoly> lower;
  for (int i = 0; i < m.degree(); ++i) lower.push_back(RatPoly::constant(m[i]));
  Adjunction adj = adjoin_root(base, lower, [&other](int bits) { return other->generator(bits); });
  adj.field->add_subfield(other, adj.root);
  FieldImages out = a_is_base ? FieldImages{adj.field, adj.base_generator, adj.root}
                              : FieldImages{adj.field, adj.root, adj.base_generator};
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.composita.emplace(key, out);
  return out;
}

}  // namespace

CommonField unify(const NumberField::Ptr& fa, const RatPoly& a, const NumberField::Ptr& fb, const RatPoly& b) {
  if (fa->id() == fb->id()) return {fa, a, b};
  if (fa->is_rational()) return {fb, a, b};
  if (fb->is_rational()) return {fa, a, b};
  if (auto img = fb->embedding_of(*fa)) return {fb, fb->compose(a, *img), b};
  if (auto img = fa->embedding_of(*fb)) return {fa, a, fa->compose(b, *img)};
  FieldImages c = compositum(fa, fb);
  return {c.field, c.field->compose(a, c.image_a), c.field->compose(b, c.image_b)};
}

}  // namespace rotary
