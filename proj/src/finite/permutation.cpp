#include "rotary/finite/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "finite/indexed_group.hpp"
#include "rotary/error.hpp"

namespace rotary {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(ErrorCode::kPrecondition, "image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(size_t degree) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, size_t degree) {
  std::vector<std::vector<unsigned>> cycles;
  size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::kParse, "expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw Error(ErrorCode::kParse, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorCode::kParse, "unexpected character in cycle notation");
      }
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > 1000000) throw Error(ErrorCode::kParse, "point index too large");
        ++i;
      }
      cycle.push_back(static_cast<unsigned>(v));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  size_t needed = 0;
  for (const auto& c : cycles) {
    for (unsigned v : c) needed = std::max<size_t>(needed, v + 1);
  }
  if (degree == 0) degree = needed;
  if (needed > degree) throw Error(ErrorCode::kPrecondition, "cycle mentions a point beyond the degree");
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      if (used[c[k]]) throw Error(ErrorCode::kParse, "cycles are not disjoint");
      used[c[k]] = true;
      p.images_[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw Error(ErrorCode::kPrecondition, "degree mismatch");
  Permutation r;
  r.images_.resize(degree());
  for (size_t i = 0; i < degree(); ++i) r.images_[i] = images_[other.images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (size_t i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<unsigned>(i);
  return r;
}

Permutation Permutation::extended(size_t degree) const {
  if (degree < this->degree()) throw Error(ErrorCode::kPrecondition, "cannot shrink a permutation");
  Permutation r = identity(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

size_t Permutation::fixed_points() const {
  size_t n = 0;
  for (size_t i = 0; i < degree(); ++i) n += images_[i] == i;
  return n;
}

bool Permutation::is_identity() const { return fixed_points() == degree(); }

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (unsigned s = 0; s < degree(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    out += '(';
    for (unsigned v = s; !seen[v]; v = images_[v]) {
      seen[v] = true;
      if (v != s) out += ' ';
      out += std::to_string(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct PermGroup::Cache {
  std::once_flag once;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup(size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw Error(ErrorCode::kPrecondition, "generator degree differs from group degree");
  }
}

PermGroup::PermGroup(size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  std::call_once(cache_->once, [&] { cache_->elements = std::move(elements); });
}

PermGroup PermGroup::trivial(size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<unsigned> swap(degree), shift(degree);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (size_t i = 0; i < degree; ++i) shift[i] = static_cast<unsigned>((i + 1) % degree);
    gens.emplace_back(std::move(swap));
    if (degree > 2) gens.emplace_back(std::move(shift));
  }
  return PermGroup(degree, std::move(gens));
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::call_once(cache_->once, [this] {
    std::set<Permutation> seen{Permutation::identity(degree_)};
    std::vector<Permutation> frontier{Permutation::identity(degree_)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& g : generators_) {
          Permutation y = x * g;
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    cache_->elements.assign(seen.begin(), seen.end());
  });
  return cache_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), p);
}

std::vector<unsigned> orbit_labels(const PermGroup& g) {
  std::vector<unsigned> parent(g.degree());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : g.generators()) {
    for (unsigned i = 0; i < g.degree(); ++i) {
      unsigned a = find(i), b = find(gen(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<unsigned> labels(g.degree());
  for (unsigned i = 0; i < g.degree(); ++i) labels[i] = find(i);
  return labels;
}

size_t orbit_count(const PermGroup& g) {
  const auto labels = orbit_labels(g);
  size_t n = 0;
  for (unsigned i = 0; i < labels.size(); ++i) n += labels[i] == i;
  return n;
}

bool is_transitive(const PermGroup& g) { return orbit_count(g) == 1; }

mpq_class cauchy_frobenius(const PermGroup& g) {
  mpz_class total = 0;
  for (const auto& p : g.elements()) total += static_cast<unsigned long>(p.fixed_points());
  mpq_class r(total, static_cast<unsigned long>(g.order()));
  r.canonicalize();
  return r;
}

bool is_rotarily_transitive_action(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  for (const auto& p : g.elements()) {
    if (p.is_derangement()) return false;
  }
  return true;
}

Permutation jordan_witness(const PermGroup& g) {
  if (g.degree() < 2 || !is_transitive(g)) {
    throw Error(ErrorCode::kPrecondition, "jordan_witness needs a transitive group on at least 2 points");
  }
  for (const auto& p : g.elements()) {
    if (p.is_derangement()) return p;
  }
  throw Error(ErrorCode::kInternal, "transitive group without a derangement");
}

namespace detail {

IndexedGroup::IndexedGroup(const PermGroup& g) : degree_(g.degree()), elems_(g.elements()) {
  const size_t n = elems_.size();
  identity_ = static_cast<unsigned>(
      std::lower_bound(elems_.begin(), elems_.end(), Permutation::identity(degree_)) - elems_.begin());
  table_.resize(n * n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      const Permutation p = elems_[a] * elems_[b];
      table_[a * n + b] = static_cast<unsigned>(std::lower_bound(elems_.begin(), elems_.end(), p) - elems_.begin());
    }
  }
  derangement_.resize(n);
  for (size_t a = 0; a < n; ++a) derangement_[a] = elems_[a].is_derangement();
}

std::optional<Subgroup> IndexedGroup::closure(const std::vector<unsigned>& gens, bool avoid_derangements) const {
  Subgroup s;
  s.bits.assign((size() + 63) / 64, 0);
  for (unsigned g : gens) {
    if (g != identity_) s.gens.push_back(g);
  }
  s.members.push_back(identity_);
  set_bit(s.bits, identity_);
  for (size_t i = 0; i < s.members.size(); ++i) {
    for (unsigned g : s.gens) {
      const unsigned y = mul(s.members[i], g);
      if (test_bit(s.bits, y)) continue;
      if (avoid_derangements && derangement_[y]) return std::nullopt;
      set_bit(s.bits, y);
      s.members.push_back(y);
    }
  }
  return s;
}

PermGroup IndexedGroup::to_perm_group(const Subgroup& s) const {
  std::vector<Permutation> gens, elems;
  for (unsigned g : s.gens) gens.push_back(elems_[g]);
  for (unsigned i = 0; i < size(); ++i) {
    if (test_bit(s.bits, i)) elems.push_back(elems_[i]);
  }
  return PermGroupAccess::make(degree_, std::move(gens), std::move(elems));
}

bool IndexedGroup::transitive(const Subgroup& s) const {
  if (degree_ == 0) return false;
  std::vector<bool> reached(degree_, false);
  reached[0] = true;
  std::vector<unsigned> stack{0};
  size_t count = 1;
  while (!stack.empty()) {
    const unsigned x = stack.back();
    stack.pop_back();
    for (unsigned g : s.gens) {
      const unsigned y = elems_[g](x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree_;
}

}  // namespace detail

namespace {

using detail::IndexedGroup;
using detail::Subgroup;

// Walks the subgroup lattice from the cyclic subgroups upward, joining each
// subgroup found with each cyclic one. Every subgroup is a join of cyclic
// subgroups, so this reaches all of them. `visit` returns true to stop.
template <typename Visit>
size_t walk_subgroups(const IndexedGroup& ig, bool avoid_derangements, Visit&& visit) {
  std::unordered_set<detail::Bits, detail::BitsHash> seen;
  std::vector<Subgroup> subs;
  std::vector<unsigned> cyclic_gens;
  auto add = [&](Subgroup s) {
    if (!seen.insert(s.bits).second) return false;
    subs.push_back(std::move(s));
    return visit(subs.back());
  };
  for (unsigned x = 0; x < ig.size(); ++x) {
    if (avoid_derangements && ig.derangement(x)) continue;
    auto s = ig.closure({x});
    if (seen.count(s->bits)) continue;
    cyclic_gens.push_back(x);
    if (add(std::move(*s))) return subs.size();
  }
  for (size_t i = 0; i < subs.size(); ++i) {
    for (unsigned c : cyclic_gens) {
      if (detail::test_bit(subs[i].bits, c)) continue;
      std::vector<unsigned> gens = subs[i].gens;
      gens.push_back(c);
      auto j = ig.closure(gens, avoid_derangements);
      if (j && add(std::move(*j))) return subs.size();
    }
  }
  return subs.size();
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, size_t bound) {
  if (g.order() > bound) throw Error(ErrorCode::kBoundExceeded, "group order exceeds the subgroup bound");
  const IndexedGroup ig(g);
  std::vector<Subgroup> subs;
  walk_subgroups(ig, false, [&](const Subgroup& s) {
    subs.push_back(s);
    return false;
  });
  auto key = [](const Subgroup& s) {
    std::vector<unsigned> m = s.members;
    std::sort(m.begin(), m.end());
    return m;
  };
  std::vector<std::pair<std::vector<unsigned>, size_t>> order;
  for (size_t i = 0; i < subs.size(); ++i) order.emplace_back(key(subs[i]), i);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (const auto& [k, i] : order) out.push_back(ig.to_perm_group(subs[i]));
  return out;
}

RotarySubgroupSearch derangement_free_search(const PermGroup& g, size_t bound) {
  if (g.order() > bound) throw Error(ErrorCode::kBoundExceeded, "group order exceeds the search bound");
  const IndexedGroup ig(g);
  RotarySubgroupSearch r;
  r.subgroups_examined = walk_subgroups(ig, true, [&](const Subgroup& s) {
    if (!ig.transitive(s)) return false;
    r.found = true;
    for (unsigned x : s.gens) r.witness_generators.push_back(ig.element(x));
    return true;
  });
  return r;
}

}  // namespace rotary
