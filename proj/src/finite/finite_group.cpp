#include "rotary/finite/finite_group.hpp"

#include <algorithm>
#include <set>

#include "rotary/error.hpp"

namespace rotary {

FiniteGroup FiniteGroup::from_table(Table table, std::vector<std::string> names) {
  const size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::kPrecondition, "group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::kPrecondition, "group table is not square");
    for (unsigned v : row) {
      if (v >= n) throw Error(ErrorCode::kPrecondition, "group table entry out of range");
    }
  }
  FiniteGroup g;
  bool found = false;
  for (unsigned e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::kPrecondition, "group table has no identity");
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      for (unsigned c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::kPrecondition, "group table is not associative");
        }
      }
    }
  }
  g.inverse_.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    auto it = std::find(table[a].begin(), table[a].end(), g.identity_);
    const unsigned b = static_cast<unsigned>(it - table[a].begin());
    if (it == table[a].end() || table[b][a] != g.identity_) {
      throw Error(ErrorCode::kPrecondition, "group table element has no inverse");
    }
    g.inverse_[a] = b;
  }
  if (names.empty()) {
    for (unsigned a = 0; a < n; ++a) names.push_back(std::to_string(a));
  }
  if (names.size() != n) throw Error(ErrorCode::kPrecondition, "name count differs from group order");
  if (std::set<std::string>(names.begin(), names.end()).size() != n) {
    throw Error(ErrorCode::kPrecondition, "element names are not distinct");
  }
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const PermGroup& pg) {
  const auto& el = pg.elements();
  Table table(el.size(), std::vector<unsigned>(el.size()));
  for (size_t a = 0; a < el.size(); ++a) {
    for (size_t b = 0; b < el.size(); ++b) {
      table[a][b] = static_cast<unsigned>(std::lower_bound(el.begin(), el.end(), el[a] * el[b]) - el.begin());
    }
  }
  std::vector<std::string> names;
  for (const auto& p : el) names.push_back(p.to_cycles());
  return from_table(std::move(table), std::move(names));
}

std::optional<unsigned> FiniteGroup::find(std::string_view name) const {
  for (unsigned a = 0; a < names_.size(); ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

std::vector<unsigned> FiniteGroup::cyclic_subgroup(unsigned a) const {
  std::vector<unsigned> out{identity_};
  for (unsigned x = a; x != identity_; x = mul(x, a)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> FiniteGroup::conjugacy_class(unsigned a) const {
  std::set<unsigned> cls;
  for (unsigned g = 0; g < order(); ++g) cls.insert(conjugate(g, a));
  return {cls.begin(), cls.end()};
}

FiniteGroup quaternion_group() {
  // Units 1, i, j, k as 0..3; unit products as (sign, unit).
  static const int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const unsigned kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // Element 2u + s is the unit u with sign (-1)^s.
  FiniteGroup::Table t(8, std::vector<unsigned>(8));
  for (unsigned a = 0; a < 8; ++a) {
    for (unsigned b = 0; b < 8; ++b) {
      const unsigned ua = a / 2, ub = b / 2;
      const int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * kSign[ua][ub];
      t[a][b] = 2 * kUnit[ua][ub] + (sign < 0 ? 1 : 0);
    }
  }
  return FiniteGroup::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

PermGroup dihedral_group(unsigned m) {
  if (m < 3) throw Error(ErrorCode::kPrecondition, "dihedral group needs m >= 3");
  std::vector<unsigned> rot(m), ref(m);
  for (unsigned i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    ref[i] = (m - i) % m;
  }
  return PermGroup(m, {Permutation(rot), Permutation(ref)});
}

ConjugationGraph conjugation_graph(const FiniteGroup& grp, unsigned g1, unsigned g3) {
  if (g1 >= grp.order() || g3 >= grp.order()) throw Error(ErrorCode::kPrecondition, "element index out of range");
  if (g1 == grp.identity()) throw Error(ErrorCode::kPrecondition, "g1 must not be the identity");
  const auto powers = grp.cyclic_subgroup(g1);
  if (std::binary_search(powers.begin(), powers.end(), g3)) {
    throw Error(ErrorCode::kPrecondition, "g3 lies in the subgroup generated by g1");
  }
  ConjugationGraph r;
  r.g1 = g1;
  r.g3 = g3;
  r.g2 = grp.conjugate(g3, g1);
  r.vertices = grp.conjugacy_class(g1);
  const size_t m = r.vertices.size();
  std::vector<unsigned> pos(grp.order(), 0);
  for (unsigned v = 0; v < m; ++v) pos[r.vertices[v]] = v;

  // h ~ h' iff g.h = g_i and g.h' = g_j for some g, i.e. {h, h'} is a
  // conjugate of {g1, g2}. No edges when g2 = g1.
  std::vector<std::pair<unsigned, unsigned>> edges;
  if (r.g2 != g1) {
    for (unsigned g = 0; g < grp.order(); ++g) edges.emplace_back(pos[grp.conjugate(g, g1)], pos[grp.conjugate(g, r.g2)]);
  }
  r.graph = FiniteGraph(m, edges);

  std::vector<Permutation> acts;
  std::set<Permutation> gens;
  for (unsigned g = 0; g < grp.order(); ++g) {
    std::vector<unsigned> images(m);
    for (unsigned v = 0; v < m; ++v) images[v] = pos[grp.conjugate(g, r.vertices[v])];
    acts.emplace_back(std::move(images));
    if (!acts.back().is_identity()) gens.insert(acts.back());
  }
  r.action = PermGroup(m, {gens.begin(), gens.end()});
  r.by_automorphisms = std::all_of(acts.begin(), acts.end(), [&](const Permutation& p) { return r.graph.preserved_by(p); });
  r.transitive = is_transitive(r.action);
  for (unsigned g = 0; g < grp.order(); ++g) {
    if (acts[g].is_derangement()) r.fixed_point_free.push_back(g);
  }
  r.by_rotations = r.fixed_point_free.empty();
  return r;
}

}  // namespace rotary
