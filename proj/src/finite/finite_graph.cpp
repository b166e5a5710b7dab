#include "rotary/finite/finite_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finite/indexed_group.hpp"
#include "rotary/error.hpp"

namespace rotary {

FiniteGraph::FiniteGraph(size_t n, const std::vector<std::pair<unsigned, unsigned>>& edges) : n_(n), adj_(n) {
  std::set<std::pair<unsigned, unsigned>> unique;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::kPrecondition, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::kPrecondition, "loops are not allowed");
    unique.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

FiniteGraph FiniteGraph::cycle(size_t n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned i = 0; i < n && n >= 3; ++i) e.emplace_back(i, static_cast<unsigned>((i + 1) % n));
  if (n == 2) e.emplace_back(0, 1);
  return FiniteGraph(n, e);
}

FiniteGraph FiniteGraph::complete(size_t n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return FiniteGraph(n, e);
}

FiniteGraph FiniteGraph::path(size_t n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return FiniteGraph(n, e);
}

bool FiniteGraph::adjacent(unsigned u, unsigned v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool FiniteGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<unsigned> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    const unsigned x = stack.back();
    stack.pop_back();
    for (unsigned y : adj_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n_;
}

bool FiniteGraph::preserved_by(const Permutation& p) const {
  if (p.degree() != n_) throw Error(ErrorCode::kPrecondition, "permutation degree differs from vertex count");
  for (auto [u, v] : edges_) {
    if (!adjacent(p(u), p(v))) return false;
  }
  return true;
}

PermGroup graph_automorphisms(const FiniteGraph& g) {
  const size_t n = g.vertex_count();
  if (n > 8) throw Error(ErrorCode::kBoundExceeded, "brute-force automorphisms need at most 8 vertices");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

  std::vector<Permutation> elements;
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (!adj[images[u]][images[v]]) {
        ok = false;
        break;
      }
    }
    if (ok) elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  // Greedy generating set: take each element not yet generated.
  std::vector<Permutation> gens;
  std::set<Permutation> generated{Permutation::identity(n)};
  for (const auto& x : elements) {
    if (generated.count(x)) continue;
    gens.push_back(x);
    std::vector<Permutation> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& a : frontier) {
        for (const auto& s : gens) {
          Permutation b = a * s;
          if (generated.insert(b).second) next.push_back(std::move(b));
        }
      }
      frontier = std::move(next);
    }
  }
  return PermGroupAccess::make(n, std::move(gens), std::move(elements));
}

std::optional<std::vector<int>> is_bipartite(const FiniteGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (unsigned s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<unsigned> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      const unsigned x = queue[i];
      for (unsigned y : g.neighbours(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

RotaryVerdict rotary_verdict(const FiniteGraph& g, const RotaryOptions& opts) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::kPrecondition, "graph has no vertices");
  const PermGroup aut = graph_automorphisms(g);
  RotaryVerdict r;
  r.aut_order = aut.order();
  r.vertex_transitive = is_transitive(aut);
  if (r.aut_order <= opts.subgroup_bound) {
    r.method = "exhaustive";
    const auto subs = all_subgroups(aut, opts.subgroup_bound);
    r.subgroups_examined = subs.size();
    for (const auto& s : subs) {
      if (is_rotarily_transitive_action(s)) {
        r.rotarily_transitive = true;
        r.witness_generators = s.generators();
        break;
      }
    }
  } else if (r.aut_order <= opts.fallback_bound) {
    r.method = "derangement_free";
    auto search = derangement_free_search(aut, opts.fallback_bound);
    r.rotarily_transitive = search.found;
    r.subgroups_examined = search.subgroups_examined;
    r.witness_generators = std::move(search.witness_generators);
  } else {
    r.method = "unverified";
    r.verified = false;
  }
  return r;
}

bool is_rotarily_transitive_graph(const FiniteGraph& g, const RotaryOptions& opts) {
  const RotaryVerdict r = rotary_verdict(g, opts);
  if (!r.verified) throw Error(ErrorCode::kBoundExceeded, "automorphism group exceeds every search bound");
  return r.rotarily_transitive;
}

}  // namespace rotary
