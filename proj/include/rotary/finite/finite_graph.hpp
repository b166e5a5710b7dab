#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotary/finite/permutation.hpp"

namespace rotary {

/// A simple undirected graph on {0, ..., n - 1}.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  /// Throws kPrecondition on loops or out-of-range endpoints; duplicate
  /// edges collapse.
  FiniteGraph(size_t n, const std::vector<std::pair<unsigned, unsigned>>& edges);

  static FiniteGraph cycle(size_t n);
  static FiniteGraph complete(size_t n);
  static FiniteGraph path(size_t n);

  size_t vertex_count() const { return n_; }
  /// Sorted pairs (u, v) with u < v.
  const std::vector<std::pair<unsigned, unsigned>>& edges() const { return edges_; }
  bool adjacent(unsigned u, unsigned v) const;
  const std::vector<unsigned>& neighbours(unsigned v) const { return adj_[v]; }

  bool is_connected() const;
  bool preserved_by(const Permutation& p) const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  size_t n_ = 0;
  std::vector<std::pair<unsigned, unsigned>> edges_;
  std::vector<std::vector<unsigned>> adj_;
};

/// Brute force over all n! relabelings; throws kBoundExceeded for n > 8.
PermGroup graph_automorphisms(const FiniteGraph& g);

/// A 2-colouring with no monochromatic edge, smallest colour 0 first.
std::optional<std::vector<int>> is_bipartite(const FiniteGraph& g);

struct RotaryVerdict {
  bool rotarily_transitive = false;
  bool verified = true;
  // "exhaustive", "derangement_free" or "unverified".
  std::string method;
  size_t aut_order = 0;
  bool vertex_transitive = false;
  size_t subgroups_examined = 0;
  std::vector<Permutation> witness_generators;
};

struct RotaryOptions {
  size_t subgroup_bound = 200;
  size_t fallback_bound = 720;
};

/// Whether some subgroup of Aut(g) acts rotarily transitively on the
/// vertices. Aut groups up to `subgroup_bound` get a full subgroup scan;
/// larger ones up to `fallback_bound` the derangement-free search; beyond
/// that the verdict is unverified.
RotaryVerdict rotary_verdict(const FiniteGraph& g, const RotaryOptions& opts = {});

/// As rotary_verdict, throwing kBoundExceeded when it cannot decide.
bool is_rotarily_transitive_graph(const FiniteGraph& g, const RotaryOptions& opts = {});

}  // namespace rotary
