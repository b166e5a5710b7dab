#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotary/finite/finite_graph.hpp"
#include "rotary/finite/permutation.hpp"

namespace rotary {

/// An abstract finite group on element indices 0..n-1.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<unsigned>>;

  /// Row-major table, table[a][b] = a * b. Validated exhaustively
  /// (closure, associativity, identity, inverses); throws kPrecondition.
  static FiniteGroup from_table(Table table, std::vector<std::string> names = {});
  /// Elements in PermGroup order, named by cycle notation.
  static FiniteGroup from_permutations(const PermGroup& g);

  size_t order() const { return table_.size(); }
  unsigned identity() const { return identity_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
  unsigned inverse(unsigned a) const { return inverse_[a]; }
  /// g h g^-1.
  unsigned conjugate(unsigned g, unsigned h) const { return mul(mul(g, h), inverse(g)); }
  const Table& table() const { return table_; }

  const std::string& name(unsigned a) const { return names_[a]; }
  std::optional<unsigned> find(std::string_view name) const;
  std::vector<unsigned> cyclic_subgroup(unsigned a) const;
  std::vector<unsigned> conjugacy_class(unsigned a) const;

 private:
  Table table_;
  std::vector<std::string> names_;
  std::vector<unsigned> inverse_;
  unsigned identity_ = 0;
};

/// Quaternion group with elements named 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();
/// Symmetries of the regular m-gon, order 2m, acting on m points.
PermGroup dihedral_group(unsigned m);

struct ConjugationGraph {
  unsigned g1 = 0;
  unsigned g2 = 0;  // g3 g1 g3^-1
  unsigned g3 = 0;
  std::vector<unsigned> vertices;  // the conjugacy class of g1, ascending
  FiniteGraph graph;
  PermGroup action{0, {}};  // conjugation on the class, by vertex position
  bool by_automorphisms = false;
  bool transitive = false;
  bool by_rotations = false;
  std::vector<unsigned> fixed_point_free;  // group elements with no fixed vertex
};

/// Graph on the class V of g1: h, h' adjacent when some g sends them to g1
/// and g2 in either order. Requires g1 != identity and g3 outside <g1>.
ConjugationGraph conjugation_graph(const FiniteGroup& grp, unsigned g1, unsigned g3);

}  // namespace rotary
