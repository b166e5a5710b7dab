#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rotary {

/// A bijection of {0, ..., n - 1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws kPrecondition unless `images` is a bijection of [0, n).
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(size_t degree);
  /// Cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  /// A `degree` of 0 means one past the largest index mentioned.
  static Permutation parse_cycles(std::string_view text, size_t degree = 0);

  size_t degree() const { return images_.size(); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  const std::vector<unsigned>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation extended(size_t degree) const;

  size_t fixed_points() const;
  bool is_identity() const;
  bool is_derangement() const { return fixed_points() == 0; }

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

/// A permutation group given by generators. The element list is computed on
/// first use and kept sorted by image list.
class PermGroup {
 public:
  /// Throws kPrecondition when a generator's degree differs from `degree`.
  PermGroup(size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(size_t degree);
  static PermGroup symmetric(size_t degree);

  size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const;
  size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;

 private:
  friend struct PermGroupAccess;
  PermGroup(size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

  struct Cache;
  size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

size_t orbit_count(const PermGroup& g);
/// Orbit representative of each point (the smallest point of its orbit).
std::vector<unsigned> orbit_labels(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// Average number of fixed points over the elements of g.
mpq_class cauchy_frobenius(const PermGroup& g);

/// Transitive and every element fixes some point.
bool is_rotarily_transitive_action(const PermGroup& g);

/// The first fixed-point-free element in element order. Requires g
/// transitive on at least 2 points (kPrecondition); a transitive group with
/// no derangement raises kInternal.
Permutation jordan_witness(const PermGroup& g);

/// Every subgroup of g, deduplicated by element set and sorted by order,
/// then element list. Throws kBoundExceeded when |g| > bound.
std::vector<PermGroup> all_subgroups(const PermGroup& g, size_t bound = 200);

/// Outcome of looking for a transitive subgroup in which every element has a
/// fixed point.
struct RotarySubgroupSearch {
  bool found = false;
  size_t subgroups_examined = 0;
  std::vector<Permutation> witness_generators;
};

/// Scans only subgroups made of non-derangements: any subgroup containing a
/// derangement is discarded together with everything above it, which keeps
/// the lattice walk small. Throws kBoundExceeded when |g| > bound.
RotarySubgroupSearch derangement_free_search(const PermGroup& g, size_t bound = 720);

}  // namespace rotary
