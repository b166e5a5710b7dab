#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rotary/finite/permutation.hpp"

namespace rotary {

struct PermGroupAccess {
  static PermGroup make(size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements) {
    return PermGroup(degree, std::move(generators), std::move(elements));
  }
};

namespace detail {

using Bits = std::vector<uint64_t>;

inline bool test_bit(const Bits& b, unsigned i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(Bits& b, unsigned i) { b[i >> 6] |= uint64_t{1} << (i & 63); }

struct BitsHash {
  size_t operator()(const Bits& b) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : b) h = (h ^ w) * 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

// A subgroup of an IndexedGroup: its element set and a generating set.
struct Subgroup {
  Bits bits;
  std::vector<unsigned> gens;
  std::vector<unsigned> members;  // closure order, identity first
};

// The elements of a permutation group with a full multiplication table.
class IndexedGroup {
 public:
  explicit IndexedGroup(const PermGroup& g);

  size_t size() const { return elems_.size(); }
  unsigned identity() const { return identity_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[static_cast<size_t>(a) * size() + b]; }
  const Permutation& element(unsigned i) const { return elems_[i]; }
  bool derangement(unsigned i) const { return derangement_[i]; }

  // Subgroup generated by `gens`; nullopt when `avoid_derangements` and the
  // closure meets a derangement.
  std::optional<Subgroup> closure(const std::vector<unsigned>& gens, bool avoid_derangements = false) const;

  PermGroup to_perm_group(const Subgroup& s) const;
  bool transitive(const Subgroup& s) const;

 private:
  size_t degree_;
  std::vector<Permutation> elems_;
  std::vector<unsigned> table_;
  std::vector<bool> derangement_;
  unsigned identity_ = 0;
};

}  // namespace detail
}  // namespace rotary
