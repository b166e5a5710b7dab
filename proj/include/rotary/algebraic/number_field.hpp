#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rotary/algebraic/poly.hpp"
#include "rotary/algebraic/roots.hpp"

namespace rotary {

/// A real number field Q(theta), theta a real root of an irreducible
/// integer polynomial pinned down by an isolating interval. Elements are
/// rational polynomials in theta of degree below the field degree, so a
/// reduced representation is unique and equality is coefficient equality.
///
/// Fields are interned: the same (minimal polynomial, root) pair always
/// yields the same object, and known subfield embeddings are recorded on
/// the larger field so that values built from a common ancestor combine
/// without new resultant work. All members are safe for concurrent use.
class NumberField {
 public:
  using Ptr = std::shared_ptr<const NumberField>;

  static Ptr rationals();

  /// Field generated by the unique root of the irreducible `minpoly` in
  /// `isolating` (non-root endpoints unless it is a point interval).
  static Ptr from_root(const IntPoly& minpoly, const Interval& isolating);

  int degree() const { return degree_; }
  bool is_rational() const { return degree_ == 1; }
  const IntPoly& minpoly() const { return minpoly_; }
  uint64_t id() const { return id_; }

  /// Enclosure of the generator of width at most 2^-bits.
  Interval generator(int bits) const;

  RatPoly reduce(const RatPoly& a) const;
  RatPoly mul(const RatPoly& a, const RatPoly& b) const;
  RatPoly inverse(const RatPoly& a) const;
  /// Evaluates a polynomial with coefficients in this field at an element.
  RatPoly compose(const RatPoly& outer, const RatPoly& inner) const;

  /// Enclosure of an element of width at most 2^-bits.
  Interval approx(const RatPoly& a, int bits) const;
  int sign(const RatPoly& a) const;
  IntPoly minimal_polynomial(const RatPoly& a) const;

  /// Records that `sub` embeds here with its generator sent to `image`.
  void add_subfield(const Ptr& sub, const RatPoly& image) const;
  /// Image of the generator of `sub` if `sub` is a known subfield.
  std::optional<RatPoly> embedding_of(const NumberField& sub) const;

  NumberField(IntPoly minpoly, Interval isolating, uint64_t id);

 private:
  std::optional<RatPoly> embedding_of_impl(const NumberField& sub, std::vector<uint64_t>& visiting) const;

  IntPoly minpoly_;
  RatPoly monic_;
  int degree_;
  uint64_t id_;

  mutable std::mutex mu_;
  mutable Interval interval_;
  mutable std::vector<std::pair<Ptr, RatPoly>> subfields_;
  mutable std::map<uint64_t, RatPoly> embedding_cache_;
};

/// Two elements rewritten in one field containing both.
struct CommonField {
  NumberField::Ptr field;
  RatPoly a;
  RatPoly b;
};

CommonField unify(const NumberField::Ptr& fa, const RatPoly& a, const NumberField::Ptr& fb, const RatPoly& b);

/// Result of adjoining a real root s of g(Y) = Y^e + c_{e-1} Y^{e-1} + ...
/// (coefficients in `base`) to `base`.
struct Adjunction {
  NumberField::Ptr field;  // base(s); equals `base` when s already lies in it
  RatPoly base_generator;  // image of base's generator
  RatPoly root;            // s
};

/// `lower` holds c_0 .. c_{e-1}; `root_enclosure(bits)` must return
/// intervals around the wanted root that shrink with bits.
Adjunction adjoin_root(const NumberField::Ptr& base, const std::vector<RatPoly>& lower,
                       const std::function<Interval(int)>& root_enclosure);

}  // namespace rotary
