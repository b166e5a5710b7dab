#pragma once

#include <vector>

#include "rotary/algebraic/poly.hpp"

namespace rotary {

/// Distinct irreducible factors over Q of a nonzero integer polynomial,
/// each primitive with positive leading coefficient, sorted by degree and
/// then by coefficients. Multiplicities are dropped. Constants have no
/// factors.
///
/// Zassenhaus: factor modulo a small prime (distinct- then equal-degree
/// splitting), Hensel-lift to beyond the Landau-Mignotte bound, and
/// recombine subsets of the lifted factors by trial division.
std::vector<IntPoly> irreducible_factors(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

}  // namespace rotary
