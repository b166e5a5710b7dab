#pragma once

#include <random>

#include "rotary/geometry/point.hpp"

// Seeded random instances for tests and the CLI's sampling commands.
namespace rotary {

// Rational point of the unit sphere by inverse stereographic projection.
inline ProjPoint random_rational_point(std::mt19937_64& rng, int height = 6) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  const Rational u(num(rng), den(rng)), v(num(rng), den(rng));
  Rational uc = u, vc = v;
  uc.canonicalize();
  vc.canonicalize();
  const Rational n = uc * uc + vc * vc + 1;
  return ProjPoint::from_unit({AlgReal(2 * uc / n), AlgReal(2 * vc / n), AlgReal((uc * uc + vc * vc - 1) / n)});
}

// Integer direction normalized with a square root.
inline ProjPoint random_integer_point(std::mt19937_64& rng, int height = 4) {
  std::uniform_int_distribution<int> c(-height, height);
  for (;;) {
    const int a = c(rng), b = c(rng), d = c(rng);
    if (a == 0 && b == 0 && d == 0) continue;
    return make_point(AlgReal(a), AlgReal(b), AlgReal(d));
  }
}

inline Rational random_cos(std::mt19937_64& rng, int lo_num, int hi_num, int den) {
  std::uniform_int_distribution<int> n(lo_num, hi_num);
  Rational c(n(rng), den);
  c.canonicalize();
  return c;
}

}  // namespace rotary
