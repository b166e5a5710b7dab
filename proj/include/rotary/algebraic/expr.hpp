#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "rotary/algebraic/alg_real.hpp"

namespace rotary {

/// Parses the expression grammar:
///   expr := rational | expr (+|-|*|/) expr | sqrt(expr) | root(poly, index) | (expr)
/// with unary minus, `poly` an ascending integer coefficient list and
/// `index` a 0-based index into the ascending real roots.
/// Throws Error(kParse) on malformed input.
AlgReal parse_expr(std::string_view text);

/// Canonical expression string that parse_expr maps back to the same value:
/// "p/q" for rationals, "u+v*sqrt(r)" for quadratic irrationals and
/// "root(c0,...,cn,i)" otherwise.
std::string format_expr(const AlgReal& a);

std::string format_rational(const Rational& q);

std::ostream& operator<<(std::ostream& os, const AlgReal& a);

}  // namespace rotary
