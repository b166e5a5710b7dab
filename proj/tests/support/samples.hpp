#pragma once

#include "rotary/geometry/sample.hpp"

namespace rotary::testing {

using rotary::random_cos;
using rotary::random_integer_point;
using rotary::random_rational_point;

}  // namespace rotary::testing
