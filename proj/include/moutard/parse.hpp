#pragma once

#include <string_view>

#include "moutard/tripoly.hpp"

namespace moutard {

/// Parses a polynomial expression such as "160 + 4*x^2 + 17*(x^2+y^2)^2"
/// or "(1 - i/4)*z^2 + z/2".
///
/// Variables: x, y (physical coordinates, rewritten through z and w), z,
/// w or zbar, t, and the imaginary unit i. Operators: + - * ^ and division
/// by a nonzero constant. Numbers may be integers or finite decimals.
/// Throws ParseError.
TriPoly parse_tripoly(std::string_view text);

}  // namespace moutard
