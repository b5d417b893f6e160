#pragma once

#include <string>

#include "vallab/poly.hpp"

namespace vallab {

/// Parses "X^2 - 2", "3/4*X^3 + X - 1/2", "-X^2+2", ... The variable is X
/// (case-insensitive) and the '*' between a coefficient and X is optional.
Poly parse_poly(const std::string& text);

} // namespace vallab
