#pragma once

#include "hs/rational.hpp"

#include <vector>

namespace hs {

/// Solves A x = b exactly by Gaussian elimination over Q. A must be square.
/// Throws SingularSystem when A is singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

}  // namespace hs
