#pragma once

#include <optional>
#include <vector>

#include "qheun/rational.hpp"

namespace qheun {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly by Gaussian elimination. Returns nullopt when A is
/// singular or not square.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

}  // namespace qheun
