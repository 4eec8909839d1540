#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "qheun/grid.hpp"

namespace qheun {

/// Seeded generator of small-height exact parameters. Every draw is checked
/// against the grid non-degeneracy predicate and redrawn on failure.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  /// num/den with |num| <= height, 1 <= den <= height, never zero.
  Rational nonzero(long height = 7);
  Rational any(long height = 7);

  GridParams grid(int range, GridKind kind = GridKind::TwoSeries);
  std::array<Rational, 8> epsilon_roots();
  /// Grid with e attached and b = q prod(e)/a.
  GridParams epsilon_grid(int range);

  std::mt19937_64& engine() { return rng_; }

 private:
  Rational base_s();
  std::mt19937_64 rng_;
};

}  // namespace qheun
