#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qheun/ratfun.hpp"

namespace qheun {

enum class Series { X, Y, Extra };
std::string_view to_string(Series s);

/// one_series grids carry only the x_n nodes; the y-series checks are skipped
/// because single-series operators put beta on a bookkeeping point.
enum class GridKind { TwoSeries, OneSeries };

/// Base parameters of the Askey-Wilson grids. q = s^2, alpha = a, beta = b,
/// e_j are the square roots of epsilon_j.
struct GridParams {
  Rational s;
  Rational a;
  Rational b;
  std::optional<std::array<Rational, 8>> e;
  int range = 0;
  GridKind kind = GridKind::TwoSeries;

  Rational q() const { return s * s; }
  Rational alpha() const { return a; }
  Rational beta() const { return b; }
  /// Same parameters with alpha and beta exchanged.
  GridParams swapped() const;
  GridParams with_range(int n) const;
};

/// Throws DegenerateGrid naming the first violated condition.
void validate(const GridParams& g);
/// Same predicate without throwing; empty string when the grid is sound.
std::string degeneracy(const GridParams& g);

/// z-preimage a q^n (series X) or b q^n (series Y).
Rational z_node(const GridParams& g, Series series, int n);
/// a q^n + 1/(a q^n) (series X) or the same with b.
Rational x_node(const GridParams& g, Series series, int n);

/// 1/(x - x0) as a function of z: z/(z^2 - x0 z + 1).
RationalFunction elementary_at(const Rational& x0);
RationalFunction elementary(const GridParams& g, Series series, int n);

bool is_x_symmetric(const RationalFunction& f);

struct PfKey {
  Series series = Series::X;
  int index = 0;
  friend auto operator<=>(const PfKey&, const PfKey&) = default;
  std::string to_string() const;
};

/// constant + sum residue/(x - node) + sum coeff/(x - node)^2. Nodes on the
/// two grids are addressed by (series, n); Extra nodes index extra_nodes.
struct PartialFractionForm {
  std::map<PfKey, Rational> terms;
  std::map<PfKey, Rational> double_terms;
  Rational constant;
  std::vector<Rational> extra_nodes;

  Rational node(const GridParams& g, const PfKey& k) const;
  Rational residue(const PfKey& k) const;
  /// Compose with x = z + 1/z.
  RationalFunction to_z(const GridParams& g) const;
  std::string to_string() const;
  friend bool operator==(const PartialFractionForm&, const PartialFractionForm&) = default;
};

struct PfOptions {
  /// x-values of admissible poles off both grids (their z-preimages must be rational).
  std::vector<Rational> allow_extra;
  /// Grid nodes where a second-order pole in x is accepted and split off.
  std::vector<PfKey> allow_double;
};

/// Partial fractions in x of an x-symmetric function whose poles lie on the
/// grids (indices |n| <= range + 1) or on allow_extra. Verifies the exact
/// reconstruction before returning.
PartialFractionForm partial_fractions_x(const RationalFunction& f, const GridParams& g, const PfOptions& opts = {});

}  // namespace qheun
