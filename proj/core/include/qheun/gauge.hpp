#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qheun/heun.hpp"

namespace qheun {

/// G(z) = psi(qz)/psi(z). psi itself is never formed.
struct GaugeRatio {
  RationalFunction G;
  std::string label;
};

enum class Direction { PsiInvWPsi, PsiWPsiInv };

std::string_view to_string(Direction d);

/// psi^-1 W psi = (A1 G, A2 / G(z/q), A0); psi W psi^-1 = (A1 / G, A2 G(z/q), A0).
QDifferenceOperator conjugate(const QDifferenceOperator& W, const GaugeRatio& G, Direction d);

/// q^2 z^2 (alpha z - 1)(beta z - 1) / ((qz - alpha)(qz - beta)).
GaugeRatio gauge_ratio_takemura(const GridParams& g);

/// The gauge linking the two-series and one-series operators, with E in the
/// place of epsilon_8.
GaugeRatio gauge_ratio_w2_w1(const Rational& s, const Rational& alpha, const Rational& beta, const Rational& E);

/// Gauged two-series operator written directly in product form.
QDifferenceOperator takemura_direct(const GridParams& g, const EpsilonParams& p);

struct ComponentDiff {
  std::string component;  // "A1", "A2" or "A0"
  RationalFunction diff;
  bool constant_only() const { return diff.is_constant() && !diff.is_zero(); }
};

struct CoincidenceReport {
  QDifferenceOperator route_a;
  QDifferenceOperator route_b;
  std::vector<ComponentDiff> diffs;  // nonzero components only
  bool pass() const { return diffs.empty(); }
  /// CoincidenceFailed naming the differing components.
  void check() const;
};

/// Route a conjugates the eta-built two-series operator; route b is
/// takemura_direct. route_b_c0 overrides c0 on route b.
CoincidenceReport verify_takemura_coincidence(const GridParams& g, const EpsilonParams& p,
                                              std::optional<Rational> route_b_c0 = std::nullopt);

struct Interpretation {
  bool gauged = false;           // two-series side taken after the Takemura gauge
  bool substituted_gauge = true;  // gauge uses 1/epsilon_8 rather than epsilon_8
  Direction direction = Direction::PsiInvWPsi;
  std::string id() const;
  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

struct InterpretationResult {
  Interpretation interp;
  std::vector<ComponentDiff> diffs;
  bool pass() const { return diffs.empty(); }
};

struct RelationReport {
  Rational epsilon8;
  Rational alpha2, beta2;
  std::vector<InterpretationResult> results;
  std::optional<Interpretation> passing() const;
  /// RelationFailed with every interpretation's diffs when none passes.
  void check() const;
};

/// Two-series operator at e_8 -> 1/e_8 versus epsilon_8^-1 times the gauged
/// one-series operator. g.s and g.a fix s and the free alpha of the
/// two-series side; its beta is q prod(e')/alpha. The one-series side uses
/// alpha = s prod(e), beta = s. c0 of the two-series side is c0/epsilon_8.
RelationReport verify_w2_w1_relation(const GridParams& g, const EpsilonParams& p);

}  // namespace qheun
