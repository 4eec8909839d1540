#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qheun/error.hpp"
#include "qheun/grid.hpp"
#include "qheun/linsolve.hpp"
#include "qheun/ratfun.hpp"

namespace qheun {

/// A1(z) T+ + A2(z) T- + A0(z) I with (T+ f)(z) = f(qz), (T- f)(z) = f(z/q).
struct QDifferenceOperator {
  RationalFunction A1;
  RationalFunction A2;
  RationalFunction A0;
  Rational q;
  std::string label;

  friend bool operator==(const QDifferenceOperator& a, const QDifferenceOperator& b) {
    return a.q == b.q && a.A1 == b.A1 && a.A2 == b.A2 && a.A0 == b.A0;
  }
};

RationalFunction apply(const QDifferenceOperator& W, const RationalFunction& f);

/// A2 = A1(1/z) and A0(1/z) = A0(z).
bool has_aw_symmetry(const QDifferenceOperator& W);

/// Carries the operator that failed a post-construction check.
class OperatorCheckError : public Error {
 public:
  OperatorCheckError(QDifferenceOperator op, std::vector<std::string> issues);
  const QDifferenceOperator& op() const { return op_; }
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  QDifferenceOperator op_;
  std::vector<std::string> issues_;
};

struct GenericBuild {
  QDifferenceOperator W;
  std::vector<std::string> issues;
};

/// Lagrange-type construction from the images r1, r2, r3 of 1/(x - x_j),
/// j = 0, 1, 2. issues lists every failed post-condition: pole pattern of the
/// inputs, reproduction of the images, and the z -> 1/z symmetry.
GenericBuild construct_generic_W(const GridParams& g, const PartialFractionForm& r1, const PartialFractionForm& r2,
                                 const PartialFractionForm& r3);
/// Same, throwing OperatorCheckError (InternalCheckFailed) when issues is non-empty.
QDifferenceOperator build_generic_W(const GridParams& g, const PartialFractionForm& r1, const PartialFractionForm& r2,
                                    const PartialFractionForm& r3);

struct WAWCoefficients {
  std::array<Rational, 11> rho;
  std::array<Rational, 6> c;
  friend bool operator==(const WAWCoefficients&, const WAWCoefficients&) = default;
};

/// The six A0 basis functions: 1, z + 1/z, z^2 + 1/z^2, and the three
/// double-factor terms at beta, s^-1 and -s^-1.
std::array<RationalFunction, 6> a0_basis(const GridParams& g);

/// Fills rho_10, c_1, c_2, c_4, c_5 from the twelve free coefficients.
WAWCoefficients complete_waw(const GridParams& g, const std::array<Rational, 10>& rho, const Rational& c0,
                             const Rational& c3);

struct RelationCheck {
  std::string name;
  Rational expected;
  Rational actual;
  bool applicable = true;
  bool holds() const { return !applicable || expected == actual; }
};

/// The five dependent-coefficient relations, each with both sides.
std::vector<RelationCheck> waw_relations(const GridParams& g, const WAWCoefficients& k);

/// InvariantViolation when a dependent relation fails.
QDifferenceOperator build_W_AW(const GridParams& g, const WAWCoefficients& k);

/// ShapeMismatch when A1 lacks the W_AW denominator structure; BasisSolveFailed
/// when A0 is not in the span of a0_basis.
WAWCoefficients extract_waw_coefficients(const QDifferenceOperator& W, const GridParams& g);

/// sigma_k of the values; IndexOutOfRange unless 0 <= k <= size.
Rational elementary_symmetric(const std::vector<Rational>& values, int k);

enum class Which { W1, W2 };

struct EtaParams {
  std::array<Rational, 9> eta;
  Rational c0;
  Which which = Which::W1;
};

struct EpsilonParams {
  std::array<Rational, 8> e;  // square roots of epsilon_j
  Rational c0;
  Rational eta0 = Rational(1);
};

Rational product(const std::array<Rational, 8>& e);
std::array<Rational, 8> squares(const std::array<Rational, 8>& e);

/// eta_k = (-1)^k s^k sigma_k(eps) eta0.
std::array<Rational, 9> eta_from_epsilon(const Rational& s, const std::array<Rational, 8>& e, const Rational& eta0);

/// eta_0 that makes the eta-form and epsilon-form of W1 coincide: -q^(-3/2).
Rational w1_eta0_pin(const Rational& s);

struct A0Coefficients {
  Rational c0, c1, c2, c4, c5;
  friend bool operator==(const A0Coefficients&, const A0Coefficients&) = default;
};

/// Signs in front of the s^-1 and -s^-1 terms of A0 for the one-series
/// operator. AsPrinted keeps c4 = +(1/2) s^3 sum s^-j eta_j, which is not
/// raising; Corrected negates c4 and c5.
enum class W1Signs { Corrected, AsPrinted };

A0Coefficients w1_coefficients(const GridParams& g, const EtaParams& p, W1Signs signs = W1Signs::Corrected);
A0Coefficients w1_coefficients(const GridParams& g, const EpsilonParams& p);
/// Product-form coefficients shared by the epsilon form of W1 and the gauged
/// two-series operator; no condition on alpha.
A0Coefficients epsilon_product_coefficients(const Rational& s, const EpsilonParams& p);
A0Coefficients w2_coefficients(const GridParams& g, const EtaParams& p);

/// A0 = c0 + c1 (z + 1/z) + c2 (z^2 + 1/z^2) + sign4 c4 B4 + c5 B5.
RationalFunction assemble_a0(const Rational& s, const A0Coefficients& c, int sign4);

QDifferenceOperator build_W1(const GridParams& g, const EtaParams& p, W1Signs signs = W1Signs::Corrected);
/// Requires alpha = s prod(e).
QDifferenceOperator build_W1(const GridParams& g, const EpsilonParams& p);
QDifferenceOperator build_W2(const GridParams& g, const EtaParams& p);
/// eta from the epsilon parametrization; requires alpha beta = q prod(e).
QDifferenceOperator build_W2(const GridParams& g, const EpsilonParams& p);

/// sum beta^j rho_j and sum q^(10-j) beta^j rho_j; both vanish when the
/// operator has no y_{-1} pole and no double pole at y_0.
std::array<Rational, 2> w2_q10_conditions(const WAWCoefficients& k, const GridParams& g);

enum class RaisingMode { OneSeries, TwoSeries, WAW };
std::string_view to_string(RaisingMode m);

struct RaisingEntry {
  std::string input;
  int n = -1;  // highest x index in the input (-1: none)
  int m = -1;  // highest y index in the input (-1: none)
  bool single = true;
  Series series = Series::X;  // for single inputs
  bool pass = false;
  bool five_term = true;
  std::string reason;
  std::optional<PartialFractionForm> image;
};

struct RaisingReport {
  RaisingMode mode = RaisingMode::OneSeries;
  int n_max = 0;
  int m_max = 0;
  std::uint64_t seed = 0;
  std::vector<RaisingEntry> entries;
  bool pass() const;
  /// RaisingViolation naming the first failing entry.
  void check() const;
};

struct RaisingOptions {
  std::uint64_t seed = 0;
  bool combinations = true;
};

RaisingReport verify_raising(const QDifferenceOperator& W, const GridParams& g, RaisingMode mode, int n_max, int m_max,
                             const RaisingOptions& opts = {});

/// hat xi_{n,-1} .. hat xi_{n,3} of the two-series operator; series Y swaps
/// alpha and beta. DegenerateDenominator when a displayed denominator vanishes.
std::array<Rational, 5> xi_hat_closed_form(const GridParams& g, const EtaParams& p, int n, Series series);

struct XiHatComparison {
  bool match = true;
  struct Row {
    PfKey key;
    Rational expected;
    Rational actual;
  };
  std::vector<Row> rows;
};

/// Expected residues of W2 {1/(x - node_n)} from the closed forms, with
/// coincident nodes merged and c0 added at the x_n slot, compared to image.
XiHatComparison compare_xi_hat(const GridParams& g, const EtaParams& p, int n, Series series,
                               const PartialFractionForm& image);

struct WawYAction {
  PartialFractionForm y0;
  PartialFractionForm y1;
  std::vector<std::string> issues;
};

/// Images of 1/(x - y_0) and 1/(x - y_1), checked against the expected
/// patterns: {x0, y-1, y0, y0^2, y1} and {x0, y0, y0^2, y1, y2}.
WawYAction waw_y_actions(const QDifferenceOperator& W, const GridParams& g, bool require_presence = true);

}  // namespace qheun
