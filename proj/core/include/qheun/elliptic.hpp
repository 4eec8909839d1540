#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qheun/bigfloat.hpp"
#include "qheun/error.hpp"
#include "qheun/heun.hpp"

namespace qheun {

/// Truncation of the theta products. K is chosen so that |p|^K stays below
/// 2^-(precision+16) with two factors of margin for arguments of size |p|^-1/2.
struct ThetaContext {
  BigComplex p;
  int truncation_order = 0;
  long precision = kDefaultPrecision;

  /// InvalidArgument unless |p| < 1. p = 0 keeps the single k = 0 factor.
  static ThetaContext make(const BigComplex& p, long precision);
};

/// prod_{k<K} (1 - p^(k+1)/z)(1 - p^k z). ZeroArgument at z = 0.
BigComplex theta(const BigComplex& z, const ThetaContext& ctx);

/// How the constants L_2, L_3 are read. Swapped puts t q^-2 p^-1 prod(a)^(1/2)
/// into L_3 and L_2 = p^2/L_3; Literal puts t q^-2 p^-1 prod(a) into L_2 and
/// L_3 = p^2/L_2.
enum class LReading { Swapped, Literal };

std::string_view to_string(LReading r);

struct EllipticParams {
  std::array<BigComplex, 8> a;
  BigComplex t;
  BigComplex s;  // q^(1/2)
  BigComplex p;
  /// Branch of prod(a)^(1/2); the principal root when absent.
  std::optional<BigComplex> sqrt_prod_a;

  BigComplex q() const { return s * s; }
  BigComplex root_prod_a() const;
};

struct RvdCoefficients {
  BigComplex plus, minus, zero;
};

/// NearPole when a theta denominator falls below 2^-(precision/2).
RvdCoefficients rvd_coefficients(const BigComplex& z, const EllipticParams& ep, const ThetaContext& ctx,
                                 LReading reading = LReading::Swapped);

/// t prod(a)^(1/2) / ((1 - t)(1 - t/q) q^2), the coefficient of 1/p in A^0.
BigComplex divergent_coefficient(const EllipticParams& ep);

struct ErrorSeries {
  std::string name;
  std::vector<std::vector<double>> per_z;  // [p index][z index]
  std::vector<double> max;                 // per p
  double order = 0;                        // least-squares slope of log max against log p
  bool decreasing = false;
};

struct ConvergenceReport {
  std::string check;
  LReading reading = LReading::Swapped;
  long precision = kDefaultPrecision;
  std::vector<std::string> p_list;
  std::vector<std::string> z_list;
  std::vector<ErrorSeries> series;
  std::vector<std::pair<std::string, std::string>> fitted;
  ErrorKind failure_kind = ErrorKind::NoConvergence;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  const ErrorSeries& get(const std::string& name) const;
  void check_ok() const;
};

struct TakemuraFixture {
  Rational s{3, 2};
  Rational t{1, 3};
  std::array<Rational, 8> e{Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(5, 4),
                            Rational(-2, 5), Rational(7, 5), Rational(3, 7), Rational(-6, 5)};
  std::vector<std::string> p_list{"1e-3", "1e-4", "1e-5"};
  std::vector<std::string> z_list{"0.37", "0.61", "1.9", "2.7", "0.83"};
  long precision = kDefaultPrecision;
  LReading reading = LReading::Swapped;
  /// Replaces a_j = s e_{j+1}^2; used as a negative control.
  std::optional<std::array<Rational, 8>> a_override;
};

/// Compares A^+, A^- and the divergence-subtracted A^0 with the gauged
/// two-series operator `exact` (c0 = 0). The constant c0_hat is fitted by a
/// linear extrapolation to p = 0 from the two smallest p, averaged over z.
ConvergenceReport limit_check_takemura(const TakemuraFixture& f, const QDifferenceOperator& exact);

struct ClassicalFixture {
  Rational s{3, 2};
  Rational t{1, 3};
  /// a_0..a_5; a_6 = (q^(3/2)/prod)^(1/2) and a_7 = violation q p/(a_0..a_6).
  std::array<Rational, 6> base{Rational(1, 2), Rational(7, 10), Rational(13, 10), Rational(9, 10), Rational(3, 5), Rational(11, 10)};
  Rational violation{1};
  std::vector<std::string> p_list{"1e-3", "1e-4", "1e-5", "1e-6"};
  std::vector<std::string> z_list{"0.37", "0.61", "1.9", "2.7", "0.83"};
  long precision = kDefaultPrecision;
};

/// (i) q^-1 p A^+ settles (Cauchy differences shrink); (ii) q^-1 p (A^+ + A^- + A^0)
/// minus the 1/p term has a cross-z spread shrinking like p.
ConvergenceReport limit_check_classical(const ClassicalFixture& f);

}  // namespace qheun
