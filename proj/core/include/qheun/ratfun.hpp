#pragma once

#include <string>

#include "qheun/polynomial.hpp"

namespace qheun {

/// num/den in lowest terms with a monic denominator. Two functions are equal
/// iff their normalized forms are structurally equal.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(Polynomial p);
  /// Normalizes; throws ZeroDenominator when den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  /// The identity function z.
  static RationalFunction z();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function; InvalidArgument otherwise.
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws ZeroDenominator when b is identically zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// z -> f(c*z); ZeroScale for c = 0.
  RationalFunction scale_arg(const Rational& c) const;
  /// z -> f(1/z)
  RationalFunction invert_arg() const;
  /// Treats *this as g(x) and returns z -> g(z + 1/z).
  RationalFunction compose_x() const;

  /// PoleAtPoint when den(z0) = 0.
  Rational eval(const Rational& z0) const;
  BigComplex eval(const BigComplex& z0) const;

  /// num(z0)/den'(z0). NotAPole if den(z0) != 0, HigherOrderPole if den'(z0) = 0.
  Rational residue_at_simple_root(const Rational& z0) const;

  /// "(c0 + c1*z + ...)/(d0 + d1*z + ...)"
  std::string to_string() const;

 private:
  struct Trusted {};
  RationalFunction(Polynomial num, Polynomial den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& f, int k);

/// x(z) = z + 1/z as a rational function of z.
RationalFunction x_of_z();

}  // namespace qheun
