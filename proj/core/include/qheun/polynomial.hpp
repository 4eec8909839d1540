#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qheun/bigfloat.hpp"
#include "qheun/rational.hpp"

namespace qheun {

/// Dense univariate polynomial over Q; coefficient k multiplies z^k. The
/// coefficient list never has trailing zeros, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int k);
  /// c0 + c1*z
  static Polynomial linear(const Rational& c0, const Rational& c1);
  /// (z - root)
  static Polynomial root_factor(const Rational& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const;
  /// Largest k with z^k dividing the polynomial (0 for the zero polynomial).
  int low_order() const;

  Rational eval(const Rational& z) const;
  BigComplex eval(const BigComplex& z) const;

  Polynomial derivative() const;
  /// z -> p(c*z)
  Polynomial scale_arg(const Rational& c) const;
  /// z^n * p(1/z); requires n >= degree().
  Polynomial reverse(int n) const;
  /// Divides by z^k; the low k coefficients must vanish.
  Polynomial shift_down(int k) const;
  Polynomial shift_up(int k) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// "(c0 + c1*z + c2*z^2)" with exact coefficients; zero terms omitted.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& p, int k);

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the primitive pseudo-remainder sequence over Z. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace qheun
