#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "qheun/rational.hpp"

namespace qheun {

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMinPrecision = 64;

/// MPFR real with its own precision. Binary operations produce a result at
/// the larger of the operand precisions, rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(long precision = kDefaultPrecision);
  BigFloat(long value, long precision);
  BigFloat(const Rational& value, long precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Decimal or "num/den" text; throws ParseError.
  static BigFloat parse(const std::string& text, long precision);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat log2(const BigFloat& a);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
/// 2^e at the given precision.
BigFloat exp2_int(long e, long precision);

/// Complex number over two BigFloats sharing one precision.
class BigComplex {
 public:
  explicit BigComplex(long precision = kDefaultPrecision);
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(const Rational& re, long precision);
  BigComplex(const Rational& re, const Rational& im, long precision);

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  long precision() const { return re_.precision(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string(int digits = 20) const;

  BigComplex operator-() const { return {-re_, -im_}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  /// Throws DivisionByZero when b == 0.
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& a);
/// Principal branch: real part >= 0, cut along the negative real axis.
BigComplex sqrt(const BigComplex& a);
BigComplex pow_int(const BigComplex& a, long k);
BigComplex inverse(const BigComplex& a);

}  // namespace qheun
