#include "qheun/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "qheun/error.hpp"

namespace qheun {

namespace {

long checked_precision(long precision) {
  if (precision < kMinPrecision)
    fail(ErrorKind::InvalidArgument, "precision " + std::to_string(precision) + " below " + std::to_string(kMinPrecision) + " bits");
  return precision;
}

long joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long precision) {
  mpfr_init2(v_, checked_precision(precision));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision) {
  mpfr_init2(v_, checked_precision(precision));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision) {
  mpfr_init2(v_, checked_precision(precision));
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(const std::string& text, long precision) {
  if (text.find('/') != std::string::npos) return BigFloat(Rational::parse(text), precision);
  BigFloat r(precision);
  if (text.empty()) fail(ErrorKind::ParseError, "empty real");
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || *end != '\0' || end == text.c_str())
    fail(ErrorKind::ParseError, "malformed real \"" + text + "\"");
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&raw, fmt.c_str(), v_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, a.to_string() + " / 0");
  BigFloat r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat log2(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log2(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat exp2_int(long e, long precision) {
  BigFloat r(1, precision);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigComplex::BigComplex(long precision) : re_(precision), im_(precision) {}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const long p = joint(re_, im_);
  if (re_.precision() != p) re_ = re_ + BigFloat(p);
  if (im_.precision() != p) im_ = im_ + BigFloat(p);
}

BigComplex::BigComplex(const Rational& re, long precision) : re_(re, precision), im_(precision) {}

BigComplex::BigComplex(const Rational& re, const Rational& im, long precision)
    : re_(re, precision), im_(im, precision) {}

std::string BigComplex::to_string(int digits) const {
  if (im_.is_zero()) return re_.to_string(digits);
  return "(" + re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).to_string(digits) + "i)";
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, BigFloat(joint(a.re_, b.re_))};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, a.to_string() + " / 0");
  if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
  const BigFloat norm = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / norm, (a.im_ * b.re_ - a.re_ * b.im_) / norm};
}

BigFloat abs(const BigComplex& a) { return hypot(a.real(), a.imag()); }

BigComplex sqrt(const BigComplex& a) {
  const long p = a.precision();
  if (a.is_zero()) return BigComplex(p);
  const BigFloat m = abs(a);
  const BigFloat two(2, p);
  BigFloat re = sqrt((m + a.real()) / two);
  BigFloat im = sqrt((m - a.real()) / two);
  if (a.imag().sign() < 0) im = -im;
  return {re, im};
}

BigComplex inverse(const BigComplex& a) { return BigComplex(Rational(1), a.precision()) / a; }

BigComplex pow_int(const BigComplex& a, long k) {
  if (k < 0) {
    if (a.is_zero()) fail(ErrorKind::DivisionByZero, "0^" + std::to_string(k));
    return pow_int(inverse(a), -k);
  }
  BigComplex result(Rational(1), a.precision());
  BigComplex base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace qheun
