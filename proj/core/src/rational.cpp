#include "qheun/rational.hpp"

#include <cctype>

#include "qheun/error.hpp"

namespace qheun {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, std::to_string(num) + "/0");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) fail(ErrorKind::DivisionByZero, num.get_str() + "/0");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part))
    fail(ErrorKind::ParseError, "malformed exact scalar \"" + original + "\"");
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (sgn(den) == 0) fail(ErrorKind::DivisionByZero, "zero denominator in \"" + original + "\"");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, to_string() + " / 0");
  v_ /= o.v_;
  return *this;
}

Rational inverse(const Rational& a) { return Rational(1) / a; }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow_int(const Rational& a, long k) {
  if (k < 0) {
    if (a.is_zero()) fail(ErrorKind::DivisionByZero, "0^" + std::to_string(k));
    return pow_int(inverse(a), -k);
  }
  Rational result(1);
  Rational base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::optional<Rational> exact_sqrt(const Rational& a) {
  if (a.sign() < 0) return std::nullopt;
  const mpz_class num = a.numerator();
  const mpz_class den = a.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace qheun
