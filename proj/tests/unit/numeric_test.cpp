#include <doctest.h>

#include <random>

#include "qheun/bigfloat.hpp"
#include "qheun/error.hpp"
#include "qheun/rational.hpp"
#include "test_random.hpp"

using namespace qheun;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("exact arithmetic examples") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(kind_of([] { return Rational(1, 3) / Rational(0); }) == ErrorKind::DivisionByZero);
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("pow_int examples") {
  CHECK(pow_int(Rational(3, 2), 4) == Rational(81, 16));
  CHECK(pow_int(Rational(-7, 3), 0) == Rational(1));
  CHECK(pow_int(Rational(2, 3), -3) == Rational(27, 8));
  CHECK(kind_of([] { return pow_int(Rational(0), -1); }) == ErrorKind::DivisionByZero);
  CHECK(pow_int(Rational(0), 0) == Rational(1));
}

TEST_CASE("text form round trip and rejection") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  for (const char* bad : {"2//3", "1/-2", "", "1.5", "abc", "-", "3/", "/4", " 1"})
    CHECK(kind_of([&] { return Rational::parse(bad); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { return Rational::parse("1/0"); }) == ErrorKind::DivisionByZero);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = testing::small_rational(rng, 1000000, 1000000);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("exact_sqrt") {
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
  CHECK(exact_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const Rational a = testing::small_rational(rng, 50, 40);
    const Rational b = testing::small_rational(rng, 50, 40);
    const Rational c = testing::small_rational(rng, 50, 40);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("BigFloat precision handling") {
  CHECK(kind_of([] { return BigFloat(32); }) == ErrorKind::InvalidArgument);
  const BigFloat a(Rational(1, 3), 64);
  const BigFloat b(Rational(1, 7), 200);
  CHECK((a + b).precision() == 200);
  CHECK((a * b).precision() == 200);
  CHECK(BigFloat::parse("0.25", 128) == BigFloat(Rational(1, 4), 128));
  CHECK(BigFloat::parse("3/8", 128) == BigFloat(Rational(3, 8), 128));
  CHECK(kind_of([] { return BigFloat::parse("0.2x", 128); }) == ErrorKind::ParseError);
}

TEST_CASE("BigComplex arithmetic") {
  const long prec = 256;
  const BigComplex i(Rational(0), Rational(1), prec);
  const BigComplex m1 = i * i;
  CHECK(m1.real() == BigFloat(-1, prec));
  CHECK(m1.imag().is_zero());
  const BigComplex z(Rational(3), Rational(4), prec);
  CHECK(abs(z) == BigFloat(5, prec));
  const BigComplex w = z / z;
  CHECK(abs(w - BigComplex(Rational(1), prec)).to_double() < 1e-70);
  CHECK(kind_of([&] { return z / BigComplex(prec); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { return pow_int(BigComplex(prec), -2); }) == ErrorKind::DivisionByZero);
  const BigComplex r = sqrt(BigComplex(Rational(-4), prec));
  CHECK(r.real().is_zero());
  CHECK(r.imag() == BigFloat(2, prec));
  const BigComplex p = pow_int(z, 3);
  CHECK(p.real() == BigFloat(-117, prec));
  CHECK(p.imag() == BigFloat(44, prec));
  CHECK(abs(pow_int(z, -2) * pow_int(z, 2) - BigComplex(Rational(1), prec)).to_double() < 1e-70);
}

TEST_CASE("principal square root branch") {
  const long prec = 128;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const BigComplex z(testing::small_rational(rng), testing::small_rational(rng), prec);
    const BigComplex r = sqrt(z);
    CHECK(r.real().sign() >= 0);
    CHECK(abs(r * r - z).to_double() < 1e-30);
  }
}

TEST_CASE("results at P and 2P bits agree to P - 8 bits") {
  std::mt19937_64 rng(99);
  for (long prec : {64L, 128L, 256L}) {
    for (int k = 0; k < 40; ++k) {
      const Rational ar = testing::nonzero_rational(rng), ai = testing::small_rational(rng);
      const Rational br = testing::nonzero_rational(rng), bi = testing::small_rational(rng);
      auto corpus = [&](long p) {
        const BigComplex a(ar, ai, p), b(br, bi, p);
        BigComplex acc = (a * b + a / b - pow_int(a, 5)) / (b - a + BigComplex(Rational(1, 3), p));
        return acc + sqrt(acc);
      };
      const BigComplex lo = corpus(prec);
      const BigComplex hi = corpus(2 * prec);
      const BigFloat diff = abs(hi - lo);
      const BigFloat scale = abs(hi) + BigFloat(1, 2 * prec);
      CHECK((diff / scale) < exp2_int(-(prec - 8), 2 * prec));
    }
  }
}
