#include <doctest.h>

#include <cmath>

#include "qheun/elliptic.hpp"
#include "qheun/error.hpp"
#include "qheun/gauge.hpp"

using namespace qheun;

namespace {

constexpr long kPrec = 256;

BigComplex c(const char* text) { return {BigFloat::parse(text, kPrec), BigFloat(kPrec)}; }
BigComplex c(const Rational& r) { return BigComplex(r, kPrec); }

double gap(const BigComplex& a, const BigComplex& b) { return abs(a - b).to_double(); }

// relative distance, for values that are not small
double rel(const BigComplex& a, const BigComplex& b) { return (abs(a - b) / abs(b)).to_double(); }

QDifferenceOperator takemura_reference(const TakemuraFixture& f) {
  const GridParams g{f.s, Rational(1), Rational(1), std::nullopt, 1, GridKind::TwoSeries};
  return takemura_direct(g, EpsilonParams{f.e, Rational(0), Rational(1)});
}

EllipticParams takemura_params(const TakemuraFixture& f, const char* p) {
  EllipticParams ep;
  ep.s = c(f.s);
  ep.t = c(f.t);
  ep.p = c(p);
  for (int j = 0; j < 8; ++j) ep.a[j] = c(f.s * f.e[j] * f.e[j]);
  ep.sqrt_prod_a = c(f.s * f.s * f.s * f.s * product(f.e));
  return ep;
}

}  // namespace

TEST_CASE("theta examples") {
  const ThetaContext zero = ThetaContext::make(BigComplex(kPrec), kPrec);
  CHECK(gap(theta(c("0.3"), zero), c("0.7")) == 0.0);
  const ThetaContext ctx = ThetaContext::make(c("0.01"), kPrec);
  CHECK(theta(c(Rational(1)), ctx).is_zero());
  CHECK_THROWS_AS(theta(BigComplex(kPrec), ctx), Error);
  CHECK_THROWS_AS(ThetaContext::make(c("1.5"), kPrec), Error);
  for (const char* z : {"0.37", "1.9", "-2.5"}) {
    const BigComplex w = c(z);
    const BigComplex lhs = theta(ctx.p * w, ctx);
    const BigComplex rhs = -inverse(w) * theta(w, ctx);
    CHECK(abs(lhs - rhs) < exp2_int(-(kPrec - 8), kPrec));
  }
}

TEST_CASE("theta truncation is below rounding") {
  for (const char* p : {"1e-3", "1e-6", "0.2"}) {
    ThetaContext ctx = ThetaContext::make(c(p), kPrec);
    CHECK(log2(abs(ctx.p)).to_double() * ctx.truncation_order < -(kPrec + 16));
    ThetaContext twice = ctx;
    twice.truncation_order *= 2;
    for (const char* z : {"0.37", "2.7"}) {
      const BigComplex a = theta(c(z), ctx), b = theta(c(z), twice);
      CHECK(abs(a - b) < exp2_int(-kPrec, kPrec) * (abs(b) + BigFloat(1, kPrec)));
    }
  }
}

TEST_CASE("rvd coefficient symmetries") {
  const TakemuraFixture f;
  const EllipticParams ep = takemura_params(f, "1e-3");
  const ThetaContext ctx = ThetaContext::make(ep.p, kPrec);
  for (const char* z : {"0.37", "0.61", "1.9"}) {
    const BigComplex w = c(z);
    const auto r = rvd_coefficients(w, ep, ctx);
    const auto s = rvd_coefficients(inverse(w), ep, ctx);
    const double tol = std::ldexp(1.0, -(static_cast<int>(kPrec) - 16));
    CHECK(rel(s.plus, r.minus) < tol);
    CHECK(rel(s.zero, r.zero) < tol);
  }
  CHECK_THROWS_AS(rvd_coefficients(c(Rational(1)), ep, ctx), Error);
}

TEST_CASE("A+ is within C p of the gauged operator at p = 1e-6") {
  const TakemuraFixture f;
  const auto exact = takemura_reference(f);
  const EllipticParams ep = takemura_params(f, "1e-6");
  const ThetaContext ctx = ThetaContext::make(ep.p, kPrec);
  for (const char* z : {"0.37", "0.61", "1.9", "2.7", "0.83"}) {
    const BigComplex w = c(z);
    CHECK(gap(rvd_coefficients(w, ep, ctx).plus, exact.A1.eval(w)) < 20 * 1e-6);
  }
}

TEST_CASE("takemura limit converges at first order") {
  TakemuraFixture f;
  f.p_list = {"1e-4", "1e-5", "1e-6"};
  const auto rep = limit_check_takemura(f, takemura_reference(f));
  CHECK(rep.pass());
  for (const char* name : {"A+", "A-", "A0", "p*A0-D"}) {
    const auto& s = rep.get(name);
    INFO(name, " order ", s.order);
    CHECK(s.decreasing);
    CHECK(s.order > 0.8);
    CHECK(s.order < 1.2);
  }
  const auto& plus = rep.get("A+");
  CHECK(plus.max.front() / plus.max.back() > 70);
  CHECK(plus.max.front() / plus.max.back() < 140);
}

TEST_CASE("takemura limit negative controls") {
  TakemuraFixture f;
  std::array<Rational, 8> a;
  for (int j = 0; j < 8; ++j) a[j] = f.s * f.e[j] * f.e[j];
  a[0] *= Rational(11, 10);
  f.a_override = a;
  const auto bad = limit_check_takemura(f, takemura_reference(f));
  CHECK_FALSE(bad.pass());
  try {
    bad.check_ok();
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }

  TakemuraFixture lit;
  lit.reading = LReading::Literal;
  CHECK_FALSE(limit_check_takemura(lit, takemura_reference(lit)).pass());
}

TEST_CASE("classical family: the A+ part settles") {
  const ClassicalFixture f;
  const auto rep = limit_check_classical(f);
  const auto& b = rep.get("cauchy_B");
  CHECK(b.decreasing);
  // ratio of successive Cauchy gaps stays below ten times the first one
  CHECK(b.max[2] / b.max[1] < 10 * b.max[1] / b.max[0]);
  CHECK(rep.get("spread").decreasing);
  if (!rep.pass()) CHECK_THROWS_AS(rep.check_ok(), Error);
}
