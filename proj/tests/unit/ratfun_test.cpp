#include <doctest.h>

#include <random>

#include "qheun/error.hpp"
#include "qheun/linsolve.hpp"
#include "qheun/ratfun.hpp"
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

const RationalFunction Z = RationalFunction::z();

RationalFunction poly(std::initializer_list<Rational> c) { return RationalFunction(Polynomial(c)); }

// Picks a sample point away from the poles of every listed function.
Rational sample_point(std::mt19937_64& rng, std::initializer_list<const RationalFunction*> fs) {
  for (;;) {
    const Rational z = testing::nonzero_rational(rng, 30, 11);
    bool ok = true;
    for (const auto* f : fs) ok = ok && !f->den().eval(z).is_zero();
    if (ok) return z;
  }
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Polynomial p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({Rational(1), Rational(2)}).to_string() == "(1 + 2*z)");
  const Polynomial a({Rational(-1), Rational(0), Rational(1)});
  const Polynomial b({Rational(-1), Rational(1)});
  auto [quot, rem] = divmod(a, b);
  CHECK(quot == Polynomial({Rational(1), Rational(1)}));
  CHECK(rem.is_zero());
  CHECK(gcd(a, b) == b);
  CHECK(gcd(a * Rational(6), Polynomial({Rational(2), Rational(2)})) == Polynomial({Rational(1), Rational(1)}));
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Polynomial g = testing::random_poly(rng, 1 + i % 4).monic();
    const Polynomial u = testing::random_poly(rng, 2 + i % 5);
    const Polynomial v = testing::random_poly(rng, 3 + i % 3);
    const Polynomial h = gcd(g * u, g * v);
    CHECK(divmod(h, g).second.is_zero());
    // h / g must be gcd(u, v), which is generically 1
    CHECK(divmod(g * u, h).second.is_zero());
    CHECK(divmod(g * v, h).second.is_zero());
  }
}

TEST_CASE("rf_normalize examples") {
  const RationalFunction f(Polynomial({Rational(-1), Rational(0), Rational(1)}), Polynomial({Rational(-1), Rational(1)}));
  CHECK(f == poly({Rational(1), Rational(1)}));
  const RationalFunction g(Polynomial({Rational(0), Rational(2)}), Polynomial({Rational(2)}));
  CHECK(g == Z);
  CHECK(kind_of([] { return RationalFunction(Polynomial({Rational(1)}), Polynomial()); }) == ErrorKind::ZeroDenominator);
  const RationalFunction h(Polynomial({Rational(3)}), Polynomial({Rational(4), Rational(2)}));
  CHECK(h.den().leading().is_one());
}

TEST_CASE("rf_arith examples") {
  const RationalFunction inv_z = RationalFunction(Rational(1)) / Z;
  const RationalFunction s = inv_z + Z;
  CHECK(s == RationalFunction(Polynomial({Rational(1), Rational(0), Rational(1)}), Polynomial({Rational(0), Rational(1)})));
  CHECK((s - s).is_zero());
  CHECK(kind_of([&] { return s / RationalFunction(); }) == ErrorKind::ZeroDenominator);
  CHECK(s == x_of_z());
}

TEST_CASE("rf_scale_arg examples") {
  const Rational q(9);
  CHECK((Z * Z).scale_arg(q) == poly({Rational(0), Rational(0), Rational(81)}));
  const RationalFunction f = RationalFunction(Rational(1)) / (Z - RationalFunction(Rational(2)));
  CHECK(f.scale_arg(Rational(1)) == f);
  const RationalFunction g = f.scale_arg(Rational(3));
  CHECK(g == RationalFunction(Polynomial({Rational(1, 3)}), Polynomial({Rational(-2, 3), Rational(1)})));
  CHECK(kind_of([&] { return f.scale_arg(Rational(0)); }) == ErrorKind::ZeroScale);
}

TEST_CASE("rf_invert_arg examples") {
  CHECK(Z.invert_arg() == RationalFunction(Rational(1)) / Z);
  CHECK(x_of_z().invert_arg() == x_of_z());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const RationalFunction f = testing::random_ratfun(rng, i % 5, 1 + i % 4) * pow(Z, i % 3);
    CHECK(f.invert_arg().invert_arg() == f);
  }
  CHECK(RationalFunction().invert_arg().is_zero());
}

TEST_CASE("rf_compose_x examples") {
  CHECK(Z.compose_x() == x_of_z());
  const RationalFunction g = RationalFunction(Rational(1)) / (Z - RationalFunction(Rational(5, 2)));
  // 2z/((2z-1)(z-2)) = z/((z-1/2)(z-2))
  const RationalFunction expected(Polynomial({Rational(0), Rational(1)}),
                                  Polynomial({Rational(1), Rational(-5, 2), Rational(1)}));
  CHECK(g.compose_x() == expected);
  CHECK(RationalFunction(Rational(7)).compose_x() == RationalFunction(Rational(7)));
  CHECK(RationalFunction().compose_x().is_zero());
}

TEST_CASE("rf_eval examples") {
  CHECK(x_of_z().eval(Rational(2)) == Rational(5, 2));
  const RationalFunction f = RationalFunction(Rational(1)) / (Z - RationalFunction(Rational(2)));
  CHECK(kind_of([&] { return f.eval(Rational(2)); }) == ErrorKind::PoleAtPoint);
  CHECK(RationalFunction(Rational(7)).eval(Rational(-13, 3)) == Rational(7));
}

TEST_CASE("residue_at_simple_root examples") {
  const RationalFunction f = RationalFunction(Rational(1)) / (Z - RationalFunction(Rational(2)));
  CHECK(f.residue_at_simple_root(Rational(2)) == Rational(1));
  CHECK((f * RationalFunction(Rational(3))).residue_at_simple_root(Rational(2)) == Rational(3));
  CHECK(kind_of([&] { return (f * f).residue_at_simple_root(Rational(2)); }) == ErrorKind::HigherOrderPole);
  CHECK(kind_of([&] { return f.residue_at_simple_root(Rational(3)); }) == ErrorKind::NotAPole);
}

TEST_CASE("evaluation commutes with arithmetic and substitutions") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction f = testing::random_ratfun(rng, i % 4, 1 + i % 3);
    const RationalFunction g = testing::random_ratfun(rng, 1 + i % 3, i % 4);
    const RationalFunction sum = f + g, diff = f - g, prod = f * g;
    const Rational c = testing::nonzero_rational(rng);
    const RationalFunction sc = f.scale_arg(c), inv = f.invert_arg(), cx = f.compose_x();
    const Rational z = sample_point(rng, {&f, &g, &sum, &diff, &prod, &sc, &inv, &cx});
    const bool pole_scaled = f.den().eval(c * z).is_zero();
    const bool pole_inverted = f.den().eval(inverse(z)).is_zero();
    const bool pole_x = f.den().eval(z + inverse(z)).is_zero();
    CHECK(sum.eval(z) == f.eval(z) + g.eval(z));
    CHECK(diff.eval(z) == f.eval(z) - g.eval(z));
    CHECK(prod.eval(z) == f.eval(z) * g.eval(z));
    if (!g.num().eval(z).is_zero()) CHECK((f / g).eval(z) == f.eval(z) / g.eval(z));
    if (!pole_scaled) CHECK(sc.eval(z) == f.eval(c * z));
    if (!pole_inverted) CHECK(inv.eval(z) == f.eval(inverse(z)));
    if (!pole_x) CHECK(cx.eval(z) == f.eval(z + inverse(z)));
    CHECK(sc.scale_arg(inverse(c)) == f);
  }
}

TEST_CASE("big-float evaluation agrees with exact evaluation") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const RationalFunction f = testing::random_ratfun(rng, 3, 3);
    const Rational z = sample_point(rng, {&f});
    const BigComplex v = f.eval(BigComplex(z, 256));
    const BigFloat exact(f.eval(z), 256);
    CHECK(abs(v.real() - exact).to_double() <= 1e-60 * (1 + abs(exact).to_double()));
  }
}

TEST_CASE("residue formula matches a shrinking-h oracle") {
  // Oracle: (z - z0) f(z) at z = z0 + h for h = 10^-k converges linearly to
  // the residue; the error at 10^-k must track 10^-k.
  std::mt19937_64 rng(1234);
  int checked = 0;
  while (checked < 50) {
    const Rational z0 = testing::small_rational(rng, 12, 5);
    const Polynomial rest = testing::random_poly(rng, 2);
    if (rest.eval(z0).is_zero()) continue;
    const Polynomial num = testing::random_poly(rng, 3);
    if (num.eval(z0).is_zero()) continue;
    const RationalFunction f(num, Polynomial::root_factor(z0) * rest);
    const Rational r = f.residue_at_simple_root(z0);
    const RationalFunction g = f * (Z - RationalFunction(z0));
    Rational prev_err(-1);
    for (int k = 6; k <= 12; k += 3) {
      const Rational h = pow_int(Rational(1, 10), k);
      const Rational err = abs(g.eval(z0 + h) - r);
      CHECK(err < Rational(1000) * h * (abs(r) + Rational(1)) * Rational(1000));
      if (prev_err.sign() >= 0 && !prev_err.is_zero()) CHECK(err < prev_err);
      prev_err = err;
    }
    ++checked;
  }
}

TEST_CASE("exact linear solve") {
  RationalMatrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  auto x = solve_linear(a, {Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  CHECK_FALSE(solve_linear({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(1)}).has_value());
}
