#include "qheun/heun.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace qheun {

namespace {

RationalFunction cst(const Rational& c) { return RationalFunction(c); }

const RationalFunction& Z() {
  static const RationalFunction z = RationalFunction::z();
  return z;
}

// (1 - z^2)(1 - q z^2)
Polynomial boundary_factor(const Rational& q) {
  return Polynomial({Rational(1), Rational(0), Rational(-1)}) * Polynomial({Rational(1), Rational(0), -q});
}

Polynomial poly_from(const std::array<Rational, 9>& c) { return Polynomial(std::vector<Rational>(c.begin(), c.end())); }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

RationalFunction apply(const QDifferenceOperator& W, const RationalFunction& f) {
  return W.A1 * f.scale_arg(W.q) + W.A2 * f.scale_arg(inverse(W.q)) + W.A0 * f;
}

bool has_aw_symmetry(const QDifferenceOperator& W) {
  return W.A2 == W.A1.invert_arg() && W.A0 == W.A0.invert_arg();
}

OperatorCheckError::OperatorCheckError(QDifferenceOperator op, std::vector<std::string> issues)
    : Error(ErrorKind::InternalCheckFailed, join(issues)), op_(std::move(op)), issues_(std::move(issues)) {}

GenericBuild construct_generic_W(const GridParams& g, const PartialFractionForm& r1, const PartialFractionForm& r2,
                                 const PartialFractionForm& r3) {
  const Rational q = g.q();
  const std::array<Rational, 3> xs = {x_node(g, Series::X, 0), x_node(g, Series::X, 1), x_node(g, Series::X, 2)};
  const std::array<const PartialFractionForm*, 3> rs = {&r1, &r2, &r3};
  std::array<RationalFunction, 3> R;
  for (int j = 0; j < 3; ++j) R[j] = rs[j]->to_z(g);

  const RationalFunction w = x_of_z();
  const RationalFunction u = w.scale_arg(q);
  const RationalFunction v = w.scale_arg(inverse(q));

  RationalFunction s1, s2;
  for (int j = 0; j < 3; ++j) {
    Rational d(1);
    for (int l = 0; l < 3; ++l)
      if (l != j) d *= xs[j] - xs[l];
    const RationalFunction wj = (w - cst(xs[j])) * R[j] * cst(inverse(d));
    s1 += wj * (v - cst(xs[j]));
    s2 += wj * (u - cst(xs[j]));
  }
  auto prefactor = [&](const RationalFunction& t, const RationalFunction& o) {
    return (t - cst(xs[0])) * (t - cst(xs[1])) * (t - cst(xs[2])) / ((t - w) * (t - o));
  };
  QDifferenceOperator W;
  W.q = q;
  W.label = "generic";
  W.A1 = prefactor(u, v) * s1;
  W.A2 = prefactor(v, u) * s2;
  const RationalFunction w0 = w - cst(xs[0]);
  W.A0 = w0 * R[0] - w0 / (u - cst(xs[0])) * W.A1 - w0 / (v - cst(xs[0])) * W.A2;

  GenericBuild out{W, {}};
  for (int j = 0; j < 3; ++j) {
    const auto& r = *rs[j];
    for (const auto& [k, val] : r.terms) {
      const bool ok = (k.series == Series::Y && k.index == 0) || (k.series == Series::X && k.index >= 0 && k.index <= j + 1);
      if (!ok && !val.is_zero())
        out.issues.push_back("r" + std::to_string(j + 1) + " has a pole outside its pattern at " + k.to_string());
    }
    if (!r.double_terms.empty()) out.issues.push_back("r" + std::to_string(j + 1) + " has a double pole");
    if (!r.constant.is_zero()) out.issues.push_back("r" + std::to_string(j + 1) + " has a constant term");
    if (!(apply(W, elementary(g, Series::X, j)) == R[j]))
      out.issues.push_back("W does not reproduce r" + std::to_string(j + 1));
  }
  if (!has_aw_symmetry(W)) out.issues.push_back("A2 != A1(1/z) or A0 not symmetric");
  return out;
}

QDifferenceOperator build_generic_W(const GridParams& g, const PartialFractionForm& r1, const PartialFractionForm& r2,
                                    const PartialFractionForm& r3) {
  GenericBuild b = construct_generic_W(g, r1, r2, r3);
  if (!b.issues.empty()) throw OperatorCheckError(std::move(b.W), std::move(b.issues));
  return b.W;
}

std::array<RationalFunction, 6> a0_basis(const GridParams& g) {
  const RationalFunction one = cst(Rational(1));
  const RationalFunction zi = one / Z();
  const Rational si = inverse(g.s);
  auto pair_term = [&](const Rational& c) { return one / ((one - cst(c) * Z()) * (one - cst(c) * zi)); };
  return {one, Z() + zi, Z() * Z() + zi * zi, pair_term(g.b), pair_term(si), pair_term(-si)};
}

namespace {

struct Dependents {
  Rational rho10, c1, c2;
  std::optional<Rational> c4, c5;
};

Dependents dependents(const GridParams& g, const std::array<Rational, 11>& rho) {
  const Rational q = g.q(), s = g.s, a = g.a, b = g.b;
  Dependents d;
  d.rho10 = a * a * q * q * q * rho[0];
  d.c1 = q * (Rational(1) + q) * (Rational(1) + inverse(b * b)) * a * rho[0] + q * a * rho[1] / b + rho[9] / (q * a * b);
  d.c2 = q * (Rational(1) + q) * a * rho[0] / b;
  const Rational den4 = Rational(2) * q * q * q * (Rational(1) - b / s) * (Rational(1) - b * s);
  const Rational den5 = Rational(2) * q * q * q * (Rational(1) + b / s) * (Rational(1) + b * s);
  Rational s4(0), s5(0);
  for (int j = 0; j <= 10; ++j) {
    s4 += pow_int(s, 10 - j) * rho[j];
    s5 += pow_int(-s, 10 - j) * rho[j];
  }
  if (!den4.is_zero()) d.c4 = -s4 / den4;
  if (!den5.is_zero()) d.c5 = -s5 / den5;
  return d;
}

}  // namespace

WAWCoefficients complete_waw(const GridParams& g, const std::array<Rational, 10>& rho, const Rational& c0,
                             const Rational& c3) {
  WAWCoefficients k;
  std::copy(rho.begin(), rho.end(), k.rho.begin());
  k.rho[10] = g.a * g.a * pow_int(g.q(), 3) * rho[0];
  const Dependents d = dependents(g, k.rho);
  if (!d.c4 || !d.c5) fail(ErrorKind::DegenerateGrid, "beta = +-s^(+-1) leaves c4 or c5 undetermined");
  k.c = {c0, d.c1, d.c2, c3, *d.c4, *d.c5};
  return k;
}

std::vector<RelationCheck> waw_relations(const GridParams& g, const WAWCoefficients& k) {
  const Dependents d = dependents(g, k.rho);
  std::vector<RelationCheck> out;
  out.push_back({"rho_10", d.rho10, k.rho[10], true});
  out.push_back({"c_1", d.c1, k.c[1], true});
  out.push_back({"c_2", d.c2, k.c[2], true});
  out.push_back({"c_4", d.c4.value_or(Rational(0)), k.c[4], d.c4.has_value()});
  out.push_back({"c_5", d.c5.value_or(Rational(0)), k.c[5], d.c5.has_value()});
  return out;
}

QDifferenceOperator build_W_AW(const GridParams& g, const WAWCoefficients& k) {
  std::vector<std::string> bad;
  for (const auto& r : waw_relations(g, k))
    if (!r.holds()) bad.push_back(r.name + ": expected " + r.expected.to_string() + ", got " + r.actual.to_string());
  if (!bad.empty()) fail(ErrorKind::InvariantViolation, join(bad));
  const Rational q = g.q(), a = g.a, b = g.b;
  const Polynomial q10(std::vector<Rational>(k.rho.begin(), k.rho.end()));
  const Polynomial num = Polynomial::linear(-a, q) * q10;
  const Polynomial den = Polynomial::monomial(Rational(1), 2) * Polynomial::linear(Rational(1), -a) *
                         Polynomial::linear(b, Rational(-1)) * Polynomial::linear(Rational(1), -b) * boundary_factor(q);
  QDifferenceOperator W;
  W.q = q;
  W.label = "W_AW";
  W.A1 = RationalFunction(num, den);
  W.A2 = W.A1.invert_arg();
  const auto basis = a0_basis(g);
  for (int j = 0; j < 6; ++j)
    if (!k.c[j].is_zero()) W.A0 += cst(k.c[j]) * basis[j];
  return W;
}

WAWCoefficients extract_waw_coefficients(const QDifferenceOperator& W, const GridParams& g) {
  const Rational q = g.q(), a = g.a, b = g.b;
  const Polynomial m = Polynomial::monomial(Rational(1), 2) * Polynomial::linear(Rational(1), -a) *
                       Polynomial::linear(b, Rational(-1)) * Polynomial::linear(Rational(1), -b) * boundary_factor(q);
  const RationalFunction p = W.A1 * RationalFunction(m, Polynomial::linear(-a, q));
  if (!p.is_polynomial())
    fail(ErrorKind::ShapeMismatch, "A1 z^2 (1-az)(b-z)(1-bz)(1-z^2)(1-qz^2)/(qz-a) is not a polynomial: " + p.to_string());
  if (!p.is_zero() && p.num().degree() != 10)
    fail(ErrorKind::ShapeMismatch, "implied Q10 has degree " + std::to_string(p.num().degree()));
  WAWCoefficients k;
  for (int j = 0; j <= 10; ++j) k.rho[j] = p.num().coeff(j);

  const auto basis = a0_basis(g);
  RationalMatrix mat;
  std::vector<Rational> rhs;
  for (long zi = 2; mat.size() < 6 && zi < 64; ++zi) {
    const Rational z(zi);
    bool ok = !W.A0.den().eval(z).is_zero();
    for (const auto& bf : basis) ok = ok && !bf.den().eval(z).is_zero();
    if (!ok) continue;
    std::vector<Rational> row;
    for (const auto& bf : basis) row.push_back(bf.eval(z));
    mat.push_back(std::move(row));
    rhs.push_back(W.A0.eval(z));
  }
  auto sol = solve_linear(mat, rhs);
  if (!sol) fail(ErrorKind::BasisSolveFailed, "A0 basis is singular at the sample points");
  RationalFunction fit;
  for (int j = 0; j < 6; ++j) {
    k.c[j] = (*sol)[j];
    fit += cst(k.c[j]) * basis[j];
  }
  if (!(fit == W.A0)) fail(ErrorKind::BasisSolveFailed, "A0 is not in the span of the W_AW basis");
  return k;
}

Rational elementary_symmetric(const std::vector<Rational>& values, int k) {
  if (k < 0 || k > static_cast<int>(values.size()))
    fail(ErrorKind::IndexOutOfRange, "k = " + std::to_string(k) + " for " + std::to_string(values.size()) + " values");
  // e[i] holds sigma_i of the values seen so far.
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& v : values)
    for (int i = k; i >= 1; --i) e[i] += v * e[i - 1];
  return e[k];
}

Rational product(const std::array<Rational, 8>& e) {
  Rational p(1);
  for (const auto& v : e) p *= v;
  return p;
}

std::array<Rational, 8> squares(const std::array<Rational, 8>& e) {
  std::array<Rational, 8> out;
  for (int j = 0; j < 8; ++j) out[j] = e[j] * e[j];
  return out;
}

std::array<Rational, 9> eta_from_epsilon(const Rational& s, const std::array<Rational, 8>& e, const Rational& eta0) {
  const auto eps = squares(e);
  const std::vector<Rational> v(eps.begin(), eps.end());
  std::array<Rational, 9> eta;
  for (int k = 0; k <= 8; ++k) eta[k] = pow_int(-s, k) * elementary_symmetric(v, k) * eta0;
  return eta;
}

Rational w1_eta0_pin(const Rational& s) { return -inverse(s * s * s); }

namespace {

std::pair<Rational, Rational> alternating_sums(const Rational& s, const std::array<Rational, 9>& eta) {
  Rational s4(0), s5(0);
  for (int j = 0; j <= 8; ++j) {
    s4 += pow_int(s, -j) * eta[j];
    s5 += pow_int(-s, -j) * eta[j];
  }
  return {s4, s5};
}

void require_eta(const EtaParams& p, Which which, const Rational& eta8, const std::string& relation) {
  if (p.which != which) fail(ErrorKind::InvariantViolation, "eta parameters are tagged for the other operator");
  if (p.eta[0].is_zero()) fail(ErrorKind::InvariantViolation, "eta_0 must be nonzero");
  if (p.eta[8] != eta8)
    fail(ErrorKind::InvariantViolation,
         "eta_8 = " + relation + " violated: expected " + eta8.to_string() + ", got " + p.eta[8].to_string());
}

void require_epsilon(const EpsilonParams& p) {
  for (const auto& v : p.e)
    if (v.is_zero()) fail(ErrorKind::InvariantViolation, "epsilon_j must be nonzero");
}

}  // namespace

A0Coefficients w1_coefficients(const GridParams& g, const EtaParams& p, W1Signs signs) {
  const Rational q = g.q(), a = g.a, s = g.s;
  require_eta(p, Which::W1, a * a * q * q * q * p.eta[0], "alpha^2 q^3 eta_0");
  auto [s4, s5] = alternating_sums(s, p.eta);
  const Rational half_s3 = s * s * s / Rational(2);
  A0Coefficients c;
  c.c0 = p.c0;
  c.c1 = a * q * p.eta[1] + p.eta[7] / (a * q);
  c.c2 = q * (Rational(1) + q) * a * p.eta[0];
  c.c4 = half_s3 * s4;
  c.c5 = half_s3 * s5;
  if (signs == W1Signs::Corrected) {
    c.c4 = -c.c4;
    c.c5 = -c.c5;
  }
  return c;
}

A0Coefficients epsilon_product_coefficients(const Rational& s, const EpsilonParams& p) {
  require_epsilon(p);
  const Rational P = product(p.e);
  Rational sum(0), m(1), pl(1);
  for (const auto& v : squares(p.e)) {
    sum += v + inverse(v);
    m *= Rational(1) - v;
    pl *= Rational(1) + v;
  }
  return {p.c0, s * P * sum, -(Rational(1) + s * s) * P, m / Rational(2), pl / Rational(2)};
}

A0Coefficients w1_coefficients(const GridParams& g, const EpsilonParams& p) {
  const Rational s = g.s, P = product(p.e);
  if (g.a != s * P)
    fail(ErrorKind::InvariantViolation, "alpha = s prod(e) violated: alpha = " + g.a.to_string() + ", s prod(e) = " + (s * P).to_string());
  return epsilon_product_coefficients(s, p);
}

A0Coefficients w2_coefficients(const GridParams& g, const EtaParams& p) {
  const Rational q = g.q(), a = g.a, b = g.b, s = g.s;
  require_eta(p, Which::W2, q * q * a * a * b * b * p.eta[0], "q^2 alpha^2 beta^2 eta_0");
  const Rational e0 = p.eta[0];
  auto [s4, s5] = alternating_sums(s, p.eta);
  A0Coefficients c;
  c.c0 = p.c0;
  c.c1 = -a * b * p.eta[1] / (q * e0) - p.eta[7] / (a * b * q * q * e0);
  c.c2 = -a * b * (Rational(1) + inverse(q));
  c.c4 = s4 / (Rational(2) * e0);
  c.c5 = s5 / (Rational(2) * e0);
  return c;
}

RationalFunction assemble_a0(const Rational& s, const A0Coefficients& c, int sign4) {
  GridParams g;
  g.s = s;
  const auto basis = a0_basis(g);
  return cst(c.c0) + cst(c.c1) * basis[1] + cst(c.c2) * basis[2] + cst(Rational(sign4) * c.c4) * basis[4] +
         cst(c.c5) * basis[5];
}

QDifferenceOperator build_W1(const GridParams& g, const EtaParams& p, W1Signs signs) {
  const A0Coefficients c = w1_coefficients(g, p, signs);
  const Rational q = g.q(), a = g.a;
  QDifferenceOperator W;
  W.q = q;
  W.label = signs == W1Signs::Corrected ? "W1(eta)" : "W1(eta, printed signs)";
  const Polynomial num = Polynomial::linear(-a, q) * poly_from(p.eta);
  const Polynomial den = Polynomial::monomial(Rational(1), 2) * Polynomial::linear(Rational(1), -a) * boundary_factor(q);
  W.A1 = RationalFunction(num, den);
  W.A2 = W.A1.invert_arg();
  W.A0 = assemble_a0(g.s, c, -1);
  return W;
}

QDifferenceOperator build_W1(const GridParams& g, const EpsilonParams& p) {
  const A0Coefficients c = w1_coefficients(g, p);
  const Rational q = g.q(), s = g.s, P = product(p.e);
  Polynomial num = Polynomial::linear(P, -s);
  for (const auto& v : squares(p.e)) num = num * Polynomial::linear(Rational(1), -s * v);
  const Polynomial den = Polynomial::monomial(q, 2) * Polynomial::linear(Rational(1), -s * P) * boundary_factor(q);
  QDifferenceOperator W;
  W.q = q;
  W.label = "W1(epsilon)";
  W.A1 = RationalFunction(num, den);
  W.A2 = W.A1.invert_arg();
  W.A0 = assemble_a0(s, c, -1);
  return W;
}

QDifferenceOperator build_W2(const GridParams& g, const EtaParams& p) {
  const A0Coefficients c = w2_coefficients(g, p);
  const Rational q = g.q(), a = g.a, b = g.b;
  const Polynomial num = Polynomial::linear(-a, q) * Polynomial::linear(-b, q) * poly_from(p.eta);
  const Polynomial den = Polynomial::monomial(q * q * p.eta[0], 2) * Polynomial::linear(Rational(-1), a) *
                         Polynomial::linear(Rational(-1), b) * boundary_factor(q);
  QDifferenceOperator W;
  W.q = q;
  W.label = "W2(eta)";
  W.A1 = RationalFunction(num, den);
  W.A2 = W.A1.invert_arg();
  W.A0 = assemble_a0(g.s, c, +1);
  return W;
}

QDifferenceOperator build_W2(const GridParams& g, const EpsilonParams& p) {
  require_epsilon(p);
  const Rational P = product(p.e);
  if (g.a * g.b != g.q() * P)
    fail(ErrorKind::InvariantViolation, "alpha beta = q prod(e) violated");
  if (p.eta0.is_zero()) fail(ErrorKind::InvariantViolation, "eta_0 must be nonzero");
  QDifferenceOperator W = build_W2(g, EtaParams{eta_from_epsilon(g.s, p.e, p.eta0), p.c0, Which::W2});
  W.label = "W2(epsilon)";
  return W;
}

std::array<Rational, 2> w2_q10_conditions(const WAWCoefficients& k, const GridParams& g) {
  Rational c1(0), c2(0);
  const Rational q = g.q();
  for (int j = 0; j <= 10; ++j) {
    const Rational bj = pow_int(g.b, j) * k.rho[j];
    c1 += bj;
    c2 += pow_int(q, 10 - j) * bj;
  }
  return {c1, c2};
}

std::string_view to_string(RaisingMode m) {
  switch (m) {
    case RaisingMode::OneSeries: return "one_series";
    case RaisingMode::TwoSeries: return "two_series";
    case RaisingMode::WAW: return "w_aw";
  }
  return "?";
}

bool RaisingReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const RaisingEntry& e) { return e.pass; });
}

void RaisingReport::check() const {
  for (const auto& e : entries)
    if (!e.pass) fail(ErrorKind::RaisingViolation, e.input + ": " + e.reason);
}

namespace {

// Highest admissible index per series for an input R_{n,m}; -1 when the
// image may not touch the series at all.
struct Pattern {
  int x_max;
  int y_max;
};

Pattern allowed_pattern(RaisingMode mode, int n, int m) {
  switch (mode) {
    case RaisingMode::OneSeries: return {n + 1, -1};
    case RaisingMode::WAW: return {n + 1, 0};
    case RaisingMode::TwoSeries: return {n + 1, m + 1};
  }
  return {-1, -1};
}

void judge(RaisingEntry& e, const QDifferenceOperator& W, const GridParams& g, const RationalFunction& input,
           const Pattern& pat, const std::set<PfKey>* five) {
  try {
    const auto pf = partial_fractions_x(apply(W, input), g);
    std::vector<std::string> why;
    for (const auto& [k, r] : pf.terms) {
      const int lim = k.series == Series::X ? pat.x_max : (k.series == Series::Y ? pat.y_max : -1);
      if (k.index < 0 || k.index > lim) why.push_back("pole at " + k.to_string() + " with residue " + r.to_string());
      if (five && !five->count(k)) {
        e.five_term = false;
        why.push_back("pole at " + k.to_string() + " outside the five-term pattern");
      }
    }
    if (!pf.constant.is_zero()) why.push_back("constant term " + pf.constant.to_string());
    e.pass = why.empty();
    e.reason = join(why);
    e.image = pf;
  } catch (const Error& err) {
    const auto k = err.kind();
    if (k != ErrorKind::UnexpectedPole && k != ErrorKind::HigherOrderPole && k != ErrorKind::BoundaryPole) throw;
    e.pass = false;
    e.reason = err.what();
  }
}

}  // namespace

RaisingReport verify_raising(const QDifferenceOperator& W, const GridParams& g0, RaisingMode mode, int n_max, int m_max,
                             const RaisingOptions& opts) {
  RaisingReport rep;
  rep.mode = mode;
  rep.n_max = n_max;
  rep.m_max = mode == RaisingMode::TwoSeries ? m_max : -1;
  rep.seed = opts.seed;
  const int top = std::max(n_max, rep.m_max);
  GridParams g = g0.with_range(top + 1);
  if (mode == RaisingMode::OneSeries) g.kind = GridKind::OneSeries;
  validate(g);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  auto coeff = [&] {
    for (;;) {
      Rational r(num(rng), den(rng));
      if (!r.is_zero()) return r;
    }
  };

  const bool two = mode == RaisingMode::TwoSeries;
  auto single = [&](Series s, int n) {
    RaisingEntry e;
    e.series = s;
    const char* name = s == Series::X ? "x" : "y";
    e.input = "1/(x - " + std::string(name) + "_" + std::to_string(n) + ")";
    (s == Series::X ? e.n : e.m) = n;
    Pattern pat = s == Series::X ? allowed_pattern(mode, n, -1) : allowed_pattern(mode, -1, n);
    std::set<PfKey> five;
    const Series o = s == Series::X ? Series::Y : Series::X;
    if (two) five = {{o, 0}, {s, 0}, {s, n - 1}, {s, n}, {s, n + 1}};
    judge(e, W, g, elementary(g, s, n), pat, two ? &five : nullptr);
    rep.entries.push_back(std::move(e));
  };
  for (int n = 0; n <= n_max; ++n) single(Series::X, n);
  if (two)
    for (int m = 0; m <= m_max; ++m) single(Series::Y, m);

  if (!opts.combinations) return rep;
  std::vector<std::pair<int, int>> combos;
  if (two) {
    for (int k = 0; k <= std::min(n_max, m_max); ++k) combos.emplace_back(k, k);
    combos.emplace_back(n_max, m_max);
    combos.emplace_back(n_max, -1);
    combos.emplace_back(-1, m_max);
    std::sort(combos.begin(), combos.end());
    combos.erase(std::unique(combos.begin(), combos.end()), combos.end());
  } else {
    for (int n = 0; n <= n_max; ++n) combos.emplace_back(n, -1);
  }
  for (const auto& [n, m] : combos) {
    RaisingEntry e;
    e.single = false;
    e.n = n;
    e.m = m;
    e.input = "R_{" + std::to_string(n) + "," + std::to_string(m) + "}";
    PartialFractionForm in;
    for (int k = 0; k <= n; ++k) in.terms[{Series::X, k}] = coeff();
    for (int k = 0; k <= m; ++k) in.terms[{Series::Y, k}] = coeff();
    judge(e, W, g, in.to_z(g), allowed_pattern(mode, n, m), nullptr);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

Rational checked_div(const Rational& num, const Rational& den, const char* what, int n) {
  if (den.is_zero())
    fail(ErrorKind::DegenerateDenominator, std::string(what) + " has a vanishing denominator at n = " + std::to_string(n));
  return num / den;
}

}  // namespace

std::array<Rational, 5> xi_hat_closed_form(const GridParams& g0, const EtaParams& p, int n, Series series) {
  if (series == Series::Extra) fail(ErrorKind::InvalidArgument, "closed forms exist for the X and Y series only");
  const GridParams g = series == Series::X ? g0 : g0.swapped();
  const Rational q = g.q(), s = g.s, a = g.a, b = g.b, e0 = p.eta[0];
  const Rational one(1), q2e0 = q * q * e0;
  auto sum = [&](auto&& f) {
    Rational acc(0);
    for (int j = 0; j <= 8; ++j) acc += p.eta[j] * f(j);
    return acc;
  };
  auto qp = [&](long k) { return pow_int(q, k); };

  const Rational m1 = checked_div(-(one - a * b / q) * sum([&](int j) { return pow_int(b, 4 - j); }),
                                  (one - qp(n - 1) * a * b) * (one - qp(-n - 1) * b / a) * (one - a / b) * q2e0,
                                  "xi_hat_{n,-1}", n);
  const Rational x0 = checked_div(-(one - a * b / q) * sum([&](int j) { return pow_int(a, 4 - j); }),
                                  (one - qp(n - 1) * a * a) * (one - qp(-n - 1)) * (one - b / a) * q2e0,
                                  "xi_hat_{n,0}", n);
  const Rational x1 = checked_div(
      (one - qp(-n)) * (one - qp(-n) * b / a) * sum([&](int j) { return qp(static_cast<long>(j - 4) * (n - 1)) * pow_int(a, j - 4); }),
      (one - qp(n - 1) * a * a) * (one - qp(n - 1) * a * b) * (one - qp(-2 * n) / (a * a)) * (one - qp(-2 * n + 1) / (a * a)) * q2e0,
      "xi_hat_{n,1}", n);
  const Rational A = a * qp(n) + inverse(a * qp(n));
  const Rational s3 = s * s * s, ssum = s + inverse(s);
  Rational even(0), odd(0);
  for (int j = 0; j <= 4; ++j) even += qp(2 - j) * p.eta[2 * j];
  for (int j = 0; j <= 3; ++j) odd += s3 * qp(-j) * p.eta[2 * j + 1];
  const Rational a2q = a * a * qp(2 * n);
  const Rational x2 = -ssum * (a2q + inverse(a2q)) * a * b / s -
                      A * (a * b * s * p.eta[1] + p.eta[7] / (a * b * s)) / (s3 * e0) -
                      checked_div(ssum * even + A * odd,
                                  inverse(a2q) * (one - a * a * qp(2 * n - 1)) * (one - a * a * qp(2 * n + 1)) * s3 * e0,
                                  "xi_hat_{n,2}", n);
  const Rational x3 = checked_div(
      (one - qp(n) * a * a) * (one - qp(n) * a * b) * sum([&](int j) { return qp(static_cast<long>(4 - j) * (n + 1)) * pow_int(a, 4 - j); }),
      (one - qp(-n - 1)) * (one - qp(-n - 1) * b / a) * (one - a * a * qp(2 * n)) * (one - a * a * qp(2 * n + 1)) * q2e0,
      "xi_hat_{n,3}", n);
  return {m1, x0, x1, x2, x3};
}

XiHatComparison compare_xi_hat(const GridParams& g, const EtaParams& p, int n, Series series,
                               const PartialFractionForm& image) {
  const auto xi = xi_hat_closed_form(g, p, n, series);
  const Series o = series == Series::X ? Series::Y : Series::X;
  std::map<PfKey, Rational> expected;
  expected[{o, 0}] += xi[0];
  expected[{series, 0}] += xi[1];
  expected[{series, n - 1}] += xi[2];
  expected[{series, n}] += xi[3] + p.c0;
  expected[{series, n + 1}] += xi[4];
  XiHatComparison out;
  std::set<PfKey> keys;
  for (const auto& [k, v] : expected) keys.insert(k);
  for (const auto& [k, v] : image.terms) keys.insert(k);
  for (const auto& k : keys) {
    const Rational want = expected.count(k) ? expected.at(k) : Rational(0);
    const Rational got = image.residue(k);
    out.rows.push_back({k, want, got});
    if (want != got) out.match = false;
  }
  if (!image.constant.is_zero()) out.match = false;
  return out;
}

WawYAction waw_y_actions(const QDifferenceOperator& W, const GridParams& g0, bool require_presence) {
  const GridParams g = g0.with_range(std::max(g0.range, 2));
  PfOptions opts;
  opts.allow_double = {{Series::Y, 0}};
  WawYAction out;
  out.y0 = partial_fractions_x(apply(W, elementary(g, Series::Y, 0)), g, opts);
  out.y1 = partial_fractions_x(apply(W, elementary(g, Series::Y, 1)), g, opts);
  auto check = [&](const PartialFractionForm& pf, const std::set<PfKey>& simple, const char* name) {
    for (const auto& [k, r] : pf.terms)
      if (!simple.count(k)) out.issues.push_back(std::string(name) + ": unexpected pole at " + k.to_string());
    if (pf.constant != Rational(0)) out.issues.push_back(std::string(name) + ": nonzero constant term");
    if (!require_presence) return;
    for (const auto& k : simple)
      if (!pf.terms.count(k)) out.issues.push_back(std::string(name) + ": missing pole at " + k.to_string());
    if (!pf.double_terms.count({Series::Y, 0})) out.issues.push_back(std::string(name) + ": missing (x - y_0)^-2 term");
  };
  check(out.y0, {{Series::X, 0}, {Series::Y, -1}, {Series::Y, 0}, {Series::Y, 1}}, "W{1/(x-y_0)}");
  check(out.y1, {{Series::X, 0}, {Series::Y, 0}, {Series::Y, 1}, {Series::Y, 2}}, "W{1/(x-y_1)}");
  return out;
}

}  // namespace qheun
