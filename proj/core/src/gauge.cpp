#include "qheun/gauge.hpp"

namespace qheun {

namespace {

RationalFunction cst(const Rational& c) { return RationalFunction(c); }

std::vector<ComponentDiff> compare(const QDifferenceOperator& lhs, const QDifferenceOperator& rhs) {
  std::vector<ComponentDiff> out;
  const std::array<std::pair<const char*, RationalFunction>, 3> d = {
      std::pair{"A1", lhs.A1 - rhs.A1}, std::pair{"A2", lhs.A2 - rhs.A2}, std::pair{"A0", lhs.A0 - rhs.A0}};
  for (const auto& [name, diff] : d)
    if (!diff.is_zero()) out.push_back({name, diff});
  return out;
}

std::string describe(const std::vector<ComponentDiff>& diffs) {
  std::string out;
  for (const auto& d : diffs) {
    if (!out.empty()) out += ", ";
    out += d.component + (d.constant_only() ? " (constant " + d.diff.constant_value().to_string() + ")" : "");
  }
  return out;
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::PsiInvWPsi ? "psi_inv_W_psi" : "psi_W_psi_inv";
}

QDifferenceOperator conjugate(const QDifferenceOperator& W, const GaugeRatio& G, Direction d) {
  if (G.G.is_zero()) fail(ErrorKind::ZeroGauge, "gauge ratio " + G.label + " is identically zero");
  const RationalFunction shifted = G.G.scale_arg(inverse(W.q));
  QDifferenceOperator out = W;
  if (d == Direction::PsiInvWPsi) {
    out.A1 = W.A1 * G.G;
    out.A2 = W.A2 / shifted;
  } else {
    out.A1 = W.A1 / G.G;
    out.A2 = W.A2 * shifted;
  }
  out.label = W.label + " conjugated by " + G.label;
  return out;
}

GaugeRatio gauge_ratio_takemura(const GridParams& g) {
  const Rational q = g.q();
  const Polynomial num = Polynomial::monomial(q * q, 2) * Polynomial::linear(Rational(-1), g.a) *
                         Polynomial::linear(Rational(-1), g.b);
  const Polynomial den = Polynomial::linear(-g.a, q) * Polynomial::linear(-g.b, q);
  return {RationalFunction(num, den), "takemura"};
}

GaugeRatio gauge_ratio_w2_w1(const Rational& s, const Rational& alpha, const Rational& beta, const Rational& E) {
  if (E.is_zero()) fail(ErrorKind::ZeroGauge, "epsilon_8 = 0");
  const Rational q = s * s, ab = alpha * beta;
  const RationalFunction z = RationalFunction::z(), one = cst(Rational(1));
  const RationalFunction zi = one / z;
  const RationalFunction num = (one - cst(alpha / q) * zi) * (one - cst(beta / q) * zi) * (one - cst(ab / (E * s)) * z) *
                               (one - cst(E * s) * z);
  const RationalFunction den = (one - cst(alpha) * z) * (one - cst(beta) * z) * (one - cst(ab / (E * s * q)) * zi) *
                               (one - cst(E / s) * zi);
  return {num / den, "w2_w1"};
}

QDifferenceOperator takemura_direct(const GridParams& g, const EpsilonParams& p) {
  const Rational s = g.s, q = g.q();
  const A0Coefficients c = epsilon_product_coefficients(s, p);
  Polynomial num = Polynomial::constant(Rational(1));
  for (const auto& v : squares(p.e)) num = num * Polynomial::linear(Rational(1), -s * v);
  const Polynomial den = Polynomial({Rational(1), Rational(0), Rational(-1)}) * Polynomial({Rational(1), Rational(0), -q});
  QDifferenceOperator W;
  W.q = q;
  W.label = "takemura(direct)";
  W.A1 = RationalFunction(num, den);
  W.A2 = W.A1.invert_arg();
  W.A0 = assemble_a0(s, c, +1);
  return W;
}

void CoincidenceReport::check() const {
  if (!pass()) fail(ErrorKind::CoincidenceFailed, "routes differ in " + describe(diffs));
}

CoincidenceReport verify_takemura_coincidence(const GridParams& g, const EpsilonParams& p,
                                              std::optional<Rational> route_b_c0) {
  if (g.a * g.b != g.q() * product(p.e)) fail(ErrorKind::InvariantViolation, "alpha beta = q prod(e) violated");
  CoincidenceReport r;
  r.route_a = conjugate(build_W2(g, p), gauge_ratio_takemura(g), Direction::PsiInvWPsi);
  EpsilonParams pb = p;
  if (route_b_c0) pb.c0 = *route_b_c0;
  r.route_b = takemura_direct(g, pb);
  r.diffs = compare(r.route_a, r.route_b);
  return r;
}

std::string Interpretation::id() const {
  return std::string(gauged ? "gauged" : "ungauged") + "/" + (substituted_gauge ? "gauge_inv_eps8" : "gauge_eps8") +
         "/" + std::string(to_string(direction));
}

std::optional<Interpretation> RelationReport::passing() const {
  for (const auto& r : results)
    if (r.pass()) return r.interp;
  return std::nullopt;
}

void RelationReport::check() const {
  if (passing()) return;
  std::string msg = "no interpretation holds:";
  for (const auto& r : results) msg += " [" + r.interp.id() + ": " + describe(r.diffs) + "]";
  fail(ErrorKind::RelationFailed, msg);
}

RelationReport verify_w2_w1_relation(const GridParams& g, const EpsilonParams& p) {
  const Rational s = g.s, q = g.q();
  const Rational e8 = p.e[7];
  if (e8.is_zero()) fail(ErrorKind::InvariantViolation, "epsilon_8 = 0");
  const Rational eps8 = e8 * e8;

  GridParams g1{s, s * product(p.e), s, std::nullopt, g.range, GridKind::OneSeries};
  const QDifferenceOperator W1 = build_W1(g1, p);

  EpsilonParams p2 = p;
  p2.e[7] = inverse(e8);
  p2.c0 = p.c0 / eps8;
  GridParams g2{s, g.a, q * product(p2.e) / g.a, std::nullopt, g.range, GridKind::TwoSeries};
  const QDifferenceOperator W2 = build_W2(g2, p2);
  const QDifferenceOperator W2hat = conjugate(W2, gauge_ratio_takemura(g2), Direction::PsiInvWPsi);

  RelationReport rep;
  rep.epsilon8 = eps8;
  rep.alpha2 = g2.a;
  rep.beta2 = g2.b;
  for (bool gauged : {false, true})
    for (bool sub : {false, true})
      for (Direction d : {Direction::PsiWPsiInv, Direction::PsiInvWPsi}) {
        const GaugeRatio G = gauge_ratio_w2_w1(s, g2.a, g2.b, sub ? inverse(eps8) : eps8);
        QDifferenceOperator rhs = conjugate(W1, G, d);
        const RationalFunction k = cst(inverse(eps8));
        rhs.A1 = rhs.A1 * k;
        rhs.A2 = rhs.A2 * k;
        rhs.A0 = rhs.A0 * k;
        rep.results.push_back({{gauged, sub, d}, compare(gauged ? W2hat : W2, rhs)});
      }
  return rep;
}

}  // namespace qheun
