#include "qheun/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace qheun {

namespace {

BigComplex real(const BigFloat& x) { return {x, BigFloat(x.precision())}; }

BigComplex num(const Rational& r, long prec) { return BigComplex(r, prec); }

BigComplex num(const std::string& text, long prec) { return real(BigFloat::parse(text, prec)); }

// Least-squares slope of log y against log x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) return 0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(std::max(y[i], 1e-300));
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(std::max(y[i], 1e-300)) - my);
    sxx += dx * dx;
  }
  return sxx == 0 ? 0 : sxy / sxx;
}

void finish(ErrorSeries& e, const std::vector<double>& ps) {
  e.max.clear();
  for (const auto& row : e.per_z) e.max.push_back(row.empty() ? 0.0 : *std::max_element(row.begin(), row.end()));
  e.order = slope(ps, e.max);
  e.decreasing = true;
  for (std::size_t i = 1; i < e.max.size(); ++i)
    if (!(e.max[i] < e.max[i - 1])) e.decreasing = false;
}

std::vector<double> p_values(const std::vector<std::string>& ps) {
  std::vector<double> out;
  for (const auto& p : ps) out.push_back(BigFloat::parse(p, kMinPrecision).to_double());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i] < out[i - 1]) || out[i] <= 0)
      fail(ErrorKind::InvalidArgument, "p_list must be positive and strictly decreasing");
  return out;
}

}  // namespace

ThetaContext ThetaContext::make(const BigComplex& p, long precision) {
  const BigFloat m = abs(p);
  if (!(m < BigFloat(1, precision))) fail(ErrorKind::InvalidArgument, "theta nome needs |p| < 1, got " + p.to_string());
  if (m.is_zero()) return {p, 1, precision};
  const double per_factor = -log2(m).to_double();
  ThetaContext ctx{p, 0, precision};
  ctx.truncation_order = static_cast<int>(std::ceil(static_cast<double>(precision + 16) / per_factor)) + 2;
  return ctx;
}

BigComplex theta(const BigComplex& z, const ThetaContext& ctx) {
  if (z.is_zero()) fail(ErrorKind::ZeroArgument, "theta at z = 0");
  const BigComplex one(Rational(1), ctx.precision);
  const BigComplex zi = inverse(z);
  BigComplex pk = one;  // p^k
  BigComplex r = one;
  for (int k = 0; k < ctx.truncation_order; ++k) {
    const BigComplex next = pk * ctx.p;
    r *= (one - next * zi) * (one - pk * z);
    pk = next;
  }
  return r;
}

std::string_view to_string(LReading r) { return r == LReading::Swapped ? "swapped" : "literal"; }

BigComplex EllipticParams::root_prod_a() const {
  if (sqrt_prod_a) return *sqrt_prod_a;
  BigComplex prod(Rational(1), p.precision());
  for (const auto& v : a) prod *= v;
  return sqrt(prod);
}

BigComplex divergent_coefficient(const EllipticParams& ep) {
  const long prec = ep.p.precision();
  const BigComplex one(Rational(1), prec);
  const BigComplex q = ep.q();
  return ep.t * ep.root_prod_a() / ((one - ep.t) * (one - ep.t / q) * q * q);
}

RvdCoefficients rvd_coefficients(const BigComplex& z, const EllipticParams& ep, const ThetaContext& ctx,
                                 LReading reading) {
  const long prec = ctx.precision;
  const BigFloat tiny = exp2_int(-prec / 2, prec);
  auto guard = [&](const BigComplex& d, const char* what) {
    if (abs(d) < tiny) fail(ErrorKind::NearPole, std::string(what) + " vanishes at z = " + z.to_string());
    return d;
  };
  const BigComplex q = ep.q();
  const BigComplex zi = inverse(z);
  auto side = [&](const BigComplex& w) {
    BigComplex n(Rational(1), prec);
    for (const auto& a : ep.a) n *= theta(a * w, ctx);
    return n / guard(theta(w * w, ctx) * theta(q * w * w, ctx), "theta(z^2) theta(q z^2)");
  };
  RvdCoefficients out{side(z), side(zi), BigComplex(prec)};

  const BigComplex one(Rational(1), prec);
  const BigComplex rp = sqrt(ctx.p);
  const std::array<BigComplex, 4> c = {one, -one, inverse(rp), -rp};
  BigComplex big = ep.t / (q * q * ctx.p);
  if (reading == LReading::Swapped) {
    big *= ep.root_prod_a();
  } else {
    for (const auto& a : ep.a) big *= a;
  }
  const BigComplex small = ctx.p * ctx.p / big;
  const std::array<BigComplex, 4> L = reading == LReading::Swapped ? std::array<BigComplex, 4>{one, one, small, big}
                                                                    : std::array<BigComplex, 4>{one, one, big, small};
  const BigComplex tt = theta(ep.t, ctx) * theta(ep.t / q, ctx);
  for (int j = 0; j < 4; ++j) {
    const BigComplex cj = c[j] / ep.s;
    BigComplex term = L[j] / tt * theta(cj * ep.t * z, ctx) * theta(cj * ep.t * zi, ctx) /
                      guard(theta(cj * z, ctx) * theta(cj * zi, ctx), "theta(c_j q^-1/2 z^(+-1))");
    for (const auto& a : ep.a) term *= theta(cj * a, ctx);
    out.zero += term;
  }
  out.zero = out.zero / BigComplex(Rational(2), prec);
  return out;
}

const ErrorSeries& ConvergenceReport::get(const std::string& name) const {
  for (const auto& s : series)
    if (s.name == name) return s;
  fail(ErrorKind::InvalidArgument, "no series " + name + " in " + check);
}

void ConvergenceReport::check_ok() const {
  if (!pass()) fail(failure_kind, check + ": " + failures.front());
}

ConvergenceReport limit_check_takemura(const TakemuraFixture& f, const QDifferenceOperator& exact) {
  const long prec = f.precision;
  const std::vector<double> ps = p_values(f.p_list);
  ConvergenceReport rep;
  rep.check = "limit_takemura";
  rep.reading = f.reading;
  rep.precision = prec;
  rep.p_list = f.p_list;
  rep.z_list = f.z_list;

  EllipticParams ep;
  ep.s = num(f.s, prec);
  ep.t = num(f.t, prec);
  for (int j = 0; j < 8; ++j) ep.a[j] = f.a_override ? num((*f.a_override)[j], prec) : num(f.s * f.e[j] * f.e[j], prec);
  // prod(a)^(1/2) = q^2 prod(e) for a_j = s e_j^2; the override keeps the same branch rule.
  ep.sqrt_prod_a = f.a_override ? std::optional<BigComplex>() : num(f.s * f.s * f.s * f.s * product(f.e), prec);

  std::vector<BigComplex> zs;
  for (const auto& z : f.z_list) zs.push_back(num(z, prec));
  std::vector<BigComplex> A1, A2, A0;
  for (const auto& z : zs) {
    A1.push_back(exact.A1.eval(z));
    A2.push_back(exact.A2.eval(z));
    A0.push_back(exact.A0.eval(z));
  }

  ErrorSeries plus, minus, zero, div;
  plus.name = "A+";
  minus.name = "A-";
  zero.name = "A0";
  div.name = "p*A0-D";
  std::vector<std::vector<BigComplex>> resid(f.p_list.size());
  std::vector<BigComplex> pvals;
  for (std::size_t i = 0; i < f.p_list.size(); ++i) {
    ep.p = num(f.p_list[i], prec);
    pvals.push_back(ep.p);
    const ThetaContext ctx = ThetaContext::make(ep.p, prec);
    const BigComplex D = divergent_coefficient(ep);
    plus.per_z.emplace_back();
    minus.per_z.emplace_back();
    div.per_z.emplace_back();
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const RvdCoefficients r = rvd_coefficients(zs[k], ep, ctx, f.reading);
      plus.per_z.back().push_back(abs(r.plus - A1[k]).to_double());
      minus.per_z.back().push_back(abs(r.minus - A2[k]).to_double());
      div.per_z.back().push_back(abs(ep.p * r.zero - D).to_double());
      resid[i].push_back(r.zero - D / ep.p - A0[k]);
    }
  }

  // c0_hat: per z, the straight line through the two smallest p evaluated at p = 0.
  const std::size_t n = resid.size();
  BigComplex c0(prec);
  for (std::size_t k = 0; k < zs.size(); ++k) {
    if (n >= 2) {
      const BigComplex& r1 = resid[n - 1][k];
      const BigComplex& r2 = resid[n - 2][k];
      c0 += r1 - pvals[n - 1] * (r2 - r1) / (pvals[n - 2] - pvals[n - 1]);
    } else {
      c0 += resid[0][k];
    }
  }
  c0 = c0 / BigComplex(Rational(static_cast<long>(zs.size())), prec);
  rep.fitted.emplace_back("c0_hat", c0.to_string(12));
  for (std::size_t i = 0; i < n; ++i) {
    zero.per_z.emplace_back();
    for (std::size_t k = 0; k < zs.size(); ++k) zero.per_z.back().push_back(abs(resid[i][k] - c0).to_double());
  }

  for (ErrorSeries* e : {&plus, &minus, &zero, &div}) {
    finish(*e, ps);
    if (!e->decreasing) rep.failures.push_back(e->name + " errors do not decrease with p");
    rep.series.push_back(std::move(*e));
  }
  rep.failure_kind = ErrorKind::NoConvergence;
  return rep;
}

ConvergenceReport limit_check_classical(const ClassicalFixture& f) {
  const long prec = f.precision;
  const std::vector<double> ps = p_values(f.p_list);
  ConvergenceReport rep;
  rep.check = "limit_classical";
  rep.precision = prec;
  rep.p_list = f.p_list;
  rep.z_list = f.z_list;

  EllipticParams ep;
  ep.s = num(f.s, prec);
  ep.t = num(f.t, prec);
  const BigComplex q = ep.q();
  Rational base_prod(1);
  for (int j = 0; j < 6; ++j) {
    ep.a[j] = num(f.base[j], prec);
    base_prod *= f.base[j];
  }
  const BigComplex a6 = sqrt(num(f.s * f.s * f.s / base_prod, prec));
  ep.a[6] = a6;
  BigComplex lead(Rational(1), prec);  // t a_0^2 .. a_4^2 / (q^4 (q - t)(1 - t))
  for (int j = 0; j < 5; ++j) lead *= ep.a[j] * ep.a[j];
  const BigComplex one(Rational(1), prec);
  lead = ep.t * lead / (q * q * q * q * (q - ep.t) * (one - ep.t));

  std::vector<BigComplex> zs;
  for (const auto& z : f.z_list) zs.push_back(num(z, prec));

  std::vector<std::vector<BigComplex>> B, V;
  ErrorSeries spread, cauchy, settle;
  spread.name = "spread";
  cauchy.name = "cauchy_B";
  settle.name = "cauchy_combination";
  for (const auto& ptext : f.p_list) {
    ep.p = num(ptext, prec);
    ep.a[7] = num(f.violation, prec) * q * ep.p / (num(base_prod, prec) * a6);
    ep.sqrt_prod_a.reset();
    const ThetaContext ctx = ThetaContext::make(ep.p, prec);
    B.emplace_back();
    V.emplace_back();
    for (const auto& z : zs) {
      const RvdCoefficients r = rvd_coefficients(z, ep, ctx, LReading::Swapped);
      B.back().push_back(ep.p / q * r.plus);
      V.back().push_back(ep.p / q * (r.plus + r.minus + r.zero) - lead / ep.p);
    }
    double worst = 0;
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) worst = std::max(worst, abs(V.back()[i] - V.back()[j]).to_double());
    spread.per_z.push_back({worst});
  }
  for (std::size_t i = 0; i + 1 < B.size(); ++i) {
    cauchy.per_z.emplace_back();
    settle.per_z.emplace_back();
    for (std::size_t k = 0; k < zs.size(); ++k) {
      cauchy.per_z.back().push_back(abs(B[i + 1][k] - B[i][k]).to_double());
      settle.per_z.back().push_back(abs(V[i + 1][k] - V[i][k]).to_double());
    }
  }
  finish(spread, ps);
  const std::vector<double> tail(ps.begin() + 1, ps.end());
  finish(cauchy, tail);
  finish(settle, tail);
  const BigComplex p_min = num(f.p_list.back(), prec);
  rep.fitted.emplace_back("divergent_term", lead.to_string(12));
  rep.fitted.emplace_back("combination_at_p_min", V.back().front().to_string(12));
  rep.fitted.emplace_back("p_times_combination_at_p_min", (p_min * V.back().front()).to_string(12));

  if (!cauchy.decreasing) {
    rep.failures.push_back("q^-1 p A+ does not settle as p decreases");
    rep.failure_kind = ErrorKind::NoConvergence;
  } else if (!settle.decreasing) {
    rep.failures.push_back("the divergence-subtracted combination does not settle as p decreases");
    rep.failure_kind = ErrorKind::NoConvergence;
  } else if (!spread.decreasing) {
    rep.failures.push_back("cross-z spread does not shrink");
    rep.failure_kind = ErrorKind::NoConvergence;
  } else if (spread.order < 0.8) {
    rep.failures.push_back("cross-z spread shrinks with order " + std::to_string(spread.order) + ", not like p");
    rep.failure_kind = ErrorKind::NotConstant;
  }
  rep.series.push_back(std::move(cauchy));
  rep.series.push_back(std::move(settle));
  rep.series.push_back(std::move(spread));
  return rep;
}

}  // namespace qheun
