#include "qheun/grid.hpp"

#include <sstream>

#include "qheun/error.hpp"

namespace qheun {

std::string_view to_string(Series s) {
  switch (s) {
    case Series::X: return "X";
    case Series::Y: return "Y";
    case Series::Extra: return "Extra";
  }
  return "?";
}

GridParams GridParams::swapped() const {
  GridParams g = *this;
  std::swap(g.a, g.b);
  return g;
}

GridParams GridParams::with_range(int n) const {
  GridParams g = *this;
  g.range = n;
  return g;
}

std::string degeneracy(const GridParams& g) {
  const Rational q = g.q();
  if (q.is_zero() || q.is_one()) return "q = s^2 must avoid 0 and +-1 (q = " + q.to_string() + ")";
  if (g.a.is_zero()) return "alpha must be nonzero";
  if (g.b.is_zero()) return "beta must be nonzero";
  if (g.a == g.b) return "alpha != beta violated (alpha = beta = " + g.a.to_string() + ")";
  if (g.range < 0) return "range must be non-negative";
  const bool two = g.kind == GridKind::TwoSeries;
  const int kmax = 2 * g.range + 2;
  const Rational one(1);
  for (int k = -kmax; k <= kmax; ++k) {
    const Rational qk = pow_int(q, k);
    const std::string at = " at k = " + std::to_string(k);
    if (abs(g.a * qk) == one) return "alpha q^k = +-1" + at;
    if (g.a * g.a * qk == one) return "alpha^2 q^k = 1" + at;
    if (!two) continue;
    if (abs(g.b * qk) == one) return "beta q^k = +-1" + at;
    if (g.b * g.b * qk == one) return "beta^2 q^k = 1" + at;
    if (g.a / g.b * qk == one) return "(alpha/beta) q^k = 1" + at;
    if (g.a * g.b * qk == one) return "alpha beta q^k = 1" + at;
  }
  if (g.e) {
    Rational prod(1);
    for (const auto& v : *g.e) {
      if (v.is_zero()) return "epsilon_j must be nonzero";
      prod *= v;
    }
    if (g.a * g.b != q * prod)
      return "alpha beta = q prod e_j violated (" + (g.a * g.b).to_string() + " vs " + (q * prod).to_string() + ")";
  }
  return {};
}

void validate(const GridParams& g) {
  const std::string why = degeneracy(g);
  if (!why.empty()) fail(ErrorKind::DegenerateGrid, why);
}

Rational z_node(const GridParams& g, Series series, int n) {
  if (series == Series::Extra) fail(ErrorKind::InvalidArgument, "extra nodes have no grid preimage");
  const Rational base = series == Series::X ? g.a : g.b;
  return base * pow_int(g.q(), n);
}

Rational x_node(const GridParams& g, Series series, int n) {
  const Rational z = z_node(g, series, n);
  if (z.is_zero() || abs(z) == Rational(1))
    fail(ErrorKind::DegenerateGrid, std::string(to_string(series)) + " node " + std::to_string(n) + " sits at x = +-2");
  return z + inverse(z);
}

RationalFunction elementary_at(const Rational& x0) {
  return RationalFunction(Polynomial::monomial(Rational(1), 1), Polynomial({Rational(1), -x0, Rational(1)}));
}

RationalFunction elementary(const GridParams& g, Series series, int n) { return elementary_at(x_node(g, series, n)); }

bool is_x_symmetric(const RationalFunction& f) { return f.invert_arg() == f; }

std::string PfKey::to_string() const {
  return "(" + std::string(qheun::to_string(series)) + "," + std::to_string(index) + ")";
}

Rational PartialFractionForm::node(const GridParams& g, const PfKey& k) const {
  if (k.series == Series::Extra) {
    if (k.index < 0 || k.index >= static_cast<int>(extra_nodes.size()))
      fail(ErrorKind::IndexOutOfRange, "extra node " + std::to_string(k.index));
    return extra_nodes[static_cast<std::size_t>(k.index)];
  }
  return x_node(g, k.series, k.index);
}

Rational PartialFractionForm::residue(const PfKey& k) const {
  auto it = terms.find(k);
  return it == terms.end() ? Rational(0) : it->second;
}

RationalFunction PartialFractionForm::to_z(const GridParams& g) const {
  // Common denominator prod D_j^m_j with D_j = z^2 - x_j z + 1, numerators
  // assembled from prefix/suffix products so only one gcd is taken.
  struct Factor {
    Polynomial d;
    int mult;
    Rational simple;
    Rational dbl;
  };
  std::map<PfKey, Factor> factors;
  for (const auto& [k, r] : terms) {
    if (r.is_zero()) continue;
    auto& f = factors[k];
    f.d = Polynomial({Rational(1), -node(g, k), Rational(1)});
    f.mult = std::max(f.mult, 1);
    f.simple = r;
  }
  for (const auto& [k, c] : double_terms) {
    if (c.is_zero()) continue;
    auto& f = factors[k];
    f.d = Polynomial({Rational(1), -node(g, k), Rational(1)});
    f.mult = 2;
    f.dbl = c;
  }
  std::vector<const Factor*> list;
  for (const auto& [k, f] : factors) list.push_back(&f);
  const std::size_t n = list.size();
  const Polynomial one = Polynomial::constant(Rational(1));
  std::vector<Polynomial> prefix(n + 1, one), suffix(n + 1, one);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * pow(list[i]->d, list[i]->mult);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * pow(list[i]->d, list[i]->mult);
  Polynomial num = prefix[n] * constant;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial others = prefix[i] * suffix[i + 1];
    const Factor& f = *list[i];
    if (!f.simple.is_zero()) {
      Polynomial t = others * Polynomial::monomial(f.simple, 1);
      if (f.mult == 2) t = t * f.d;
      num += t;
    }
    if (!f.dbl.is_zero()) num += others * Polynomial::monomial(f.dbl, 2);
  }
  return RationalFunction(std::move(num), prefix[n]);
}

std::string PartialFractionForm::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, r] : terms) {
    os << (first ? "" : ", ") << k.to_string() << ": " << r;
    first = false;
  }
  for (const auto& [k, c] : double_terms) {
    os << (first ? "" : ", ") << k.to_string() << "^2: " << c;
    first = false;
  }
  os << (first ? "" : ", ") << "constant: " << constant << "}";
  return os.str();
}

namespace {

struct Candidate {
  PfKey key;
  Rational z;
};

std::vector<Candidate> candidates(const GridParams& g, const PfOptions& opts) {
  std::vector<Candidate> out;
  const int nmax = g.range + 1;
  std::vector<Series> series = {Series::X};
  if (g.kind == GridKind::TwoSeries) series.push_back(Series::Y);
  for (Series s : series)
    for (int n = -nmax; n <= nmax; ++n) out.push_back({{s, n}, z_node(g, s, n)});
  for (std::size_t i = 0; i < opts.allow_extra.size(); ++i) {
    const Rational& x = opts.allow_extra[i];
    const auto root = exact_sqrt(x * x - Rational(4));
    if (!root) fail(ErrorKind::InvalidArgument, "extra node x = " + x.to_string() + " has no rational z-preimage");
    out.push_back({{Series::Extra, static_cast<int>(i)}, (x + *root) / Rational(2)});
  }
  return out;
}

bool allowed_double(const PfOptions& opts, const PfKey& k) {
  for (const auto& d : opts.allow_double)
    if (d == k) return true;
  return false;
}

[[noreturn]] void report_leftover(const Polynomial& leftover, const GridParams& g, const std::string& scan) {
  const Rational s = g.s;
  if (leftover.eval(Rational(1)).is_zero() || leftover.eval(Rational(-1)).is_zero())
    fail(ErrorKind::BoundaryPole, "pole at z = +-1 (x = +-2); remaining denominator " + leftover.to_string());
  if (leftover.eval(Rational(0)).is_zero())
    fail(ErrorKind::UnexpectedPole, "pole at x = infinity (non-constant polynomial part); remaining denominator " +
                                        leftover.to_string());
  for (const Rational& p : {s, -s, inverse(s), -inverse(s)})
    if (leftover.eval(p).is_zero())
      fail(ErrorKind::UnexpectedPole, "pole at bookkeeping point z = " + p.to_string() + "; scanned " + scan);
  fail(ErrorKind::UnexpectedPole, "denominator factor " + leftover.to_string() + " has no root among the candidates; scanned " + scan);
}

}  // namespace

PartialFractionForm partial_fractions_x(const RationalFunction& f, const GridParams& g, const PfOptions& opts) {
  if (!is_x_symmetric(f)) fail(ErrorKind::NotSymmetric, f.to_string() + " is not invariant under z -> 1/z");
  PartialFractionForm form;
  form.extra_nodes = opts.allow_extra;
  if (f.is_polynomial() && f.num().is_constant()) {
    form.constant = f.num().coeff(0);
    return form;
  }

  const Polynomial& den = f.den();
  const Polynomial d1 = den.derivative();
  const Polynomial d2 = d1.derivative();
  const auto cands = candidates(g, opts);
  std::ostringstream scan;
  scan << cands.size() << " candidates over |n| <= " << g.range + 1;

  Polynomial expected = Polynomial::constant(Rational(1));
  std::vector<Candidate> doubles;
  for (const auto& c : cands) {
    if (!den.eval(c.z).is_zero()) continue;
    const Rational x = c.z + inverse(c.z);
    const Polynomial quad({Rational(1), -x, Rational(1)});
    const Rational zz = c.z * c.z;
    const Rational dp = d1.eval(c.z);
    if (!dp.is_zero()) {
      form.terms[c.key] = f.num().eval(c.z) / dp * (zz - Rational(1)) / zz;
      expected = expected * quad;
      continue;
    }
    if (!allowed_double(opts, c.key))
      fail(ErrorKind::HigherOrderPole, "second-order pole at " + c.key.to_string() + " (z = " + c.z.to_string() + ")");
    const Rational dpp = d2.eval(c.z);
    if (dpp.is_zero()) fail(ErrorKind::HigherOrderPole, "pole of order >= 3 at " + c.key.to_string());
    // f ~ L2/(z - z0)^2 and x - x0 ~ (1 - 1/z0^2)(z - z0)
    const Rational l2 = Rational(2) * f.num().eval(c.z) / dpp;
    const Rational slope = Rational(1) - inverse(zz);
    form.double_terms[c.key] = l2 * slope * slope;
    doubles.push_back(c);
    expected = expected * quad * quad;
  }

  auto [leftover, rem] = divmod(den, expected);
  if (!rem.is_zero() || leftover.degree() > 0) {
    if (rem.is_zero()) report_leftover(leftover.monic(), g, scan.str());
    fail(ErrorKind::InternalCheckFailed, "candidate factors do not divide the denominator");
  }

  if (!doubles.empty()) {
    PartialFractionForm dbl;
    dbl.extra_nodes = form.extra_nodes;
    dbl.double_terms = form.double_terms;
    const RationalFunction rest = f - dbl.to_z(g);
    for (const auto& c : doubles) {
      const Rational zz = c.z * c.z;
      form.terms[c.key] = rest.residue_at_simple_root(c.z) * (zz - Rational(1)) / zz;
    }
  }

  // The remainder is f minus every polar part; it being constant is the
  // exact reconstruction check.
  const RationalFunction remainder = f - form.to_z(g);
  if (!remainder.is_constant())
    fail(ErrorKind::InternalCheckFailed, "remainder after removing polar parts is not constant: " + remainder.to_string());
  form.constant = remainder.constant_value();
  return form;
}

}  // namespace qheun
