#include "qheun/polynomial.hpp"

#include <algorithm>

#include "qheun/error.hpp"

namespace qheun {

namespace {

const Rational& zero_scalar() {
  static const Rational z(0);
  return z;
}

using IntPoly = std::vector<mpz_class>;

void trim_int(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return;
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_primitive(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class v = l / c.denominator();
    out.push_back(v * c.numerator());
  }
  make_primitive(out);
  return out;
}

// Pseudo-remainder lc(b)^(da-db+1) * a mod b, computed in place over Z.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const mpz_class& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

Polynomial Polynomial::root_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const { return c_.empty() ? zero_scalar() : c_.back(); }

int Polynomial::low_order() const {
  int k = 0;
  while (k <= degree() && c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return is_zero() ? 0 : k;
}

Rational Polynomial::eval(const Rational& z) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

BigComplex Polynomial::eval(const BigComplex& z) const {
  BigComplex acc(z.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + BigComplex(*it, z.precision());
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::scale_arg(const Rational& c) const {
  std::vector<Rational> out = c_;
  Rational p(1);
  for (auto& v : out) {
    v *= p;
    p *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reverse(int n) const {
  if (n < degree()) fail(ErrorKind::InvalidArgument, "reverse length below degree");
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= degree(); ++k) out[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shift_down(int k) const {
  if (k <= 0 || is_zero()) return *this;
  if (low_order() < k) fail(ErrorKind::InvalidArgument, "shift_down past a nonzero coefficient");
  return Polynomial(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Polynomial Polynomial::shift_up(int k) const {
  if (k <= 0 || is_zero()) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(k));
  out.insert(out.end(), c_.begin(), c_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * inverse(leading());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) {
    v.canonicalize();
    out.emplace_back(v);
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out + ")";
}

Polynomial pow(const Polynomial& p, int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative polynomial power");
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial base = p;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = inverse(b.leading());
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational t = r[static_cast<std::size_t>(k + b.degree())] * inv_lead;
    quot[static_cast<std::size_t>(k)] = t;
    if (t.is_zero()) continue;
    for (int i = 0; i <= b.degree(); ++i) r[static_cast<std::size_t>(k + i)] -= t * bc[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
  return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(Rational(1));
  IntPoly u = to_primitive(a);
  IntPoly v = to_primitive(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    IntPoly r = prem(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(u.size());
  for (const auto& c : u) out.emplace_back(c, u.back());
  return Polynomial(std::move(out));
}

}  // namespace qheun
