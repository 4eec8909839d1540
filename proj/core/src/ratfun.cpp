#include "qheun/ratfun.hpp"

#include "qheun/error.hpp"

namespace qheun {

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::ZeroDenominator, num_.to_string() + "/0");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (!den_.leading().is_one()) {
    const Rational inv = inverse(den_.leading());
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::z() {
  return RationalFunction(Polynomial::monomial(Rational(1), 1));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidArgument, "not a constant: " + to_string());
  return num_.coeff(0);
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Trusted{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  if (b.den_.is_constant()) return {a.num_ + b.num_ * a.den_, a.den_, RationalFunction::Trusted{}};
  if (a.den_.is_constant()) return {a.num_ * b.den_ + b.num_, b.den_, RationalFunction::Trusted{}};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel before multiplying to keep the gcd small.
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial an = g1.is_constant() ? a.num_ : divmod(a.num_, g1).first;
  Polynomial bd = g1.is_constant() ? b.den_ : divmod(b.den_, g1).first;
  Polynomial bn = g2.is_constant() ? b.num_ : divmod(b.num_, g2).first;
  Polynomial ad = g2.is_constant() ? a.den_ : divmod(a.den_, g2).first;
  Polynomial num = an * bn;
  Polynomial den = ad * bd;
  const Rational inv = inverse(den.leading());
  num *= inv;
  den *= inv;
  return {std::move(num), std::move(den), RationalFunction::Trusted{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by the zero function");
  return a * RationalFunction(b.den_, b.num_, RationalFunction::Trusted{});
}

RationalFunction RationalFunction::scale_arg(const Rational& c) const {
  if (c.is_zero()) fail(ErrorKind::ZeroScale, "argument scale 0");
  if (c.is_one()) return *this;
  Polynomial n = num_.scale_arg(c);
  Polynomial d = den_.scale_arg(c);
  const Rational inv = inverse(d.leading());
  n *= inv;
  d *= inv;
  return {std::move(n), std::move(d), Trusted{}};
}

RationalFunction RationalFunction::invert_arg() const {
  if (num_.is_zero()) return *this;
  // f(1/z) = z^(dd-dn) * rev(num) / rev(den)
  const int dn = num_.degree();
  const int dd = den_.degree();
  Polynomial n = num_.reverse(dn);
  Polynomial d = den_.reverse(dd);
  if (dd >= dn)
    n = n.shift_up(dd - dn);
  else
    d = d.shift_up(dn - dd);
  return {std::move(n), std::move(d)};
}

namespace {

// z^deg(P) * P(z + 1/z) = sum p_k (z^2+1)^k z^(deg P - k)
Polynomial compose_x_poly(const Polynomial& p) {
  const int d = p.degree();
  Polynomial out;
  if (d < 0) return out;
  const Polynomial w = Polynomial({Rational(1), Rational(0), Rational(1)});
  Polynomial wk = Polynomial::constant(Rational(1));
  for (int k = 0; k <= d; ++k) {
    if (!p.coeff(k).is_zero()) out += (wk * p.coeff(k)).shift_up(d - k);
    if (k < d) wk = wk * w;
  }
  return out;
}

}  // namespace

RationalFunction RationalFunction::compose_x() const {
  Polynomial n = compose_x_poly(num_);
  Polynomial d = compose_x_poly(den_);
  const int shift = den_.degree() - std::max(num_.degree(), 0);
  if (shift >= 0)
    n = n.shift_up(shift);
  else
    d = d.shift_up(-shift);
  if (d.is_zero()) fail(ErrorKind::ZeroDenominator, "denominator vanishes after x = z + 1/z");
  return {std::move(n), std::move(d)};
}

Rational RationalFunction::eval(const Rational& z0) const {
  const Rational d = den_.eval(z0);
  if (d.is_zero()) fail(ErrorKind::PoleAtPoint, to_string() + " at z = " + z0.to_string());
  return num_.eval(z0) / d;
}

BigComplex RationalFunction::eval(const BigComplex& z0) const {
  const BigComplex d = den_.eval(z0);
  if (d.is_zero()) fail(ErrorKind::PoleAtPoint, to_string() + " at z = " + z0.to_string());
  return num_.eval(z0) / d;
}

Rational RationalFunction::residue_at_simple_root(const Rational& z0) const {
  if (!den_.eval(z0).is_zero()) fail(ErrorKind::NotAPole, "z = " + z0.to_string() + " is not a root of " + den_.to_string());
  const Rational dp = den_.derivative().eval(z0);
  if (dp.is_zero()) fail(ErrorKind::HigherOrderPole, "pole of order >= 2 at z = " + z0.to_string());
  return num_.eval(z0) / dp;
}

std::string RationalFunction::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

RationalFunction pow(const RationalFunction& f, int k) {
  if (k < 0) return RationalFunction(Rational(1)) / pow(f, -k);
  return RationalFunction(pow(f.num(), k), pow(f.den(), k));
}

RationalFunction x_of_z() {
  return RationalFunction(Polynomial({Rational(1), Rational(0), Rational(1)}), Polynomial::monomial(Rational(1), 1));
}

}  // namespace qheun
