#include "qheun/random_params.hpp"

namespace qheun {

Rational ParamSampler::any(long height) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  return Rational(num(rng_), den(rng_));
}

Rational ParamSampler::nonzero(long height) {
  for (;;) {
    Rational r = any(height);
    if (!r.is_zero()) return r;
  }
}

Rational ParamSampler::base_s() {
  for (;;) {
    const Rational s = nonzero(5);
    if (abs(s) != Rational(1)) return s;
  }
}

GridParams ParamSampler::grid(int range, GridKind kind) {
  for (;;) {
    GridParams g;
    g.s = base_s();
    g.a = nonzero();
    g.b = kind == GridKind::OneSeries ? g.s : nonzero();
    g.range = range;
    g.kind = kind;
    if (degeneracy(g).empty()) return g;
  }
}

std::array<Rational, 8> ParamSampler::epsilon_roots() {
  std::array<Rational, 8> e;
  for (auto& v : e) v = nonzero(5);
  return e;
}

GridParams ParamSampler::epsilon_grid(int range) {
  for (;;) {
    GridParams g;
    g.s = base_s();
    g.e = epsilon_roots();
    g.a = nonzero();
    Rational prod(1);
    for (const auto& v : *g.e) prod *= v;
    g.b = g.q() * prod / g.a;
    g.range = range;
    if (degeneracy(g).empty()) return g;
  }
}

}  // namespace qheun
