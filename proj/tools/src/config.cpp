#include "qheun_cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qheun/bigfloat.hpp"
#include "qheun/heun.hpp"

namespace qheun::cli {

namespace {

Rational scalar(const Json& j, const std::string& field) {
  if (!j.is_string() && !j.is_number_integer())
    fail(ErrorKind::ParseError, "field " + field + ": exact scalars are written as strings");
  try {
    return j.is_string() ? Rational::parse(j.get<std::string>()) : Rational(j.get<long>());
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, "field " + field + ": " + e.what());
  }
}

template <std::size_t N>
std::array<Rational, N> scalars(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != N)
    fail(ErrorKind::ParseError, "field " + field + ": expected " + std::to_string(N) + " scalars");
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = scalar(j[i], field + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<std::string> strings(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "field " + field + ": expected a list");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(ErrorKind::ParseError, "field " + field + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

long integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(ErrorKind::ParseError, "field " + field + ": expected an integer");
  return j.get<long>();
}

void invalid(const std::string& what) { fail(ErrorKind::InvalidParameters, what); }

template <std::size_t N>
Json texts(const std::array<Rational, N>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
  return parse_config_json(j, path);
}

RunConfig parse_config_json(const Json& j, const std::string& source) {
  if (!j.is_object()) fail(ErrorKind::ParseError, source + ": top level must be an object");
  static const std::vector<std::string> known = {"grid", "parametrization", "eta", "rho", "c", "c0", "epsilon_roots",
                                                 "n_max", "m_max", "modes", "precision", "p_list",
                                                 "classical_p_list", "z_list", "t", "seed", "points", "output"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) fail(ErrorKind::ParseError, "unknown field " + k);

  RunConfig c;
  c.source = source;
  if (!j.contains("grid") || !j["grid"].is_object()) fail(ErrorKind::ParseError, "field grid: required object");
  const Json& g = j["grid"];
  for (const char* f : {"s", "a", "b"})
    if (!g.contains(f)) fail(ErrorKind::ParseError, std::string("field grid.") + f + ": required");
  c.grid.s = scalar(g["s"], "grid.s");
  c.grid.a = scalar(g["a"], "grid.a");
  c.grid.b = scalar(g["b"], "grid.b");
  if (j.contains("parametrization")) {
    if (!j["parametrization"].is_string()) fail(ErrorKind::ParseError, "field parametrization: expected a string");
    c.parametrization = j["parametrization"].get<std::string>();
  }
  if (j.contains("eta")) c.eta = scalars<9>(j["eta"], "eta");
  if (j.contains("rho")) c.rho = scalars<11>(j["rho"], "rho");
  if (j.contains("c")) c.c = scalars<6>(j["c"], "c");
  if (j.contains("c0")) c.c0 = scalar(j["c0"], "c0");
  if (j.contains("epsilon_roots")) c.grid.e = scalars<8>(j["epsilon_roots"], "epsilon_roots");
  if (j.contains("n_max")) c.n_max = static_cast<int>(integer(j["n_max"], "n_max"));
  if (j.contains("m_max")) c.m_max = static_cast<int>(integer(j["m_max"], "m_max"));
  if (j.contains("modes")) c.modes = strings(j["modes"], "modes");
  if (j.contains("precision")) c.precision = integer(j["precision"], "precision");
  if (j.contains("p_list")) c.p_list = strings(j["p_list"], "p_list");
  if (j.contains("classical_p_list")) c.classical_p_list = strings(j["classical_p_list"], "classical_p_list");
  if (j.contains("z_list")) c.z_list = strings(j["z_list"], "z_list");
  if (j.contains("t")) c.t = scalar(j["t"], "t");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail(ErrorKind::ParseError, "field seed: expected a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("points")) c.points = static_cast<int>(integer(j["points"], "points"));
  if (j.contains("output")) {
    if (!j["output"].is_string()) fail(ErrorKind::ParseError, "field output: expected a string");
    c.out = j["output"].get<std::string>();
  }
  for (const auto& list : {c.p_list, c.classical_p_list, c.z_list})
    for (const auto& v : list) {
      try {
        BigFloat::parse(v, kMinPrecision);
      } catch (const Error&) {
        fail(ErrorKind::ParseError, "malformed real \"" + v + "\" in a p or z list");
      }
    }
  validate_config(c);
  return c;
}

void validate_config(const RunConfig& c) {
  const GridParams& g = c.grid;
  if (g.a == g.b) invalid("invariant α ≠ β violated: a = b = " + g.a.to_string());
  if (c.n_max < 0 || c.m_max < 0) invalid("n_max and m_max must be non-negative");
  if (c.points < 1) invalid("points must be at least 1");
  if (c.precision < kMinPrecision) invalid("precision below " + std::to_string(kMinPrecision) + " bits");
  for (const auto& m : c.modes)
    if (std::find(all_modes().begin(), all_modes().end(), m) == all_modes().end()) invalid("unknown mode " + m);
  if (c.parametrization != "rho" && c.parametrization != "eta" && c.parametrization != "epsilon")
    invalid("parametrization must be rho, eta or epsilon");
  const std::string why = degeneracy(g.with_range(std::max(c.n_max, c.m_max) + 1));
  if (!why.empty()) invalid("grid: " + why);
  if (c.parametrization == "rho" && (!c.rho || !c.c)) invalid("parametrization rho needs rho (11) and c (6)");
  if (c.parametrization == "epsilon" && !g.e) invalid("parametrization epsilon needs epsilon_roots");
  if (c.parametrization == "eta" && c.eta) {
    const Rational q = g.q();
    if ((*c.eta)[0].is_zero()) invalid("eta_0 must be nonzero");
    if ((*c.eta)[8] != q * q * g.a * g.a * g.b * g.b * (*c.eta)[0]) invalid("invariant eta_8 = q^2 α^2 β^2 eta_0 violated");
  }
  if (c.p_list.empty() || c.classical_p_list.empty() || c.z_list.empty()) invalid("p and z lists must be non-empty");
  if (!(abs(c.t) < Rational(1)) || c.t.is_zero()) invalid("t must satisfy 0 < |t| < 1");
}

Json to_json(const RunConfig& c) {
  Json j;
  j["grid"] = {{"s", c.grid.s.to_string()}, {"a", c.grid.a.to_string()}, {"b", c.grid.b.to_string()}};
  j["parametrization"] = c.parametrization;
  if (c.eta) j["eta"] = texts(*c.eta);
  if (c.rho) j["rho"] = texts(*c.rho);
  if (c.c) j["c"] = texts(*c.c);
  j["c0"] = c.c0.to_string();
  if (c.grid.e) j["epsilon_roots"] = texts(*c.grid.e);
  j["n_max"] = c.n_max;
  j["m_max"] = c.m_max;
  j["modes"] = c.modes;
  j["precision"] = c.precision;
  j["p_list"] = c.p_list;
  j["classical_p_list"] = c.classical_p_list;
  j["z_list"] = c.z_list;
  j["t"] = c.t.to_string();
  j["seed"] = c.seed;
  j["points"] = c.points;
  return j;
}

}  // namespace qheun::cli
