#include "qheun_cli/runner.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "qheun/elliptic.hpp"
#include "qheun/gauge.hpp"
#include "qheun/heun.hpp"
#include "qheun/random_params.hpp"

namespace qheun::cli {

namespace {

struct Check {
  std::string name;
  std::string status;  // pass | fail | resolved-interpretation
  Json payload = Json::object();
};

Json pf_json(const PartialFractionForm& pf) {
  Json terms = Json::object();
  for (const auto& [k, v] : pf.terms) terms[k.to_string()] = v.to_string();
  Json out{{"residues", terms}};
  if (!pf.double_terms.empty()) {
    Json d = Json::object();
    for (const auto& [k, v] : pf.double_terms) d[k.to_string()] = v.to_string();
    out["double"] = d;
  }
  out["constant"] = pf.constant.to_string();
  return out;
}

Json op_json(const QDifferenceOperator& W) {
  return {{"label", W.label}, {"A1", W.A1.to_string()}, {"A2", W.A2.to_string()}, {"A0", W.A0.to_string()}};
}

Json raising_json(const RaisingReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"input", e.input}, {"pass", e.pass}};
    if (r.mode == RaisingMode::TwoSeries && e.single) j["five_term"] = e.five_term;
    if (e.image) j["image"] = pf_json(*e.image);
    if (!e.reason.empty()) j["reason"] = e.reason;
    entries.push_back(std::move(j));
  }
  return {{"mode", std::string(to_string(r.mode))}, {"n_max", r.n_max}, {"m_max", r.m_max}, {"seed", r.seed},
          {"pass", r.pass()}, {"entries", entries}};
}

Json diffs_json(const std::vector<ComponentDiff>& diffs) {
  Json out = Json::array();
  for (const auto& d : diffs)
    out.push_back({{"component", d.component}, {"diff", d.diff.to_string()}, {"constant_only", d.constant_only()}});
  return out;
}

Json convergence_json(const ConvergenceReport& r) {
  Json series = Json::array();
  for (const auto& s : r.series) {
    Json per = Json::array();
    for (const auto& row : s.per_z) per.push_back(row);
    series.push_back({{"name", s.name}, {"order", s.order}, {"decreasing", s.decreasing}, {"max", s.max}, {"per_z", per}});
  }
  Json fitted = Json::object();
  for (const auto& [k, v] : r.fitted) fitted[k] = v;
  return {{"check", r.check},   {"reading", std::string(to_string(r.reading))}, {"precision", r.precision},
          {"p_list", r.p_list}, {"z_list", r.z_list},  {"series", series},
          {"fitted", fitted},   {"failures", r.failures}};
}

std::string grid_text(const GridParams& g) {
  return "s=" + g.s.to_string() + " a=" + g.a.to_string() + " b=" + g.b.to_string();
}

EtaParams random_eta(std::mt19937_64& rng, const GridParams& g, Which which) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  EtaParams p;
  p.which = which;
  for (auto& v : p.eta) v = Rational(num(rng), den(rng));
  while (p.eta[0].is_zero()) p.eta[0] = Rational(num(rng), den(rng));
  const Rational q = g.q();
  p.eta[8] = which == Which::W2 ? q * q * g.a * g.a * g.b * g.b * p.eta[0] : g.a * g.a * q * q * q * p.eta[0];
  return p;
}

class Runner {
 public:
  explicit Runner(const RunConfig& c) : c_(c) {}

  Json run_all(int& exit_code) {
    Json checks = Json::array();
    Json seconds = Json::object();
    const auto& modes = c_.modes.empty() ? all_modes() : c_.modes;
    for (const auto& mode : all_modes()) {
      if (std::find(modes.begin(), modes.end(), mode) == modes.end()) continue;
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<Check> out;
      try {
        dispatch(mode, out);
      } catch (const Error& e) {
        out.push_back({mode, "fail", {{"error", e.what()}}});
      }
      seconds[mode] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (auto& ch : out) {
        if (ch.status == "fail") exit_code = kVerificationFailed;
        checks.push_back({{"name", ch.name}, {"status", ch.status}, {"payload", std::move(ch.payload)}});
      }
    }
    timing_ = seconds;
    return checks;
  }

  Json timing() const { return timing_; }

 private:
  void dispatch(const std::string& mode, std::vector<Check>& out) {
    if (mode == "construct") construct(out);
    else if (mode == "apply") apply_mode(out);
    else if (mode == "raising") raising(out);
    else if (mode == "identities") identities(out);
    else if (mode == "gauge") gauge(out);
    else if (mode == "w2w1") w2w1(out);
    else if (mode == "elliptic") elliptic(out);
    else if (mode == "classical") classical(out);
  }

  GridParams grid() const { return c_.grid.with_range(std::max(c_.n_max, c_.m_max) + 1); }

  // The configured operator and, for eta/epsilon, its eta parameters.
  QDifferenceOperator config_operator() {
    const GridParams g = grid();
    if (c_.parametrization == "rho") {
      WAWCoefficients k;
      k.rho = *c_.rho;
      k.c = *c_.c;
      return build_W_AW(g, k);
    }
    return build_W2(g, config_eta());
  }

  EtaParams config_eta() {
    if (!eta_) {
      const GridParams g = grid();
      if (c_.parametrization == "epsilon") {
        eta_ = EtaParams{eta_from_epsilon(g.s, *g.e, Rational(1)), c_.c0, Which::W2};
      } else if (c_.eta) {
        eta_ = EtaParams{*c_.eta, c_.c0, Which::W2};
      } else {
        std::mt19937_64 rng(c_.seed);
        eta_ = random_eta(rng, g, Which::W2);
        eta_->c0 = c_.c0;
      }
    }
    return *eta_;
  }

  Json eta_json() {
    Json out = Json::array();
    for (const auto& v : config_eta().eta) out.push_back(v.to_string());
    return out;
  }

  void construct(std::vector<Check>& out) {
    const auto W = config_operator();
    Json p = op_json(W);
    if (c_.parametrization != "rho") p["eta"] = eta_json();
    p["aw_symmetric"] = has_aw_symmetry(W);
    out.push_back({"construct", has_aw_symmetry(W) ? "pass" : "fail", p});
  }

  void apply_mode(std::vector<Check>& out) {
    const auto W = config_operator();
    const GridParams g = grid();
    PfOptions opts;
    opts.allow_double = {{Series::Y, 0}};
    Json images = Json::array();
    bool ok = true;
    for (Series s : {Series::X, Series::Y})
      for (int n = 0; n <= (s == Series::X ? c_.n_max : c_.m_max); ++n) {
        Json row{{"input", "1/(x - " + std::string(s == Series::X ? "x_" : "y_") + std::to_string(n) + ")"}};
        try {
          row["image"] = pf_json(partial_fractions_x(apply(W, elementary(g, s, n)), g, opts));
        } catch (const Error& e) {
          row["error"] = e.what();
          ok = false;
        }
        images.push_back(std::move(row));
      }
    out.push_back({"apply", ok ? "pass" : "fail", {{"operator", W.label}, {"images", images}}});
  }

  void raising(std::vector<Check>& out) {
    const GridParams g = grid();
    const RaisingOptions opts{c_.seed, true};
    if (c_.parametrization == "rho") {
      const auto rep = verify_raising(config_operator(), g, RaisingMode::WAW, c_.n_max, 0, opts);
      out.push_back({"raising_w_aw", rep.pass() ? "pass" : "fail", raising_json(rep)});
    } else {
      const EtaParams p = config_eta();
      const auto W = build_W2(g, p);
      const auto rep = verify_raising(W, g, RaisingMode::TwoSeries, c_.n_max, c_.m_max, opts);
      bool ok = rep.pass();
      Json xi = Json::array();
      for (const auto& e : rep.entries) {
        if (!e.single || !e.image) continue;
        const int n = e.series == Series::X ? e.n : e.m;
        if (n < 1) {
          const bool zero = xi_hat_closed_form(g, p, 0, e.series)[2].is_zero() && e.image->residue({e.series, -1}).is_zero();
          ok = ok && zero;
          xi.push_back({{"series", std::string(to_string(e.series))}, {"n", 0}, {"xi_hat_1_zero", zero}});
          continue;
        }
        const auto cmp = compare_xi_hat(g, p, n, e.series, *e.image);
        ok = ok && cmp.match;
        Json rows = Json::array();
        for (const auto& r : cmp.rows)
          rows.push_back({{"key", r.key.to_string()}, {"closed_form", r.expected.to_string()}, {"residue", r.actual.to_string()}});
        xi.push_back({{"series", std::string(to_string(e.series))}, {"n", n}, {"match", cmp.match}, {"rows", rows}});
      }
      Json payload = raising_json(rep);
      payload["xi_hat"] = xi;
      out.push_back({"raising_two_series", ok ? "pass" : "fail", payload});
    }

    // one-series operator on the same s and alpha, beta = s
    GridParams g1 = g;
    g1.b = g.s;
    g1.e.reset();
    g1.kind = GridKind::OneSeries;
    if (!degeneracy(g1).empty()) {
      out.push_back({"raising_one_series", "fail", {{"error", "one-series grid degenerate: " + degeneracy(g1)}}});
      return;
    }
    std::mt19937_64 rng(c_.seed + 1);
    EtaParams p1 = random_eta(rng, g1, Which::W1);
    p1.c0 = c_.c0;
    const auto rep1 = verify_raising(build_W1(g1, p1), g1, RaisingMode::OneSeries, c_.n_max, 0, opts);
    out.push_back({"raising_one_series", rep1.pass() ? "pass" : "fail", raising_json(rep1)});
  }

  void identities(std::vector<Check>& out) {
    // configured operator: W_AW dependencies (and the two extra conditions for W2)
    {
      const GridParams g = grid();
      WAWCoefficients k;
      if (c_.parametrization == "rho") {
        k.rho = *c_.rho;
        k.c = *c_.c;
      } else {
        k = extract_waw_coefficients(build_W2(g, config_eta()), g);
      }
      Json rel = Json::array();
      bool ok = true;
      for (const auto& r : waw_relations(g, k)) {
        rel.push_back({{"name", r.name}, {"expected", r.expected.to_string()}, {"actual", r.actual.to_string()},
                       {"applicable", r.applicable}, {"holds", r.holds()}});
        ok = ok && r.holds();
      }
      Json payload{{"relations", rel}};
      if (c_.parametrization != "rho") {
        const auto cond = w2_q10_conditions(k, g);
        payload["q10_conditions"] = {cond[0].to_string(), cond[1].to_string()};
        ok = ok && cond[0].is_zero() && cond[1].is_zero();
      }
      out.push_back({"config_relations", ok ? "pass" : "fail", payload});
    }

    // seeded random points: generic construction, dependencies, y-actions
    ParamSampler ps(c_.seed);
    Json gen = Json::array(), ya = Json::array();
    bool gen_ok = true, ya_ok = true;
    for (int i = 0; i < c_.points; ++i) {
      const GridParams g = ps.grid(3);
      std::array<PartialFractionForm, 3> r;
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k <= j + 1; ++k) r[j].terms[{Series::X, k}] = ps.any();
        r[j].terms[{Series::Y, 0}] = ps.any();
      }
      const auto b = construct_generic_W(g, r[0], r[1], r[2]);
      bool holds = b.issues.empty();
      Json rel = Json::array();
      if (holds) {
        for (const auto& x : waw_relations(g, extract_waw_coefficients(b.W, g))) {
          holds = holds && x.holds();
          if (!x.holds()) rel.push_back(x.name);
        }
      }
      gen_ok = gen_ok && holds;
      gen.push_back({{"grid", grid_text(g)}, {"issues", b.issues}, {"failed_relations", rel}, {"pass", holds}});

      std::array<Rational, 10> rho;
      for (auto& v : rho) v = ps.any();
      rho[0] = ps.nonzero();
      const auto Waw = build_W_AW(g, complete_waw(g, rho, ps.any(), ps.any()));
      const auto act = waw_y_actions(Waw, g);
      ya_ok = ya_ok && act.issues.empty();
      ya.push_back({{"grid", grid_text(g)}, {"y0_image", pf_json(act.y0)}, {"y1_image", pf_json(act.y1)}, {"issues", act.issues}});
    }
    out.push_back({"generic_construction", gen_ok ? "pass" : "fail", {{"points", gen}}});
    out.push_back({"waw_y_actions", ya_ok ? "pass" : "fail", {{"points", ya}}});

    // eta / epsilon forms of W1 under the eta_0 pin
    Json eq = Json::array();
    bool eq_ok = true;
    for (int i = 0; i < c_.points;) {
      const Rational s = ps.nonzero(5);
      if (abs(s) == Rational(1)) continue;
      const auto e = ps.epsilon_roots();
      GridParams g{s, s * product(e), s, std::nullopt, 2, GridKind::OneSeries};
      if (!degeneracy(g).empty()) continue;
      const Rational c0 = ps.any();
      const auto We = build_W1(g, EpsilonParams{e, c0, Rational(1)});
      const auto Wn = build_W1(g, EtaParams{eta_from_epsilon(s, e, w1_eta0_pin(s)), c0, Which::W1});
      const bool same = We.A1 == Wn.A1 && We.A2 == Wn.A2 && We.A0 == Wn.A0;
      eq_ok = eq_ok && same;
      eq.push_back({{"s", s.to_string()}, {"eta0_pin", w1_eta0_pin(s).to_string()}, {"equal", same}});
      ++i;
    }
    out.push_back({"eta_epsilon_equivalence", eq_ok ? "pass" : "fail", {{"eta0_pin", "-q^(-3/2)"}, {"points", eq}}});
  }

  std::vector<std::pair<GridParams, EpsilonParams>> epsilon_points() {
    std::vector<std::pair<GridParams, EpsilonParams>> pts;
    if (c_.grid.e) pts.emplace_back(grid(), EpsilonParams{*c_.grid.e, c_.c0, Rational(1)});
    ParamSampler ps(c_.seed);
    while (static_cast<int>(pts.size()) < c_.points + (c_.grid.e ? 1 : 0)) {
      const GridParams g = ps.epsilon_grid(2);
      pts.emplace_back(g, EpsilonParams{*g.e, ps.any(), Rational(1)});
    }
    return pts;
  }

  void gauge(std::vector<Check>& out) {
    Json pts = Json::array();
    bool ok = true;
    for (const auto& [g, p] : epsilon_points()) {
      const auto rep = verify_takemura_coincidence(g, p);
      ok = ok && rep.pass();
      const auto c = epsilon_product_coefficients(g.s, p);
      pts.push_back({{"grid", grid_text(g)},
                     {"pass", rep.pass()},
                     {"diffs", diffs_json(rep.diffs)},
                     {"c4", c.c4.to_string()},
                     {"c5", c.c5.to_string()},
                     {"A1", rep.route_b.A1.to_string()}});
    }
    out.push_back({"takemura_coincidence", ok ? "pass" : "fail", {{"points", pts}}});
  }

  void w2w1(std::vector<Check>& out) {
    Json pts = Json::array();
    std::optional<std::string> pinned;
    bool ok = true;
    for (const auto& [g, p] : epsilon_points()) {
      if (p.e[7] * p.e[7] == Rational(1)) continue;  // the substitution is trivial there
      const auto rep = verify_w2_w1_relation(g, p);
      Json res = Json::array();
      int passing = 0;
      for (const auto& r : rep.results) {
        passing += r.pass();
        Json d = Json::array();
        for (const auto& x : r.diffs) d.push_back(x.component);
        res.push_back({{"interpretation", r.interp.id()}, {"pass", r.pass()}, {"differs_in", d}});
      }
      const auto win = rep.passing();
      if (passing != 1 || !win || (pinned && *pinned != win->id())) ok = false;
      if (win && !pinned) pinned = win->id();
      pts.push_back({{"s", g.s.to_string()}, {"alpha2", rep.alpha2.to_string()}, {"beta2", rep.beta2.to_string()},
                     {"epsilon8", rep.epsilon8.to_string()}, {"interpretations", res}});
    }
    Json payload{{"resolved", pinned ? *pinned : std::string("none")}, {"points", pts}};
    out.push_back({"w2_w1_relation", ok && pinned ? "resolved-interpretation" : "fail", payload});
  }

  void elliptic(std::vector<Check>& out) {
    TakemuraFixture f;
    f.s = c_.grid.s;
    f.t = c_.t;
    if (c_.grid.e) f.e = *c_.grid.e;
    f.p_list = c_.p_list;
    f.z_list = c_.z_list;
    f.precision = c_.precision;
    const GridParams g{f.s, Rational(1), Rational(1), std::nullopt, 1, GridKind::TwoSeries};
    const auto rep = limit_check_takemura(f, takemura_direct(g, EpsilonParams{f.e, Rational(0), Rational(1)}));
    bool ok = rep.pass();
    if (f.p_list.size() >= 2)
      for (const char* n : {"A+", "A0"}) ok = ok && rep.get(n).order >= 0.8 && rep.get(n).order <= 1.2;
    out.push_back({"limit_elliptic", ok ? "pass" : "fail", convergence_json(rep)});
  }

  void classical(std::vector<Check>& out) {
    ClassicalFixture f;
    f.s = c_.grid.s;
    f.t = c_.t;
    f.p_list = c_.classical_p_list;
    f.z_list = c_.z_list;
    f.precision = c_.precision;
    const auto rep = limit_check_classical(f);
    out.push_back({"limit_classical", rep.pass() ? "pass" : "fail", convergence_json(rep)});
  }

  const RunConfig& c_;
  std::optional<EtaParams> eta_;
  Json timing_;
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

RunResult run(const RunConfig& c) {
  RunResult r;
  Runner runner(c);
  Json checks = runner.run_all(r.exit_code);
  r.report["tool"] = {{"name", "qheun"}, {"version", kToolVersion}};
  r.report["config"] = to_json(c);
  r.report["checks"] = std::move(checks);
  r.report["timing"] = {{"generated_at", utc_now()}, {"seconds", runner.timing()}};
  return r;
}

Json report_body(const Json& report) {
  Json body = report;
  body.erase("timing");
  return body;
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::InvalidArgument, "write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Raising-operator verification on Askey-Wilson grids"};
  app.require_subcommand(1);
  std::string config_path, mode_list, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> precision;
  std::optional<int> n_max, m_max;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--mode", mode_list, "comma-separated modes, overriding the subcommand");
  app.add_option("--out", out_path, "report path");
  app.add_option("--seed", seed, "seed for random parameter points");
  app.add_option("--precision", precision, "working precision in bits");
  app.add_option("--n-max", n_max, "highest x index");
  app.add_option("--m-max", m_max, "highest y index");
  const std::vector<std::pair<std::string, std::vector<std::string>>> subcommands = {
      {"construct", {"construct"}},
      {"apply", {"apply"}},
      {"verify-raising", {"raising"}},
      {"verify-identities", {"identities"}},
      {"verify-gauge", {"gauge"}},
      {"verify-w2w1", {"w2w1"}},
      {"limit-elliptic", {"elliptic"}},
      {"limit-classical", {"classical"}},
      {"all", all_modes()},
  };
  for (const auto& [name, modes] : subcommands) app.add_subcommand(name, "run " + name)->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    RunConfig c = parse_config(config_path);
    for (const auto& [name, modes] : subcommands)
      if (app.got_subcommand(name)) c.modes = modes;
    if (!mode_list.empty()) {
      c.modes.clear();
      std::stringstream ss(mode_list);
      for (std::string m; std::getline(ss, m, ',');) c.modes.push_back(m);
    }
    if (seed) c.seed = *seed;
    if (precision) c.precision = *precision;
    if (n_max) c.n_max = *n_max;
    if (m_max) c.m_max = *m_max;
    if (!out_path.empty()) c.out = out_path;
    validate_config(c);

    const RunResult r = run(c);
    write_atomically(c.out, r.report.dump(2) + "\n");
    for (const auto& ch : r.report["checks"])
      std::cout << ch["status"].get<std::string>() << "  " << ch["name"].get<std::string>() << "\n";
    return r.exit_code;
  } catch (const Error& e) {
    std::cerr << "qheun: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::InvalidParameters:
      case ErrorKind::DegenerateGrid:
        return kInvalidInput;
      default:
        return kInternalError;
    }
  } catch (const std::exception& e) {
    std::cerr << "qheun: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace qheun::cli
