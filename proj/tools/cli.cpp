#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "moutard/catalog.hpp"
#include "moutard/darboux1d.hpp"
#include "moutard/errors.hpp"
#include "moutard/grid.hpp"
#include "moutard/nv.hpp"
#include "moutard/parse.hpp"
#include "moutard/periodic.hpp"
#include "moutard/serialize.hpp"
#include "moutard/sigma.hpp"

namespace moutard::cli {

namespace {

// Bad user input that is not a CLI11 parse error (unknown example, field...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Checks {
  Json list = Json::array();
  bool ok = true;

  void exact(const std::string& name, const RatFun& residual) {
    const bool passed = residual.is_zero();
    add(name, "exact-symbolic", passed,
        passed ? Json("0 (exact)") : Json("nonzero numerator, leading term " + residual.num().leading_term_string()));
  }
  void exact(const std::string& name, bool passed, const std::string& failure) {
    add(name, "exact-symbolic", passed, passed ? Json("0 (exact)") : Json(failure));
  }
  void numeric(const std::string& name, bool passed, double residual) { add(name, "numeric", passed, residual); }

 private:
  void add(const std::string& name, const char* kind, bool passed, Json residual) {
    Json c;
    c["name"] = name;
    c["kind"] = kind;
    c["passed"] = passed;
    c["residual"] = std::move(residual);
    list.push_back(std::move(c));
    ok = ok && passed;
  }
};

struct Common {
  std::string out_path;
};

struct PairArgs {
  std::string example;
  std::string p1, p2, C;
};

struct Pair {
  std::string name;  // example name or "custom"
  TriPoly p1, p2;
  Rational C;
};

void add_pair_options(CLI::App* sub, PairArgs& a) {
  sub->add_option("--example", a.example, "Built-in fixture");
  sub->add_option("--p1", a.p1, "First holomorphic seed, e.g. \"i*z^2\"");
  sub->add_option("--p2", a.p2, "Second holomorphic seed");
  sub->add_option("--C", a.C, "Integration constant (rational, e.g. -20 or 3/2)");
}

Pair resolve_pair(const PairArgs& a) {
  if (!a.example.empty()) {
    if (!a.p1.empty() || !a.p2.empty()) throw UsageError("--example cannot be combined with --p1/--p2");
    Pair p;
    p.name = a.example;
    if (a.example == "blowup") {
      const auto& b = catalog::blowup();
      p.p1 = parse_tripoly(b.p1), p.p2 = parse_tripoly(b.p2), p.C = b.C;
    } else if (a.example == "ord2" || a.example == "ord3") {
      const auto& e = catalog::static_example(a.example);
      p.p1 = parse_tripoly(e.p1), p.p2 = parse_tripoly(e.p2), p.C = e.C;
    } else {
      throw UsageError("unknown example '" + a.example + "' (expected ord2, ord3 or blowup)");
    }
    if (!a.C.empty()) p.C = parse_rational(a.C);
    return p;
  }
  if (a.p1.empty() || a.p2.empty()) throw UsageError("give --example or both --p1 and --p2");
  return {"custom", parse_tripoly(a.p1), parse_tripoly(a.p2), a.C.empty() ? Rational(0) : parse_rational(a.C)};
}

Json pair_json(const Pair& p) {
  Json j;
  j["example"] = p.name;
  j["p1"] = p.p1.to_string();
  j["p2"] = p.p2.to_string();
  j["C"] = rational_to_string(p.C);
  return j;
}

void emit(const Json& report, const Common& c, std::ostream& out) {
  const std::string text = dump_report(report);
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
  f << text;
}

Json nonvanishing_json(const NonvanishingReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["certified"] = r.certified;
  j["sign"] = r.sign;
  j["grid_min"] = r.grid_min;
  j["argmin"] = {r.argmin_x, r.argmin_y};
  j["radius"] = r.radius;
  return j;
}

// ---- construct / verify --------------------------------------------------

Json static_checks(const Pair& pair, const MoutardResult& r, Checks& checks) {
  Json extra;
  checks.exact("kernel psi1", kernel_residual(r.u, r.psi1));
  checks.exact("kernel psi2", kernel_residual(r.u, r.psi2));
  const catalog::StaticExample* ex =
      (pair.name == "ord2" || pair.name == "ord3") ? &catalog::static_example(pair.name) : nullptr;
  if (ex) {
    const RatFun du = r.u - ex->reference_u();
    checks.exact("u matches reference", du);
    auto scalar_check = [&](const std::string& name, const RatFun& got, const RatFun& reference) {
      const auto c = proportional(got, reference);
      checks.exact(name, c && !c->is_zero(), "not a constant multiple of the reference form");
      extra[name + " scalar"] = c ? c->to_string() : "none";
    };
    scalar_check("psi1 matches reference", r.psi1, ex->reference_psi1());
    scalar_check("psi2 matches reference", r.psi2, ex->reference_psi2());
  }
  const double du = estimate_decay(r.u, 1e2, 1e5, 8);
  const double d1 = estimate_decay(r.psi1, 1e2, 1e5, 8);
  const double d2 = estimate_decay(r.psi2, 1e2, 1e5, 8);
  extra["decay"] = {{"u", du}, {"psi1", d1}, {"psi2", d2}};
  if (ex) {
    checks.numeric("decay u", std::abs(du - ex->u_decay) <= 0.1, std::abs(du - ex->u_decay));
    checks.numeric("decay psi1", std::abs(d1 - ex->psi_decay) <= 0.05, std::abs(d1 - ex->psi_decay));
    checks.numeric("decay psi2", std::abs(d2 - ex->psi_decay) <= 0.05, std::abs(d2 - ex->psi_decay));
  }
  const NonvanishingReport nv = certify_nonvanishing(r.tau);
  checks.numeric("tau nonvanishing", nv.certified, nv.grid_min);
  extra["nonvanishing"] = nonvanishing_json(nv);
  return extra;
}

int cmd_construct(const PairArgs& a, bool verify, bool dump, bool verify_only, const Common& c, std::ostream& out) {
  const Pair pair = resolve_pair(a);
  const MoutardResult r = two_step_construct(HarmonicSeed(pair.p1), HarmonicSeed(pair.p2), pair.C);
  Json rep;
  rep["command"] = verify_only ? "verify" : "construct";
  rep["input"] = pair_json(pair);
  if (!verify_only) {
    rep["tau"] = r.tau.to_string();
    rep["u"] = r.u.to_string();
    rep["psi1"] = r.psi1.to_string();
    rep["psi2"] = r.psi2.to_string();
    if (dump) {
      rep["symbolic"] = {{"tau", to_json(r.tau)}, {"u", to_json(r.u)}, {"psi1", to_json(r.psi1)},
                         {"psi2", to_json(r.psi2)}};
    }
  }
  Checks checks;
  if (verify || verify_only) {
    Json extra = static_checks(pair, r, checks);
    for (auto& [k, v] : extra.items()) rep[k] = v;
    rep["checks"] = checks.list;
    rep["passed"] = checks.ok;
  }
  emit(rep, c, out);
  return checks.ok ? 0 : 1;
}

// ---- evolve / blowup -----------------------------------------------------

TriPoly build_phi(const Pair& pair) {
  return extended_tau(flow_solve(HarmonicSeed(pair.p1)), flow_solve(HarmonicSeed(pair.p2)), pair.C);
}

int cmd_evolve(const PairArgs& a, bool dump, const Common& c, std::ostream& out) {
  const Pair pair = resolve_pair(a);
  const TriPoly phi = build_phi(pair);
  Json rep;
  rep["command"] = "evolve";
  rep["input"] = pair_json(pair);
  rep["phi"] = phi.to_string();
  Checks checks;
  std::optional<NVSolution> sol;
  try {
    sol = nv_fields(phi);
    checks.exact("dbar V = d U", true, "");
  } catch (const std::logic_error& e) {
    checks.exact("dbar V = d U", false, e.what());
  }
  if (sol) {
    rep["U"] = sol->U.to_string();
    rep["V"] = sol->V.to_string();
    checks.exact("nv residual", nv_residual(*sol));
    rep["stationary"] = sol->U.derive(Var::t).is_zero();
    if (pair.name == "blowup") checks.exact("U matches reference", sol->U - catalog::blowup().reference_U());
    if (dump) rep["symbolic"] = {{"phi", to_json(phi)}, {"U", to_json(sol->U)}, {"V", to_json(sol->V)}};
  }
  rep["checks"] = checks.list;
  rep["passed"] = checks.ok;
  emit(rep, c, out);
  return checks.ok ? 0 : 1;
}

int cmd_blowup(PairArgs a, bool reproduce, const Common& c, std::ostream& out) {
  if (reproduce) {
    if (!a.example.empty() && a.example != "blowup") throw UsageError("--reproduce uses the blowup fixture");
    a.example = "blowup";
  }
  const Pair pair = resolve_pair(a);
  const TriPoly phi = build_phi(pair);
  const BlowupResult b = blowup_time(phi);
  Json rep;
  rep["command"] = "blowup";
  rep["input"] = pair_json(pair);
  rep["phi"] = phi.to_string();
  rep["t_star"] = b.t_star;
  rep["t_star_exact"] = b.t_star_exact ? Json(rational_to_string(*b.t_star_exact)) : Json(nullptr);
  rep["g_min"] = b.g_min;
  rep["g_min_exact"] = b.g_min_exact ? Json(rational_to_string(*b.g_min_exact)) : Json(nullptr);
  rep["speed"] = rational_to_string(b.speed);
  rep["sign"] = b.sign;
  Json w = Json::array();
  for (const auto& [x, y] : b.witnesses) w.push_back({x, y});
  rep["witnesses"] = w;
  Checks checks;
  if (pair.name == "blowup") {
    const NVSolution sol = nv_fields(phi);
    const bool match = equal(sol.U, catalog::blowup().reference_U());
    rep["matches_reference_U"] = match;
    checks.exact("U matches reference", match, "constructed U differs from the reference H1/H2");
    checks.exact("nv residual", nv_residual(sol));
    const RatFun u0(sol.U.num().at_time(0), sol.U.den().at_time(0));
    const double decay = estimate_decay(u0, 1e2, 1e5, 8);
    rep["decay_U_t0"] = decay;
    checks.numeric("decay U(t=0)", std::abs(decay + 3.0) <= 0.05, std::abs(decay + 3.0));
  }
  rep["checks"] = checks.list;
  rep["passed"] = checks.ok;
  emit(rep, c, out);
  return checks.ok ? 0 : 1;
}

// ---- sigma ---------------------------------------------------------------

int cmd_sigma(const std::string& poly, int N, const std::string& t_text, const std::vector<double>& times,
              const Common& c, std::ostream& out) {
  const TriPoly p = parse_tripoly(poly);
  if (p.depends_on(Var::zbar) || p.depends_on(Var::t)) throw UsageError("--poly must be a polynomial in z alone");
  const unsigned n = N > 0 ? static_cast<unsigned>(N) : p.degree(Var::z);
  if (n == 0) throw UsageError("--poly must have positive degree");
  const SigmaState s0 = sigma_from_polynomial(p, n);
  const Rational t = parse_rational(t_text);
  const SigmaState st = sigma_evolve(s0, t);
  Json rep;
  rep["command"] = "sigma";
  rep["N"] = n;
  rep["t"] = rational_to_string(t);
  Json a0 = Json::array(), a1 = Json::array();
  for (const auto& v : s0.sigma) a0.push_back(v.to_string());
  for (const auto& v : st.sigma) a1.push_back(v.to_string());
  rep["sigma_0"] = a0;
  rep["sigma_t"] = a1;
  rep["polynomial_t"] = to_polynomial(st).to_string();
  Checks checks;
  const TriPoly flowed = flow_solve(HarmonicSeed(p)).p().at_time(t);
  checks.exact("agrees with flow_solve", to_polynomial(st) == flowed, "sigma_evolve and flow_solve differ");
  if (!times.empty() && !s0.sigma[0].is_zero()) {
    const RootTrajectory tr = roots_trajectory(s0, times);
    Json steps = Json::array();
    for (std::size_t i = 0; i < times.size(); ++i) {
      Json roots = Json::array();
      for (const auto& z : tr.roots[i]) roots.push_back({z.real(), z.imag()});
      steps.push_back({{"t", times[i]}, {"matched", static_cast<bool>(tr.matched[i])}, {"roots", roots}});
    }
    rep["trajectory"] = steps;
    rep["warnings"] = tr.warnings;
  }
  rep["checks"] = checks.list;
  rep["passed"] = checks.ok;
  emit(rep, c, out);
  return checks.ok ? 0 : 1;
}

// ---- darboux1d -----------------------------------------------------------

int cmd_darboux(int n, const std::string& tau2_text, const std::string& tau3_text, const Common& c,
                std::ostream& out) {
  const Rational tau2 = parse_rational(tau2_text), tau3 = parse_rational(tau3_text);
  const Poly1D theta = adler_moser_theta(n, tau2, tau3);
  const RatFun1D u = adler_moser_potential(n, tau2, tau3);
  Json rep;
  rep["command"] = "darboux1d";
  rep["n"] = n;
  rep["tau2"] = rational_to_string(tau2);
  rep["tau3"] = rational_to_string(tau3);
  rep["theta"] = theta.to_string();
  rep["u"] = u.to_string();
  Checks checks;
  const RatFun1D x2(Poly1D(1), Poly1D::x() * Poly1D::x());
  const RatFun1D at0 = adler_moser_potential(n);
  checks.exact("u_n at tau = 0 is n(n+1)/x^2", at0 == RatFun1D(n * (n + 1)) * x2, "got " + at0.to_string());
  checks.exact("darboux(0, x) = 2/x^2", darboux_transform(RatFun1D(0), RatFun1D(Poly1D::x())) == RatFun1D(2) * x2,
               "transform of u = 0 by omega = x differs from 2/x^2");
  if (n < 3) {
    const RatFun1D phi(adler_moser_theta(n + 1, tau2, tau3), theta);
    rep["phi"] = phi.to_string();
    const RatFun1D r = schrodinger_1d(u, phi);
    checks.exact("(-d^2/dx^2 + u_n) phi_n = 0", r.is_zero(), "residual " + r.to_string());
  }
  rep["checks"] = checks.list;
  rep["passed"] = checks.ok;
  emit(rep, c, out);
  return checks.ok ? 0 : 1;
}

// ---- periodic ------------------------------------------------------------

int cmd_periodic(const PeriodicParams& p, double h, int res, const Common& c, std::ostream& out) {
  p.check();
  const double pi = std::numbers::pi;
  Json rep;
  rep["command"] = "periodic";
  rep["params"] = {{"a", p.a}, {"b", p.b}, {"k", p.k}, {"C", p.C}};
  const double tau_min = periodic_tau_min(p, {-pi, pi, -pi, pi, 401});
  rep["tau_min"] = tau_min;
  Checks checks;
  checks.numeric("tau_per nonvanishing on [-pi,pi]^2", tau_min > 0.0, tau_min);
  try {
    rep["theta1(pi/2,0)"] = periodic_theta(p, pi / (2 * p.k), 0.0);
    rep["potential(pi/2,0)"] = periodic_potential(p, pi / (2 * p.k), 0.0);
  } catch (const PoleError& e) {
    rep["sample_error"] = e.what();
  }
  const Lattice grid{0.3, pi / p.k - 0.3, 0.3, pi / p.k - 0.3, res};
  const double r1 = fd_kernel_residual(p, grid, h);
  const double r2 = fd_kernel_residual(p, grid, h / 2);
  rep["fd_residual"] = {{"h", h}, {"residual_h", r1}, {"residual_h_over_2", r2}, {"ratio", r1 / r2}};
  checks.numeric("fd kernel residual", r1 <= 1e-4, r1);
  checks.numeric("fd residual second order", r1 / r2 >= 3.5, r1 / r2);
  for (const auto& [name, pq] : {std::pair{"basis (k,0)", std::pair{p.k, 0.0}}, {"basis (0,k)", {0.0, p.k}}}) {
    auto psi = [&](double x, double y) { return periodic_basis_member(p, pq.first, pq.second, x, y); };
    auto u = [&](double x, double y) { return periodic_potential(p, x, y); };
    const double r = fd_residual(psi, u, {0.4, 1.2, 0.4, 1.2, 9}, h);
    checks.numeric(std::string(name) + " fd residual", r <= 1e-4, r);
  }
  rep["checks"] = checks.list;
  rep["passed"] = checks.ok;
  emit(rep, c, out);
  return checks.ok ? 0 : 1;
}

// ---- export-grid ---------------------------------------------------------

struct GridArgs {
  std::string field = "u";
  std::vector<double> window{-5, 5, -5, 5};
  int res = 200;
  double t = 0.0;
  bool allow_poles = false;
  bool with_t = false;
};

// Marks lattice points next to a sign change of `den` (a pole curve passing
// between samples). Returns the flagged indices.
std::vector<std::size_t> pole_cells(const std::function<double(double, double)>& den, const GridReport& g) {
  std::vector<double> v(static_cast<std::size_t>(g.nx) * g.ny);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) v[static_cast<std::size_t>(j) * g.nx + i] = den(g.x_at(i), g.y_at(j));
  }
  std::vector<std::size_t> out;
  auto edge = [&](std::size_t a, std::size_t b) {
    if ((v[a] < 0.0 && v[b] > 0.0) || (v[a] > 0.0 && v[b] < 0.0)) out.push_back(std::abs(v[a]) < std::abs(v[b]) ? a : b);
  };
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * g.nx + i;
      if (i + 1 < g.nx) edge(k, k + 1);
      if (j + 1 < g.ny) edge(k, k + g.nx);
    }
  }
  return out;
}

int cmd_export(const PairArgs& a, PeriodicParams pp, const GridArgs& ga, const Common& c, std::ostream& out) {
  if (ga.window.size() != 4) throw UsageError("--window takes x_min x_max y_min y_max");
  GridReport g;
  g.field = ga.field;
  g.x_min = ga.window[0], g.x_max = ga.window[1], g.y_min = ga.window[2], g.y_max = ga.window[3];
  g.nx = g.ny = ga.res;
  g.t = ga.t;
  const double t = ga.t;

  std::function<double(double, double)> f;
  std::vector<std::function<double(double, double)>> dens;
  RatFun field;
  if (a.example == "periodic") {
    if (!a.C.empty()) pp.C = parse_rational(a.C).get_d();
    pp.check();
    g.metadata = {{"example", "periodic"}, {"a", pp.a}, {"b", pp.b}, {"k", pp.k}, {"C", pp.C}};
    auto tau = [pp](double x, double y) { return periodic_tau(pp, x, y).v; };
    auto sin_kx = [pp](double x, double) { return std::sin(pp.k * x); };
    if (ga.field == "u") {
      f = [pp](double x, double y) { return periodic_potential(pp, x, y); };
      dens.push_back(tau);
    } else if (ga.field == "psi1") {
      f = [pp](double x, double y) { return periodic_psi1(pp, x, y); };
      dens.push_back(tau);
    } else if (ga.field == "tau") {
      f = tau;
    } else if (ga.field == "theta1") {
      f = [pp](double x, double y) { return periodic_theta(pp, x, y); };
      dens.push_back(sin_kx);
    } else if (ga.field == "u1") {
      f = [pp](double x, double) { return first_step_potential(pp, x); };
      dens.push_back(sin_kx);
    } else {
      throw UsageError("periodic fields: u, psi1, tau, theta1, u1");
    }
  } else {
    const Pair pair = resolve_pair(a);
    g.metadata = pair_json(pair);
    const bool evolving = pair.name == "blowup" || ga.field == "U" || ga.field == "V" || ga.field == "phi";
    if (evolving) {
      const TriPoly phi = build_phi(pair);
      if (ga.field == "phi") {
        field = RatFun(phi);
      } else {
        const NVSolution sol = nv_fields(phi);
        if (ga.field == "U" || ga.field == "u") {
          field = sol.U;
        } else if (ga.field == "V") {
          field = sol.V;
        } else {
          throw UsageError("evolving fields: U, V, phi");
        }
      }
    } else {
      const MoutardResult r = two_step_construct(HarmonicSeed(pair.p1), HarmonicSeed(pair.p2), pair.C);
      if (ga.field == "u") {
        field = r.u;
      } else if (ga.field == "psi1") {
        field = r.psi1;
      } else if (ga.field == "psi2") {
        field = r.psi2;
      } else if (ga.field == "tau") {
        field = RatFun(r.tau);
      } else {
        throw UsageError("static fields: u, psi1, psi2, tau");
      }
    }
    f = [field, t](double x, double y) { return evaluate_at(field, x, y, t).real(); };
    for (const auto& fac : field.factors()) {
      dens.push_back([base = fac.base, t](double x, double y) { return base.evaluate_xy(x, y, t).real(); });
    }
  }
  g.metadata["field"] = ga.field;
  g.metadata["t"] = t;

  std::vector<std::size_t> flagged;
  for (const auto& d : dens) {
    const auto cells = pole_cells(d, g);
    flagged.insert(flagged.end(), cells.begin(), cells.end());
  }
  if (!flagged.empty() && !ga.allow_poles) {
    const std::size_t k = flagged.front();
    const int i = static_cast<int>(k % g.nx), j = static_cast<int>(k / g.nx);
    throw PoleError("field " + ga.field + " has a pole curve crossing the window near (" + shortest(g.x_at(i)) + ", " +
                    shortest(g.y_at(j)) + ")");
  }
  g = export_grid(f, std::move(g), ga.allow_poles);
  for (std::size_t k : flagged) g.values[k] = std::nan("");

  if (c.out_path.empty()) {
    write_csv(g, out, ga.with_t);
  } else {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + c.out_path);
    write_csv(g, file, ga.with_t);
  }
  return 0;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moutard-transformation laboratory: exact constructions, NV evolution and numeric checks"};
  app.require_subcommand(1);
  Common common;
  PairArgs pair;
  bool verify = false, dump = false, reproduce = false;

  auto add_out = [&](CLI::App* s) { s->add_option("--out", common.out_path, "Write the report here"); };

  auto* construct = app.add_subcommand("construct", "Two-step Moutard construction from two holomorphic seeds");
  add_pair_options(construct, pair);
  construct->add_flag("--verify", verify, "Run exact and numeric checks");
  construct->add_flag("--dump-symbolic", dump, "Include exact term lists");
  add_out(construct);

  auto* verify_cmd = app.add_subcommand("verify", "Checks only: kernel identities, reference forms, decay");
  add_pair_options(verify_cmd, pair);
  add_out(verify_cmd);

  auto* evolve = app.add_subcommand("evolve", "Time-extended construction and exact NV residual");
  add_pair_options(evolve, pair);
  evolve->add_flag("--dump-symbolic", dump, "Include exact term lists");
  add_out(evolve);

  auto* blowup = app.add_subcommand("blowup", "Blow-up time of an NV solution");
  add_pair_options(blowup, pair);
  blowup->add_flag("--reproduce", reproduce, "Use the reference blow-up fixture");
  add_out(blowup);

  std::string poly = "z^3", sigma_t = "1";
  int sigma_n = 0;
  std::vector<double> times;
  auto* sigma = app.add_subcommand("sigma", "Exact sigma-flow and root trajectories");
  sigma->add_option("--poly", poly, "Initial polynomial in z");
  sigma->add_option("--N", sigma_n, "Degree N (default: degree of --poly)");
  sigma->add_option("--t", sigma_t, "Exact evolution time");
  sigma->add_option("--times", times, "Times for the root trajectory")->delimiter(',');
  add_out(sigma);

  int n = 2;
  std::string tau2 = "0", tau3 = "0";
  auto* darboux = app.add_subcommand("darboux1d", "Adler-Moser data and 1-D Darboux checks");
  darboux->add_option("--n", n, "Index n");
  darboux->add_option("--tau2", tau2, "Parameter tau2 (rational)");
  darboux->add_option("--tau3", tau3, "Parameter tau3 (rational)");
  add_out(darboux);

  PeriodicParams pp{0.0, 1.0, 1.0, 3.0};
  double h = 1e-3;
  int lattice = 41;
  auto add_periodic = [&](CLI::App* s) {
    s->add_option("--a", pp.a, "a in sin(ax + by)");
    s->add_option("--b", pp.b, "b in sin(ax + by)");
    s->add_option("--k", pp.k, "k in sin(kx)");
  };
  auto* periodic = app.add_subcommand("periodic", "Trigonometric two-step example and finite-difference checks");
  add_periodic(periodic);
  periodic->add_option("--C", pp.C, "Integration constant");
  periodic->add_option("--step", h, "Finite-difference step");
  periodic->add_option("--lattice", lattice, "Check lattice size per side");
  add_out(periodic);

  GridArgs ga;
  auto* grid = app.add_subcommand("export-grid", "Sample a field on a lattice and write CSV");
  add_pair_options(grid, pair);
  add_periodic(grid);
  grid->add_option("--field", ga.field, "Field name");
  grid->add_option("--window", ga.window, "x_min x_max y_min y_max")->expected(4)->allow_extra_args();
  grid->add_option("--res", ga.res, "Points per side")->check(CLI::PositiveNumber);
  grid->add_option("--t", ga.t, "Time");
  grid->add_flag("--allow-poles", ga.allow_poles, "Write NaN at poles instead of failing");
  grid->add_flag("--with-t", ga.with_t, "Add a t column");
  add_out(grid);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto report_error = [&](const std::string& kind, const std::string& msg) {
    err << "moutard_lab: " << kind << ": " << msg << "\n";
    try {
      emit(error_json(kind, msg), common, out);
    } catch (const std::exception&) {
      out << dump_report(error_json(kind, msg));
    }
  };

  try {
    if (*construct) return cmd_construct(pair, verify, dump, false, common, out);
    if (*verify_cmd) return cmd_construct(pair, true, false, true, common, out);
    if (*evolve) return cmd_evolve(pair, dump, common, out);
    if (*blowup) return cmd_blowup(pair, reproduce, common, out);
    if (*sigma) return cmd_sigma(poly, sigma_n, sigma_t, times, common, out);
    if (*darboux) return cmd_darboux(n, tau2, tau3, common, out);
    if (*periodic) return cmd_periodic(pp, h, lattice, common, out);
    if (*grid) return cmd_export(pair, pp, ga, common, out);
  } catch (const ParseError& e) {
    report_error(e.kind(), e.what());
    return 2;
  } catch (const UsageError& e) {
    report_error("UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    report_error("InvalidArgument", e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return 1;
  }
  return 2;
}

}  // namespace moutard::cli
