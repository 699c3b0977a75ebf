// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Every subcommand is a thin adapter over the core
// library: values are printed exactly as computed (JSON round-trips doubles,
// CSV uses %.17g). Data goes to stdout, diagnostics to stderr. Exit codes:
// 0 success, 1 domain error or verify failure, 2 argument errors.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbrach/brachistochrone.hpp"
#include "qbrach/classical.hpp"
#include "qbrach/config.hpp"
#include "qbrach/dilation.hpp"
#include "qbrach/error.hpp"
#include "qbrach/linalg.hpp"
#include "qbrach/pt.hpp"
#include "qbrach/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qbrach;

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// parsing

// One complex number: "1.5", "2i", "1+2i", "-1.5-2e-3i", "i", "-i".
Complex parse_complex_term(const std::string& raw) {
  std::string s = raw;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty complex number");

  auto to_double = [](const std::string& txt) {
    if (txt.empty() || txt == "+") return 1.0;
    if (txt == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(txt, &used);
    if (used != txt.size())
      throw std::invalid_argument("bad number '" + txt + "'");
    return v;
  };

  if (s.back() != 'i' && s.back() != 'I') return {to_double(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // split before the sign of the imaginary part (not an exponent sign)
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') &&
        body[k - 1] != 'e' && body[k - 1] != 'E') {
      return {to_double(body.substr(0, k)), to_double(body.substr(k))};
    }
  }
  return {0.0, to_double(body)};
}

// Scalar complex option: also accepts the "re,im" pair form.
Complex parse_complex(const std::string& raw) {
  const auto comma = raw.find(',');
  if (comma != std::string::npos) {
    const std::string re = raw.substr(0, comma);
    const std::string im = raw.substr(comma + 1);
    std::size_t u1 = 0, u2 = 0;
    const double a = std::stod(re, &u1);
    const double b = std::stod(im, &u2);
    if (u1 != re.size() || u2 != im.size())
      throw std::invalid_argument("bad complex pair '" + raw + "'");
    return {a, b};
  }
  return parse_complex_term(raw);
}

// State vector "c0,c1" with each component in re+imi form.
Vector2 parse_state(const std::string& raw) {
  const auto comma = raw.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("state must have two comma-separated components");
  Vector2 v;
  v << parse_complex_term(raw.substr(0, comma)),
      parse_complex_term(raw.substr(comma + 1));
  return v;
}

std::vector<double> parse_grid(const std::string& raw) {
  // "start:stop:step", stop inclusive up to rounding
  const auto c1 = raw.find(':');
  const auto c2 = raw.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid must be start:stop:step");
  const double start = std::stod(raw.substr(0, c1));
  const double stop = std::stod(raw.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(raw.substr(c2 + 1));
  if (!(step > 0.0) || stop < start)
    throw std::invalid_argument("grid must have step > 0 and stop >= start");
  std::vector<double> out;
  for (double x = start; x <= stop + 0.5 * step; x += step)
    out.push_back(x);
  return out;
}

std::vector<double> parse_real_list(const std::string& raw) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    const auto comma = raw.find(',', pos);
    const std::string tok =
        raw.substr(pos, comma == std::string::npos ? raw.size() - pos
                                                   : comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// ---------------------------------------------------------------------------
// emission

json jcomplex(Complex z) { return json::array({z.real(), z.imag()}); }

json jvec2(const Vector2& v) {
  return json::array({jcomplex(v(0)), jcomplex(v(1))});
}

json jvec3(const Vector3c& v) {
  return json::array({jcomplex(v(0)), jcomplex(v(1)), jcomplex(v(2))});
}

template <typename Mat>
json jmat(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(jcomplex(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json make_report(const std::string& command, json inputs) {
  json report;
  report["command"] = command;
  report["config"] = {{"hbar", hbar()}};
  report["inputs"] = std::move(inputs);
  return report;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

void csv_row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    std::printf(i + 1 == values.size() ? "%.17g\n" : "%.17g,", values[i]);
}

// ---------------------------------------------------------------------------
// subcommand state and handlers

struct Cli {
  // global
  double hbar_value = 1.0;
  std::string tolerance_file;
  std::string format = "json";

  // shared option storage
  std::string psi_i_raw = "1,0", psi_f_raw = "0,1", psi_raw = "1,0";
  double omega = 1.0;
  double r = 0.0, s = 1.0, theta = 0.0;
  double omega_ji = 1.0, omega_ki = 3.0;
  double angle_alpha = kPi / 4.0, angle_beta = kPi / 4.0;
  double t = 1.0, t_max = 10.0, dt = 1e-4;
  int steps = 1000, profile_points = 100;
  double energy_re = 1.0;
  std::string x0_raw = "0";
  int branch = 1;
  std::string variant = "unitary";
  std::string eigenvalues_raw;
  std::string alpha_grid = "0:1.5:0.1";
  std::string a_list = "2,10,100";
  std::string mode = "immediate";
  std::uint64_t seed = 0;
  std::string filter;
  bool check = false;
};

int run_optimal_h(const Cli& cli) {
  const Vector2 psi_i = parse_state(cli.psi_i_raw);
  const Vector2 psi_f = parse_state(cli.psi_f_raw);
  const auto sol = optimal_hamiltonian(psi_i, psi_f, cli.omega);

  json report = make_report("optimal-h", {{"psi_i", jvec2(psi_i)},
                                          {"psi_f", jvec2(psi_f)},
                                          {"omega", cli.omega}});
  report["outputs"] = {{"hamiltonian", jmat(sol.hamiltonian)},
                       {"e_plus", jvec2(sol.e_plus)},
                       {"e_minus", jvec2(sol.e_minus)},
                       {"gap", sol.gap},
                       {"min_time", sol.min_time},
                       {"distance", sol.distance}};
  if (cli.check) {
    const Vector2 reached = evolve(sol.hamiltonian, psi_i.normalized(), sol.min_time);
    report["checks"] = {
        {"evolution_fidelity", fidelity(reached, psi_f)},
        {"hermiticity_residual",
         (sol.hamiltonian - sol.hamiltonian.adjoint()).norm()},
        {"trace_abs", std::abs(sol.hamiltonian.trace())},
        {"pass", fidelity(reached, psi_f) >= 1.0 - 1e-10}};
  }
  emit(report);
  return 0;
}

int run_min_time(const Cli& cli) {
  const Vector2 psi_i = parse_state(cli.psi_i_raw);
  const Vector2 psi_f = parse_state(cli.psi_f_raw);
  const double tau = min_time(psi_i, psi_f, cli.omega);
  const double dist = fs_distance(psi_i, psi_f);

  json report = make_report("min-time", {{"psi_i", jvec2(psi_i)},
                                         {"psi_f", jvec2(psi_f)},
                                         {"omega", cli.omega}});
  report["outputs"] = {{"min_time", tau},
                       {"distance", dist},
                       {"distance_times_hbar_over_omega", dist * hbar() / cli.omega}};
  emit(report);
  return 0;
}

int run_three_level(const Cli& cli) {
  const ThreeLevelSpec spec{cli.omega_ji, cli.omega_ki, cli.angle_alpha,
                            cli.angle_beta, 0.0, 0.0};
  const ThreeLevelResult res = three_level_orthogonality(spec);

  json report = make_report("three-level", {{"omega_ji", spec.omega_ji},
                                            {"omega_ki", spec.omega_ki},
                                            {"alpha", spec.alpha},
                                            {"beta", spec.beta}});
  json ratio = nullptr;
  if (res.ratio) ratio = json::array({res.ratio->first, res.ratio->second});
  const double bound =
      res.dispersion > 0.0 ? kPi * hbar() / (2.0 * res.dispersion) : 0.0;
  report["outputs"] = {
      {"feasible", res.feasible},
      {"time", res.time},
      {"ratio_mn", ratio},
      {"scan_min_overlap", res.scan_min_overlap},
      {"dispersion", res.dispersion},
      {"passage_time_bound", bound},
      {"time_over_bound",
       res.feasible && bound > 0.0 ? res.time / bound : 0.0}};
  emit(report);
  return 0;
}

int run_pt_eig(const Cli& cli) {
  const PTParams p{cli.r, cli.s, cli.theta};
  const PTEigensystem sys = pt_eigensystem(p);
  const CPTFrame frame = c_operator(p);
  const double norm_plus =
      std::sqrt(std::real(cpt_inner(sys.v_plus, sys.v_plus, frame)));
  const double norm_minus =
      std::sqrt(std::real(cpt_inner(sys.v_minus, sys.v_minus, frame)));

  json report = make_report(
      "pt-eig", {{"r", p.r}, {"s", p.s}, {"theta", p.theta}});
  report["outputs"] = {{"e_plus", sys.e_plus},
                       {"e_minus", sys.e_minus},
                       {"alpha", sys.alpha},
                       {"omega", p.omega()},
                       {"v_plus", jvec2(sys.v_plus)},
                       {"v_minus", jvec2(sys.v_minus)},
                       {"cpt_norm_plus", norm_plus},
                       {"cpt_norm_minus", norm_minus},
                       {"c_operator", jmat(frame.c)},
                       {"effective_field", jvec3(effective_field(p))}};
  if (cli.check) {
    const Matrix2 hm = p.to_matrix();
    double residual = 0.0;
    residual = std::max(residual,
                        (hm * sys.v_plus - sys.e_plus * sys.v_plus).norm());
    residual = std::max(residual,
                        (hm * sys.v_minus - sys.e_minus * sys.v_minus).norm());
    report["checks"] = {
        {"eigen_residual", residual},
        {"c_squared_residual", (frame.c * frame.c - Matrix2::Identity()).norm()},
        {"ch_commutator", (frame.c * hm - hm * frame.c).norm()},
        {"cpt_commutator",
         (frame.c * frame.p - frame.p * frame.c.conjugate()).norm()}};
  }
  emit(report);
  return 0;
}

int run_pt_evolve(const Cli& cli) {
  const PTParams p{cli.r, cli.s, cli.theta};
  const Vector2 psi0 = parse_state(cli.psi_raw);
  const CPTFrame frame = c_operator(p);

  auto row_of = [&](int k) {
    const double t = cli.t_max * k / std::max(1, cli.steps);
    const Vector2 psi = pt_evolve(p, psi0, t);
    const double cpt2 = std::real(cpt_inner(psi, psi, frame));
    return std::vector<double>{t,           psi(0).real(), psi(0).imag(),
                               psi(1).real(), psi(1).imag(), psi.norm(),
                               cpt2};
  };

  if (cli.format == "csv") {
    std::printf("t,re0,im0,re1,im1,dirac_norm,cpt_norm2\n");
    for (int k = 0; k <= cli.steps; ++k) csv_row(row_of(k));
    return 0;
  }
  json report = make_report("pt-evolve", {{"r", p.r},
                                          {"s", p.s},
                                          {"theta", p.theta},
                                          {"psi", jvec2(psi0)},
                                          {"t_max", cli.t_max},
                                          {"steps", cli.steps}});
  json rows = json::array();
  for (int k = 0; k <= cli.steps; ++k) rows.push_back(row_of(k));
  report["outputs"] = {
      {"columns", {"t", "re0", "im0", "re1", "im1", "dirac_norm", "cpt_norm2"}},
      {"trajectory", std::move(rows)}};
  emit(report);
  return 0;
}

int run_pt_spinflip(const Cli& cli) {
  const std::vector<double> alphas = parse_grid(cli.alpha_grid);
  const double tau_p = passage_time(cli.omega);

  auto row_of = [&](double alpha) {
    // fixed omega; theta = -pi/2 picks the fast sign of the flip
    const double s = cli.omega / (2.0 * std::cos(alpha));
    const PTParams p{s * std::sin(alpha), s, -kPi / 2.0};
    const double tau = spin_flip_time(p);
    return std::vector<double>{alpha, p.r, p.s, p.theta,
                               p.omega(), tau, tau / tau_p};
  };

  if (cli.format == "csv") {
    std::printf("alpha,r,s,theta,omega,tau,tau_over_tau_p\n");
    for (const double a : alphas) csv_row(row_of(a));
    return 0;
  }
  json report = make_report(
      "pt-spinflip", {{"omega", cli.omega}, {"alpha_grid", cli.alpha_grid}});
  json rows = json::array();
  for (const double a : alphas) rows.push_back(row_of(a));
  report["outputs"] = {
      {"columns", {"alpha", "r", "s", "theta", "omega", "tau", "tau_over_tau_p"}},
      {"table", std::move(rows)}};
  emit(report);
  return 0;
}

int run_equiv(const Cli& cli) {
  const PTParams p{cli.r, cli.s, cli.theta};
  const EquivalenceMap map = hermitian_equivalent(p);
  const Eigensystem2 spec_h = eig2(p.to_matrix());
  const Eigensystem2 spec_ht = eig2(map.h_tilde);

  json report = make_report(
      "equiv", {{"r", p.r}, {"s", p.s}, {"theta", p.theta}});
  report["outputs"] = {
      {"q", jmat(map.q)},
      {"h_tilde", jmat(map.h_tilde)},
      {"spectrum_h",
       {jcomplex(spec_h.values[0]), jcomplex(spec_h.values[1])}},
      {"spectrum_h_tilde",
       {jcomplex(spec_ht.values[0]), jcomplex(spec_ht.values[1])}},
      {"h_tilde_hermiticity_residual",
       (map.h_tilde - map.h_tilde.adjoint()).norm()}};
  emit(report);
  return 0;
}

int run_dilate(const Cli& cli) {
  const PTParams p{cli.r, cli.s, cli.theta};
  json report = make_report("dilate", {{"r", p.r},
                                       {"s", p.s},
                                       {"theta", p.theta},
                                       {"variant", cli.variant}});
  if (cli.variant == "unitary") {
    const UnitaryDilation dil = unitary_dilation(p, cli.t);
    report["inputs"]["t"] = cli.t;
    report["outputs"] = {{"unitary4", jmat(dil.unitary)},
                         {"sigma_max", dil.sigma_max}};
    if (cli.check) {
      const Vector2 psi0(1, 0);
      const Vector2 projected = project(dil.unitary * embed(psi0));
      report["checks"] = {
          {"unitarity_residual",
           (dil.unitary.adjoint() * dil.unitary - Matrix4::Identity()).norm()},
          {"projection_fidelity",
           fidelity(projected, pt_evolve(p, psi0, cli.t))}};
    }
  } else if (cli.variant == "fixed") {
    std::optional<std::array<double, 4>> assignment;
    if (!cli.eigenvalues_raw.empty()) {
      const auto vals = parse_real_list(cli.eigenvalues_raw);
      if (vals.size() != 4)
        throw std::invalid_argument("--eigenvalues needs exactly 4 values");
      assignment = std::array<double, 4>{vals[0], vals[1], vals[2], vals[3]};
    }
    const FixedDilation fd = fixed_dilation_hamiltonian(
        p, assignment, cli.t_max > 0 ? cli.t_max : -1.0, cli.profile_points);
    json profile = json::array();
    for (const auto& sample : fd.fidelity_profile)
      profile.push_back(json::array({sample.t, sample.fidelity}));
    json basis = json::array();
    for (const auto& w : fd.basis) {
      json col = json::array();
      for (int i = 0; i < 4; ++i) col.push_back(jcomplex(w(i)));
      basis.push_back(col);
    }
    report["outputs"] = {
        {"hamiltonian4", jmat(fd.hamiltonian)},
        {"eigenvalues", {fd.eigenvalues[0], fd.eigenvalues[1],
                         fd.eigenvalues[2], fd.eigenvalues[3]}},
        {"basis", std::move(basis)},
        {"fidelity_profile", std::move(profile)}};
  } else {
    throw std::invalid_argument("--variant must be 'unitary' or 'fixed'");
  }
  emit(report);
  return 0;
}

int run_classical_orbit(const Cli& cli) {
  const Complex x0 = parse_complex(cli.x0_raw);
  const Complex energy = cli.energy_re;
  const ClassicalTrajectory traj =
      integrate_orbit(x0, energy, cli.dt, cli.t_max, cli.branch);

  auto row_of = [&](const PhasePoint& pt) {
    const Complex e = pt.p * pt.p + pt.x * pt.x;
    return std::vector<double>{pt.t,          pt.x.real(), pt.x.imag(),
                               pt.p.real(),   pt.p.imag(), e.real(),
                               e.imag()};
  };
  if (cli.format == "csv") {
    std::printf("t,re_x,im_x,re_p,im_p,re_E,im_E\n");
    for (const auto& pt : traj.points) csv_row(row_of(pt));
    return 0;
  }
  json report = make_report("classical-orbit", {{"x0", jcomplex(x0)},
                                                {"energy", jcomplex(energy)},
                                                {"dt", cli.dt},
                                                {"t_max", cli.t_max},
                                                {"branch", cli.branch}});
  json rows = json::array();
  for (const auto& pt : traj.points) rows.push_back(row_of(pt));
  report["outputs"] = {
      {"columns", {"t", "re_x", "im_x", "re_p", "im_p", "re_E", "im_E"}},
      {"max_energy_drift", traj.max_energy_drift},
      {"trajectory", std::move(rows)}};
  emit(report);
  return 0;
}

int run_switched_flight(const Cli& cli) {
  const std::vector<double> a_values = parse_real_list(cli.a_list);
  SwitchMode mode;
  if (cli.mode == "immediate") {
    mode = SwitchMode::Immediate;
  } else if (cli.mode == "at-turning-point") {
    mode = SwitchMode::AtTurningPoint;
  } else {
    throw std::invalid_argument("--mode must be immediate or at-turning-point");
  }

  auto row_of = [&](double a) {
    const SwitchedFlight flight = switched_flight(a, mode, cli.dt);
    const double half_period =
        mode == SwitchMode::Immediate
            ? 0.5 * orbit_period(Complex(-a, 0.0), 1.0).period
            : 0.5 * orbit_period(Complex(-1.0, 0.0), 1.0).period;
    return std::vector<double>{a,
                               flight.total_time,
                               flight.in_potential_time,
                               flight.free_time,
                               flight.arrival_x_error,
                               half_period};
  };
  if (cli.format == "csv") {
    std::printf(
        "a,total_time,in_potential_time,free_time,arrival_x_error,half_period\n");
    for (const double a : a_values) csv_row(row_of(a));
    return 0;
  }
  json report = make_report("switched-flight",
                            {{"a_list", cli.a_list}, {"mode", cli.mode}});
  json rows = json::array();
  for (const double a : a_values) rows.push_back(row_of(a));
  report["outputs"] = {{"columns",
                        {"a", "total_time", "in_potential_time", "free_time",
                         "arrival_x_error", "half_period"}},
                       {"table", std::move(rows)}};
  emit(report);
  return 0;
}

int run_verify(const Cli& cli) {
  const auto results = run_verification(cli.seed, cli.filter);

  json report = make_report("verify", {{"seed", cli.seed},
                                       {"filter", cli.filter}});
  json checks = json::array();
  int n_pass = 0;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"observed", r.observed},
                      {"tolerance", r.tolerance},
                      {"detail", r.detail}});
    if (r.pass) ++n_pass;
  }
  report["checks"] = std::move(checks);
  report["outputs"] = {
      {"n_pass", n_pass},
      {"n_fail", static_cast<int>(results.size()) - n_pass}};
  emit(report);
  if (n_pass != static_cast<int>(results.size())) {
    std::cerr << "verify: " << results.size() - n_pass << " check(s) failed\n";
    return 1;
  }
  return 0;
}

void load_tolerances(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::invalid_argument("cannot open tolerance file " + path);
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
  std::fclose(f);
  const json j = json::parse(text);
  for (const auto& [key, value] : j.items()) {
    const double tol = value.get<double>();
    if (!(tol > 0.0))
      throw std::invalid_argument("tolerance " + key + " must be > 0");
    config().tolerances[key] = tol;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"time-optimal quantum evolution toolkit"};
  app.fallthrough();

  app.add_option("--hbar", cli.hbar_value, "value of hbar (default 1.0)")
      ->envname("QBRACH_HBAR");
  app.add_option("--tolerances", cli.tolerance_file,
                 "JSON file of named tolerance overrides")
      ->envname("QBRACH_TOLERANCES");

  auto add_format = [&](CLI::App* sub, const char* def) {
    cli.format = def;
    sub->add_option("--format", cli.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* c_opt = app.add_subcommand(
      "optimal-h", "optimal Hamiltonian carrying psi_i to psi_f at gap omega");
  c_opt->add_option("--psi-i", cli.psi_i_raw, "initial state, e.g. 1,0");
  c_opt->add_option("--psi-f", cli.psi_f_raw, "final state, e.g. 0,1");
  c_opt->add_option("--omega", cli.omega, "spectral gap")->required();
  c_opt->add_flag("--check", cli.check, "embed oracle comparisons");

  auto* c_min = app.add_subcommand("min-time", "minimum evolution time");
  c_min->add_option("--psi-i", cli.psi_i_raw, "initial state");
  c_min->add_option("--psi-f", cli.psi_f_raw, "final state");
  c_min->add_option("--omega", cli.omega, "spectral gap")->required();

  auto* c_three = app.add_subcommand(
      "three-level", "constrained three-level orthogonalization");
  c_three->add_option("--omega-ji", cli.omega_ji, "gap E_j - E_i")->required();
  c_three->add_option("--omega-ki", cli.omega_ki, "gap E_k - E_i")->required();
  c_three->add_option("--alpha", cli.angle_alpha, "state angle (default pi/4)");
  c_three->add_option("--beta", cli.angle_beta, "state angle (default pi/4)");

  auto* c_eig = app.add_subcommand("pt-eig", "PT eigensystem and C operator");
  c_eig->add_option("--r", cli.r, "r parameter")->required();
  c_eig->add_option("--s", cli.s, "s parameter")->required();
  c_eig->add_option("--theta", cli.theta, "theta parameter")->required();
  c_eig->add_flag("--check", cli.check, "embed algebra residuals");

  auto* c_evolve = app.add_subcommand("pt-evolve", "PT trajectory (CSV)");
  c_evolve->add_option("--r", cli.r, "r parameter")->required();
  c_evolve->add_option("--s", cli.s, "s parameter")->required();
  c_evolve->add_option("--theta", cli.theta, "theta parameter")->required();
  c_evolve->add_option("--psi", cli.psi_raw, "initial state (default 1,0)");
  c_evolve->add_option("--t-max", cli.t_max, "final time")->required();
  c_evolve->add_option("--steps", cli.steps, "number of steps (default 1000)");
  add_format(c_evolve, "csv");

  auto* c_flip = app.add_subcommand(
      "pt-spinflip", "spin-flip time over an alpha grid at fixed omega");
  c_flip->add_option("--omega", cli.omega, "spectral gap")->required();
  c_flip->add_option("--alpha-grid", cli.alpha_grid,
                     "start:stop:step (default 0:1.5:0.1)");
  add_format(c_flip, "csv");

  auto* c_equiv = app.add_subcommand(
      "equiv", "Q and the equivalent Hermitian Hamiltonian");
  c_equiv->add_option("--r", cli.r, "r parameter")->required();
  c_equiv->add_option("--s", cli.s, "s parameter")->required();
  c_equiv->add_option("--theta", cli.theta, "theta parameter")->required();

  auto* c_dilate = app.add_subcommand(
      "dilate", "4x4 dilation of the PT evolution");
  c_dilate->add_option("--r", cli.r, "r parameter")->required();
  c_dilate->add_option("--s", cli.s, "s parameter")->required();
  c_dilate->add_option("--theta", cli.theta, "theta parameter")->required();
  c_dilate->add_option("--variant", cli.variant, "unitary or fixed");
  c_dilate->add_option("--t", cli.t, "time (unitary variant)");
  c_dilate->add_option("--eigenvalues", cli.eigenvalues_raw,
                       "4 comma-separated eigenvalues (fixed variant)");
  c_dilate->add_option("--t-max", cli.t_max, "profile horizon (fixed variant)");
  c_dilate->add_option("--profile-points", cli.profile_points,
                       "profile resolution (fixed variant)");
  c_dilate->add_flag("--check", cli.check, "embed unitarity/projection checks");

  auto* c_orbit = app.add_subcommand(
      "classical-orbit", "complex harmonic-oscillator trajectory (CSV)");
  c_orbit->add_option("--x0", cli.x0_raw, "starting position, e.g. 0+2i")
      ->required();
  c_orbit->add_option("--energy", cli.energy_re, "energy (default 1)");
  c_orbit->add_option("--dt", cli.dt, "step size (default 1e-4)");
  c_orbit->add_option("--t-max", cli.t_max, "integration horizon")->required();
  c_orbit->add_option("--branch", cli.branch, "momentum branch +1/-1");
  add_format(c_orbit, "csv");

  auto* c_flight = app.add_subcommand(
      "switched-flight", "potential-switching flight times over a values");
  c_flight->add_option("--a-list", cli.a_list, "comma list (default 2,10,100)");
  c_flight->add_option("--mode", cli.mode, "immediate or at-turning-point");
  c_flight->add_option("--dt", cli.dt, "step size (default 1e-4)");
  add_format(c_flight, "csv");

  auto* c_verify = app.add_subcommand(
      "verify", "run the full invariant suite (exit 1 on any failure)");
  c_verify->add_option("--seed", cli.seed, "RNG seed (default 0)");
  c_verify->add_option("--filter", cli.filter, "only checks containing this");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!(cli.hbar_value > 0.0))
      throw std::invalid_argument("--hbar must be > 0");
    config().hbar = cli.hbar_value;
    if (!cli.tolerance_file.empty()) load_tolerances(cli.tolerance_file);

    if (*c_opt) return run_optimal_h(cli);
    if (*c_min) return run_min_time(cli);
    if (*c_three) return run_three_level(cli);
    if (*c_eig) return run_pt_eig(cli);
    if (*c_evolve) return run_pt_evolve(cli);
    if (*c_flip) return run_pt_spinflip(cli);
    if (*c_equiv) return run_equiv(cli);
    if (*c_dilate) return run_dilate(cli);
    if (*c_orbit) return run_classical_orbit(cli);
    if (*c_flight) return run_switched_flight(cli);
    if (*c_verify) return run_verify(cli);
  } catch (const qbrach::Error& e) {
    json err;
    err["error"] = {{"code", error_name(e.code())},
                    {"message", e.what()},
                    {"tag", e.tag()}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
