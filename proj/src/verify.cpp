#include "sktlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "sktlab/conditions.hpp"
#include "sktlab/kernels.hpp"
#include "sktlab/model.hpp"
#include "sktlab/monitors.hpp"
#include "sktlab/solver.hpp"

namespace sktlab {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

SolverConfig quiet_config(double t_end, double dt, Scheme scheme = Scheme::semi_implicit) {
  SolverConfig cfg;
  cfg.scheme = scheme;
  cfg.t_end = t_end;
  cfg.dt_max = dt;
  cfg.dt_initial = dt;
  cfg.fixed_dt = true;
  cfg.monitor_every = 1 << 30;
  cfg.lp_powers.clear();
  return cfg;
}

// Max-norm error of a heat run against the exact cosine mode.
double heat_error(int cells, double dt, double t_end) {
  const ModelSpec m = make_semilinear(Vec::Ones(1), Vec::Ones(1), reaction_none(1));
  const Grid g = Grid::line(cells, 1.0);
  StateField u0(1, g.cells());
  for (int c = 0; c < cells; ++c) u0.u[0][static_cast<std::size_t>(c)] = 1.0 + 0.1 * std::cos(M_PI * g.x_center(c));
  const RunResult r = run(m, g, u0, quiet_config(t_end, dt));
  const StateField& s = r.snapshots.back();
  const double decay = std::exp(-M_PI * M_PI * t_end);
  double err = 0.0;
  for (int c = 0; c < cells; ++c) {
    const double exact = 1.0 + 0.1 * std::cos(M_PI * g.x_center(c)) * decay;
    err = std::max(err, std::abs(s.u[0][static_cast<std::size_t>(c)] - exact));
  }
  return err;
}

SuiteResult heat_suite() {
  const double t_end = 0.1;
  const double e8 = heat_error(8, 2e-6, t_end), e16 = heat_error(16, 2e-6, t_end), e32 = heat_error(32, 2e-6, t_end);
  const double space = 0.5 * (std::log2(e8 / e16) + std::log2(e16 / e32));
  const double t1 = heat_error(256, 0.01, t_end), t2 = heat_error(256, 0.005, t_end),
               t3 = heat_error(256, 0.0025, t_end);
  const double time = 0.5 * (std::log2(t1 / t2) + std::log2(t2 / t3));
  const bool pass = std::abs(space - 2.0) <= 0.3 && std::abs(time - 1.0) <= 0.3;
  return {"heat_convergence", pass, fmt("spatial_order=%.3f temporal_order=%.3f", space, time)};
}

Vec rk4(const ModelSpec& m, Vec u, double t_end, int steps) {
  const double h = t_end / steps;
  auto rhs = [&](const Vec& x) { return Vec(m.reaction.eval(x).cwiseQuotient(m.tau)); };
  for (int k = 0; k < steps; ++k) {
    const Vec k1 = rhs(u);
    const Vec k2 = rhs(u + 0.5 * h * k1);
    const Vec k3 = rhs(u + 0.5 * h * k2);
    const Vec k4 = rhs(u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

SuiteResult ode_suite() {
  LvTable lv;
  lv.a[0] = 2.0, lv.a[1] = 1.5;
  lv.b[0] = 1.0, lv.b[1] = 0.5;
  lv.c[0] = 0.5, lv.c[1] = 1.0;
  SktCoefficients k;
  k.a0 = Vec::Constant(2, 1.0);
  k.a = Mat::Zero(2, 2);
  k.a << 0.5, 1.0, 0.25, 0.5;
  k.lv = lv;
  Vec tau(2);
  tau << 1.0, 2.0;
  const ModelSpec m = make_skt(k, tau, reaction_lotka_volterra(lv));
  Vec u0(2);
  u0 << 0.5, 0.8;
  const double dt = 1e-4;
  const Vec ref = rk4(m, u0, 1.0, 10000);
  double worst = 0.0;
  for (int cells : {1, 64}) {
    const Grid g = Grid::line(cells, 1.0);
    StateField s0(2, g.cells());
    for (std::size_t c = 0; c < g.cells(); ++c) s0.set(c, u0);
    const RunResult r = run(m, g, s0, quiet_config(1.0, dt));
    for (std::size_t c = 0; c < g.cells(); ++c) {
      const Vec u = r.snapshots.back().at(c);
      worst = std::max(worst, ((u - ref).cwiseAbs().array() / ref.cwiseAbs().array()).maxCoeff());
    }
  }
  return {"ode_oracle", worst <= 1e-4, fmt("max_rel_error=%.3e", worst)};
}

SuiteResult closed_form_suite() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coef(0.0, 5.0), base(0.1, 2.0), coin(0.0, 1.0);
  int mismatches = 0, tested_psd = 0, tested_diag = 0, tested_coercive = 0;
  for (int trial = 0; trial < 120; ++trial) {
    SktCoefficients k;
    k.a0 = Vec(2);
    k.a0 << base(rng), base(rng);
    k.a = Mat(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) k.a(i, j) = coin(rng) < 0.4 ? 0.0 : coef(rng);
    const ModelSpec m = make_skt(k, Vec::Ones(2), reaction_none(2));
    const SampleBox box = SampleBox::cube(2, 0.0, 10.0, 512, 7);
    const SampleBox inner = SampleBox::cube(2, 0.01, 10.0, 512, 7);
    if (skt_mobility_psd_sufficient(k)) {
      ++tested_psd;
      mismatches += !check_P_psd(m, box).holds();
    }
    if (skt_no_cross_diffusion(k)) {
      ++tested_diag;
      mismatches += !check_A_alpha(m, inner, {0.5, 1.0, 2.0, 5.0}, k.a0.minCoeff()).holds();
    }
    if (skt_coercive_diffusion(k)) {
      ++tested_coercive;
      mismatches += !check_diffusion_bounds(m, box, DiffusionForm::quadratic).holds();
    }
  }
  return {"closed_form_vs_sampling", mismatches == 0 && tested_psd > 0 && tested_diag > 0 && tested_coercive > 0,
          fmt("psd_sets=%.0f diagonal_sets=%.0f coercive_sets=%.0f", tested_psd, tested_diag, tested_coercive) +
              fmt(" mismatches=%.0f", mismatches)};
}

SuiteResult conservation_suite() {
  SktCoefficients k;
  k.a0 = Vec::Constant(2, 1.0);
  k.a = Mat::Zero(2, 2);
  k.a << 1.0, 0.0, 0.0, 0.5;
  Vec tau(2);
  tau << 1.0, 3.0;
  double drift = 0.0;
  for (int dim : {1, 2}) {
    const ModelSpec m = make_skt(k, tau, reaction_none(2));
    const Grid g = dim == 1 ? Grid::line(64, 1.0) : Grid::rect(16, 16, 1.0, 1.0);
    StateField s0(2, g.cells());
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(0.2, 2.0);
    for (auto& row : s0.u)
      for (auto& x : row) x = d(rng);
    SolverConfig cfg = quiet_config(0.2, 1e-3);
    cfg.monitor_every = 1;
    const RunResult r = run(m, g, s0, cfg);
    const auto& mass_series = r.monitors.get("mass").value;
    for (double v : mass_series) drift = std::max(drift, std::abs(v / mass_series.front() - 1.0));
  }
  const ModelSpec md = make_skt(k, tau, reaction_mass_dissipative(2));
  const Grid g = Grid::line(64, 1.0);
  StateField s0(2, g.cells());
  for (std::size_t c = 0; c < g.cells(); ++c) {
    s0.u[0][c] = 1.0 + 0.5 * std::cos(M_PI * g.x_center(static_cast<int>(c)));
    s0.u[1][c] = 1.0 - 0.5 * std::cos(M_PI * g.x_center(static_cast<int>(c)));
  }
  const RunResult r = run(md, g, s0, quiet_config(1.0, 1e-3));
  double worst_increase = 0.0;
  for (const auto& st : r.monitors.steps) {
    worst_increase = std::max(worst_increase, st.mass_change - st.clamp_mass - std::abs(st.solver_mass));
  }
  const bool pass = drift <= 1e-12 && worst_increase <= 0.0 && r.termination == Termination::completed;
  return {"conservation", pass, fmt("f0_relative_drift=%.2e dissipative_max_increase=%.2e", drift, worst_increase)};
}

SuiteResult jacobian_suite() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(0.0, 5.0), base(0.1, 2.0), state(0.0, 10.0);
  double worst = 0.0, worst_p = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    SktCoefficients k;
    k.a0 = Vec(2);
    k.a0 << base(rng), base(rng);
    k.a = Mat(2, 2);
    k.a << coef(rng), coef(rng), coef(rng), coef(rng);
    const ModelSpec m = make_skt(k, Vec::Ones(2), reaction_none(2));
    Vec u(2);
    u << state(rng), state(rng);
    Mat closed(2, 2);
    closed << k.a0[0] + 2.0 * k.a(0, 0) * u[0] + k.a(0, 1) * u[1], k.a(0, 1) * u[0], k.a(1, 0) * u[1],
        k.a0[1] + k.a(1, 0) * u[0] + 2.0 * k.a(1, 1) * u[1];
    const Mat a = diffusion_jacobian(m, u);
    worst = std::max(worst, (a - closed).cwiseAbs().maxCoeff() / (1.0 + closed.cwiseAbs().maxCoeff()));
    if ((u.array() > 0.0).all()) {
      const Mat b = onsager_matrix(m, u);
      const Mat p = mobility_matrix(m, u);
      worst_p = std::max(worst_p, (p - b - b.transpose()).cwiseAbs().maxCoeff() / (1.0 + p.cwiseAbs().maxCoeff()));
    }
  }
  const bool pass = worst <= 1e-14 && worst_p <= 1e-13;
  return {"skt_jacobian_consistency", pass, fmt("max_rel_A=%.2e max_rel_P=%.2e", worst, worst_p)};
}

SuiteResult kernel_suite() {
  const auto& ref = kernels::scalar_kernels();
  const auto& act = kernels::active();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> a(1003), b(1003), x(1003), y(1003);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = d(rng), b[i] = d(rng);
  bool same = true;
  ref.laplacian_1d(a, x, 3.5);
  act.laplacian_1d(a, y, 3.5);
  same = same && x == y;
  ref.laplacian_2d(std::span<const double>(a).first(1000), std::span(x).first(1000), 40, 25, 2.0, 3.0);
  act.laplacian_2d(std::span<const double>(a).first(1000), std::span(y).first(1000), 40, 25, 2.0, 3.0);
  same = same && x == y;
  const double dot_gap = std::abs(ref.dot(a, b) - act.dot(a, b));
  return {"kernel_equivalence", same && dot_gap <= 1e-12, fmt("elementwise_identical=%.0f", same ? 1.0 : 0.0)};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites() {
  const std::vector<std::function<SuiteResult()>> suites = {heat_suite,        ode_suite,      closed_form_suite,
                                                            conservation_suite, jacobian_suite, kernel_suite};
  std::vector<SuiteResult> out;
  for (const auto& suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = suite();
    } catch (const std::exception& e) {
      r = {"exception", false, e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_verify_table(const std::vector<SuiteResult>& results) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-26s %-6s %s\n", "suite", "result", "detail");
  out += line;
  bool all = true;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-26s %-6s %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str());
    out += line;
    all = all && r.pass;
  }
  out += all ? "overall PASS\n" : "overall FAIL\n";
  return out;
}

}  // namespace sktlab
