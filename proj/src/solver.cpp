#include "sktlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sktlab/errors.hpp"
#include "sktlab/kernels.hpp"

namespace sktlab {

const char* to_string(Scheme s) { return s == Scheme::explicit_euler ? "explicit" : "semi-implicit"; }

Scheme scheme_from_string(const std::string& s) {
  if (s == "explicit") return Scheme::explicit_euler;
  if (s == "semi-implicit") return Scheme::semi_implicit;
  throw InputError("unknown scheme '" + s + "' (expected explicit or semi-implicit)");
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::blow_up: return "blow_up";
    case Termination::solver_failure: return "solver_failure";
  }
  return "solver_failure";
}

void SolverConfig::validate() const {
  auto positive = [](double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InputError(std::string("solver.") + what + " must be positive");
  };
  positive(dt_initial, "dt_initial");
  positive(dt_max, "dt_max");
  positive(safety, "safety");
  positive(floor, "floor");
  positive(blowup_threshold, "blowup_threshold");
  positive(t_end, "T");
  positive(linear_tolerance, "linear_tolerance");
  if (safety > 1.0) throw InputError("solver.safety must be <= 1");
  if (monitor_every < 1) throw InputError("solver.monitor_every must be >= 1");
  if (snapshot_every < 0) throw InputError("solver.snapshot_every must be >= 0");
  for (double p : lp_powers) {
    if (!(p > 0.0)) throw InputError("monitors.p_list entries must be positive");
  }
  for (double q : norm_powers) {
    if (!(q >= 1.0)) throw InputError("monitors.q_list entries must be >= 1");
  }
}

namespace {

using Fields = std::vector<std::vector<double>>;

struct CellLaws {
  Fields d;
  Fields f;
};

CellLaws evaluate_laws(const ModelSpec& m, const StateField& s) {
  const std::size_t cells = s.cells();
  CellLaws out{Fields(static_cast<std::size_t>(m.n), std::vector<double>(cells)),
               Fields(static_cast<std::size_t>(m.n), std::vector<double>(cells))};
  for (std::size_t c = 0; c < cells; ++c) {
    const Vec u = s.at(c);
    const Vec d = m.diffusion.eval(u);
    const Vec f = m.reaction.eval(u);
    for (int i = 0; i < m.n; ++i) {
      out.d[static_cast<std::size_t>(i)][c] = d[i];
      out.f[static_cast<std::size_t>(i)][c] = f[i];
    }
  }
  return out;
}

void laplacian(const Grid& g, std::span<const double> w, std::span<double> out) {
  const auto& k = kernels::active();
  const double ix2 = 1.0 / (g.hx() * g.hx());
  if (g.dim == 1) {
    k.laplacian_1d(w, out, ix2);
  } else {
    k.laplacian_2d(w, out, static_cast<std::size_t>(g.nx), static_cast<std::size_t>(g.ny), ix2,
                   1.0 / (g.hy() * g.hy()));
  }
}

void check_state(const ModelSpec& m, const Grid& g, const StateField& s) {
  if (s.species() != m.n) throw InputError("state species count does not match the model");
  if (s.cells() != g.cells()) throw InputError("state cell count does not match the grid");
}

// Diagonal of (diag - Lap) for Jacobi preconditioning / the direct 1D solve.
std::vector<double> operator_diagonal(const Grid& g, const std::vector<double>& shift) {
  std::vector<double> out(shift);
  const double ix2 = 1.0 / (g.hx() * g.hx());
  const double iy2 = g.dim == 2 ? 1.0 / (g.hy() * g.hy()) : 0.0;
  const int ny = g.dim == 2 ? g.ny : 1;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      double deg = 0.0;
      deg += (ix > 0 ? ix2 : 0.0) + (ix + 1 < g.nx ? ix2 : 0.0);
      if (g.dim == 2) deg += (iy > 0 ? iy2 : 0.0) + (iy + 1 < ny ? iy2 : 0.0);
      out[static_cast<std::size_t>(iy * g.nx + ix)] += deg;
    }
  }
  return out;
}

// y = shift * x - Lap(x)
void apply_operator(const Grid& g, const std::vector<double>& shift, std::span<const double> x, std::span<double> y) {
  laplacian(g, x, y);
  kernels::active().diag_minus(shift, x, y);
}

// Thomas algorithm on the symmetric tridiagonal (shift - Lap) of a 1D grid.
void solve_tridiagonal(const Grid& g, const std::vector<double>& shift, const std::vector<double>& rhs,
                       std::vector<double>& x) {
  const std::size_t n = rhs.size();
  const double off = -1.0 / (g.hx() * g.hx());
  const std::vector<double> diag = operator_diagonal(g, shift);
  std::vector<double> c(n, 0.0);
  x.assign(n, 0.0);
  double beta = diag[0];
  x[0] = rhs[0] / beta;
  for (std::size_t i = 1; i < n; ++i) {
    c[i] = off / beta;
    beta = diag[i] - off * c[i];
    x[i] = (rhs[i] - off * x[i - 1]) / beta;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i + 1] * x[i + 1];
}

// Jacobi-preconditioned conjugate gradients; returns iterations or -1.
int solve_cg(const Grid& g, const std::vector<double>& shift, const std::vector<double>& rhs, std::vector<double>& x,
             double tolerance) {
  const auto& k = kernels::active();
  const std::size_t n = rhs.size();
  const std::vector<double> diag = operator_diagonal(g, shift);
  std::vector<double> inv_diag(n);
  for (std::size_t i = 0; i < n; ++i) inv_diag[i] = 1.0 / diag[i];

  std::vector<double> r(n), z(n), p(n), q(n);
  apply_operator(g, shift, x, r);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
  const double bnorm = std::sqrt(k.dot(rhs, rhs));
  const double target = tolerance * (bnorm > 0.0 ? bnorm : 1.0);
  if (std::sqrt(k.dot(r, r)) <= target) return 0;

  k.multiply(r, inv_diag, z);
  p = z;
  double rz = k.dot(r, z);
  const int max_iter = static_cast<int>(2 * n) + 100;
  for (int it = 1; it <= max_iter; ++it) {
    apply_operator(g, shift, p, q);
    const double alpha = rz / k.dot(p, q);
    k.axpy(alpha, p, x);
    k.axpy(-alpha, q, r);
    if (!std::isfinite(alpha)) return -1;
    if (std::sqrt(k.dot(r, r)) <= target) return it;
    k.multiply(r, inv_diag, z);
    const double rz_next = k.dot(r, z);
    k.xpay(z, rz_next / rz, p);
    rz = rz_next;
  }
  return -1;
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::vector<double> discrete_flux_divergence(const ModelSpec& m, const Grid& g, const StateField& s, int species) {
  check_state(m, g, s);
  if (species < 0 || species >= m.n) throw DomainError("species index out of range");
  std::vector<double> w(s.cells());
  for (std::size_t c = 0; c < s.cells(); ++c) {
    const Vec u = s.at(c);
    w[c] = m.diffusion.eval(u)[species] * u[species];
  }
  std::vector<double> out(w.size());
  laplacian(g, w, out);
  return out;
}

StateField step_explicit(const ModelSpec& m, const Grid& g, const StateField& s, double dt, double floor,
                         StepInfo* info) {
  check_state(m, g, s);
  const auto& k = kernels::active();
  const CellLaws laws = evaluate_laws(m, s);
  StateField next(m.n, s.cells());
  next.t = s.t + dt;
  StepInfo local;
  std::vector<double> w(s.cells()), lap(s.cells());
  for (int i = 0; i < m.n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    k.multiply(laws.d[si], s.u[si], w);
    laplacian(g, w, lap);
    double added = 0.0;
    local.clamps += k.euler_update(s.u[si], lap, laws.f[si], dt / m.tau[i], floor, next.u[si], added);
    local.clamp_mass += m.tau[i] * added * g.cell_volume();
    if (!all_finite(next.u[si])) throw StepFailure(Termination::blow_up, "non-finite value in explicit step");
  }
  if (info) *info = local;
  return next;
}

StateField step_semi_implicit(const ModelSpec& m, const Grid& g, const StateField& s, double dt, double floor,
                              double tolerance, StepInfo* info) {
  check_state(m, g, s);
  const auto& k = kernels::active();
  const CellLaws laws = evaluate_laws(m, s);
  const std::size_t cells = s.cells();
  StateField next(m.n, cells);
  next.t = s.t + dt;
  StepInfo local;
  std::vector<double> shift(cells), rhs(cells), v(cells), resid(cells);
  for (int i = 0; i < m.n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const double rate = m.tau[i] / dt;
    const auto& d = laws.d[si];
    const auto& u = s.u[si];
    for (std::size_t c = 0; c < cells; ++c) {
      shift[c] = rate / d[c];
      rhs[c] = rate * u[c] + laws.f[si][c];
    }
    if (!all_finite(shift) || !all_finite(rhs)) {
      throw StepFailure(Termination::blow_up, "non-finite coefficients in semi-implicit step");
    }
    if (g.dim == 1) {
      solve_tridiagonal(g, shift, rhs, v);
    } else {
      k.multiply(d, u, v);
      const int it = solve_cg(g, shift, rhs, v, tolerance);
      if (it < 0) throw StepFailure(Termination::solver_failure, "conjugate gradients did not converge");
      local.iterations += it;
    }
    if (!all_finite(v)) throw StepFailure(Termination::solver_failure, "non-finite linear-solve result");

    // The Laplacian annihilates constants, so v + c maps to Kv + c shift:
    // one scalar shift cancels the summed residual, i.e. the mass defect.
    apply_operator(g, shift, v, resid);
    double resid_sum = 0.0;
    for (std::size_t c = 0; c < cells; ++c) resid_sum += rhs[c] - resid[c];
    const double correction = resid_sum / k.sum(shift);
    for (auto& x : v) x += correction;
    apply_operator(g, shift, v, resid);
    resid_sum = 0.0;
    for (std::size_t c = 0; c < cells; ++c) resid_sum += rhs[c] - resid[c];
    local.solver_mass += -dt * resid_sum * g.cell_volume();

    auto& out = next.u[si];
    double added = 0.0;
    for (std::size_t c = 0; c < cells; ++c) {
      const double raw = v[c] / d[c];
      if (raw < floor) {
        added += floor - raw;
        out[c] = floor;
        ++local.clamps;
      } else {
        out[c] = raw;
      }
    }
    local.clamp_mass += m.tau[i] * added * g.cell_volume();
  }
  if (info) *info = local;
  return next;
}

double suggest_dt(const ModelSpec& m, const Grid& g, const StateField& s, const SolverConfig& cfg) {
  check_state(m, g, s);
  const double tau_min = m.tau.minCoeff();
  if (cfg.scheme == Scheme::explicit_euler) {
    double d_max = 0.0;
    for (std::size_t c = 0; c < s.cells(); ++c) {
      const Mat a = diffusion_jacobian(m, s.at(c));
      d_max = std::max(d_max, a.cwiseAbs().rowwise().sum().maxCoeff());
    }
    const double h = g.dim == 2 ? std::min(g.hx(), g.hy()) : g.hx();
    if (!(d_max > 0.0)) return cfg.dt_max;
    return std::min(cfg.dt_max, cfg.safety * tau_min * h * h / (2.0 * g.dim * d_max));
  }
  // Accuracy target: the reaction changes each species by at most 10% of
  // its current scale per step (times the safety factor).
  double rate = 0.0;
  for (int i = 0; i < m.n; ++i) {
    double scale = 0.0;
    for (double x : s.u[static_cast<std::size_t>(i)]) scale = std::max(scale, x);
    scale = std::max(scale, 1e-8);
    for (std::size_t c = 0; c < s.cells(); ++c) {
      const double f = m.reaction.eval(s.at(c))[i];
      rate = std::max(rate, std::abs(f) / (m.tau[i] * scale));
    }
  }
  if (!(rate > 0.0)) return cfg.dt_max;
  return std::min(cfg.dt_max, 0.1 * cfg.safety / rate);
}

RunResult run(const ModelSpec& model, const Grid& g, const StateField& u0, const SolverConfig& cfg) {
  // Monitors and the explicit step bound need A(u); custom laws get finite differences.
  const ModelSpec m = model.diffusion.derivative ? model : with_derivative_fallback(model);
  cfg.validate();
  g.validate();
  check_state(m, g, u0);
  if (!u0.nonnegative_finite()) throw InputError("initial state must be finite and nonnegative");
  if (!(u0.max_value() > 0.0)) throw InputError("initial state is identically zero");
  if (!(cfg.t_end > u0.t)) throw InputError("end time must exceed the initial time");

  RunResult result;
  RunMonitor monitor(m, g, cfg.floor, cfg.lp_powers, cfg.norm_powers);
  monitor.start(u0);
  result.snapshots.push_back(u0);

  StateField s = u0;
  const double t_tol = 1e-12 * std::max(1.0, std::abs(cfg.t_end));
  while (s.t < cfg.t_end - t_tol) {
    double dt = cfg.fixed_dt ? cfg.dt_max : suggest_dt(m, g, s, cfg);
    if (!cfg.fixed_dt && result.steps == 0) dt = std::min(dt, cfg.dt_initial);
    const bool last = cfg.t_end - s.t <= dt + t_tol;
    if (last) dt = cfg.t_end - s.t;

    StepInfo info;
    StateField next;
    try {
      next = cfg.scheme == Scheme::explicit_euler
                 ? step_explicit(m, g, s, dt, cfg.floor, &info)
                 : step_semi_implicit(m, g, s, dt, cfg.floor, cfg.linear_tolerance, &info);
    } catch (const StepFailure& e) {
      result.termination = e.kind();
      result.message = e.what();
      break;
    }
    next.t = last ? cfg.t_end : s.t + dt;
    if (!next.nonnegative_finite() || next.max_value() > cfg.blowup_threshold) {
      result.termination = Termination::blow_up;
      result.message = "max |u| exceeded the blow-up threshold at t = " + std::to_string(next.t);
      break;
    }

    monitor.step(s, next, dt, info.clamps, info.clamp_mass, info.solver_mass);
    result.clamp_count += info.clamps;
    s = std::move(next);
    ++result.steps;
    if (result.steps % static_cast<std::size_t>(cfg.monitor_every) == 0) monitor.record(s);
    if (cfg.snapshot_every > 0 && result.steps % static_cast<std::size_t>(cfg.snapshot_every) == 0) {
      result.snapshots.push_back(s);
    }
  }
  monitor.record(s);
  if (result.snapshots.back().t < s.t) result.snapshots.push_back(s);
  result.monitors = std::move(monitor).finish();
  return result;
}

}  // namespace sktlab
