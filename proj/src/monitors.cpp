#include "sktlab/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sktlab/errors.hpp"
#include "sktlab/kernels.hpp"

namespace sktlab {

const char* const kMonitorColumns[12] = {"t",    "mass", "entropy", "dissipation", "entropy_residual", "linf",
                                         "l2",   "l3",   "llogl",   "int_l2",      "int_l3",           "clamp_count"};

namespace {

double phi(double x, double floor) {
  if (x <= 0.0) return 0.0;
  const double v = std::max(x, floor);
  return v * (std::log(v) - 1.0);
}

// Visits every interior face once: fn(cell, neighbour, spacing).
template <class Fn>
void for_each_face(const Grid& g, Fn&& fn) {
  const std::size_t nx = static_cast<std::size_t>(g.nx);
  const std::size_t ny = g.dim == 2 ? static_cast<std::size_t>(g.ny) : 1;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix + 1 < nx; ++ix) fn(iy * nx + ix, iy * nx + ix + 1, g.hx());
  }
  if (g.dim == 2) {
    for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) fn(iy * nx + ix, (iy + 1) * nx + ix, g.hy());
    }
  }
}

Vec floored(const StateField& s, std::size_t cell, double floor) {
  Vec v = s.at(cell);
  for (int i = 0; i < v.size(); ++i) v[i] = std::max(v[i], floor);
  return v;
}

double sum_power(const StateField& s, double q) {
  const auto& k = kernels::active();
  double acc = 0.0;
  for (const auto& ui : s.u) {
    if (q == 1.0) {
      acc += k.sum(ui);
    } else if (q == 2.0) {
      acc += k.sum_squares(ui);
    } else if (q == 3.0) {
      acc += k.sum_cubes(ui);
    } else {
      for (double x : ui) acc += std::pow(x, q);
    }
  }
  return acc;
}

}  // namespace

double mass(const Grid& g, const StateField& s, const Vec& tau) {
  const auto& k = kernels::active();
  double acc = 0.0;
  for (int i = 0; i < s.species(); ++i) acc += tau[i] * k.sum(s.u[static_cast<std::size_t>(i)]);
  return acc * g.cell_volume();
}

double entropy(const Grid& g, const StateField& s, const Vec& tau, double floor) {
  double acc = 0.0;
  for (int i = 0; i < s.species(); ++i) {
    double si = 0.0;
    for (double x : s.u[static_cast<std::size_t>(i)]) si += phi(x, floor);
    acc += tau[i] * si;
  }
  return acc * g.cell_volume();
}

double entropy_dissipation(const ModelSpec& m, const Grid& g, const StateField& s, double floor) {
  double acc = 0.0;
  for_each_face(g, [&](std::size_t c, std::size_t n, double h) {
    const Vec uc = floored(s, c, floor);
    const Vec un = floored(s, n, floor);
    const Vec grad = (un.array().log() - uc.array().log()).matrix() / h;
    const Mat b = onsager_matrix(m, (0.5 * (uc + un)).eval());
    acc += grad.dot(b * grad);
  });
  return acc * g.cell_volume();
}

double entropy_inequality_residual(const ModelSpec& m, const Grid& g, const StateField& prev, const StateField& next,
                                   double dt, const Vec& tau, double floor) {
  const double de = (entropy(g, next, tau, floor) - entropy(g, prev, tau, floor)) / dt;
  double source = 0.0;
  for (std::size_t c = 0; c < prev.cells(); ++c) {
    const Vec u = prev.at(c);
    const Vec f = m.reaction.eval(u);
    for (int i = 0; i < m.n; ++i) source += f[i] * std::log(std::max(u[i], floor));
  }
  return de - source * g.cell_volume();
}

double lq_norm(const Grid& g, const StateField& s, double q) {
  if (!(q >= 1.0)) throw DomainError("lq_norm needs q >= 1");
  if (std::isinf(q)) {
    const auto& k = kernels::active();
    double m = 0.0;
    for (const auto& ui : s.u) m = std::max(m, k.max(ui));
    return m;
  }
  const double total = sum_power(s, q) * g.cell_volume();
  if (q == 1.0) return total;
  return std::pow(total, 1.0 / q);
}

double llogl_norm(const Grid& g, const StateField& s) {
  double acc = 0.0;
  for (const auto& ui : s.u)
    for (double x : ui) acc += x * std::log(std::numbers::e + x);
  return acc * g.cell_volume();
}

IntegralNorms time_integral_norms(const Grid& g, std::span<const StateField> series) {
  if (series.size() < 2) throw InputError("time integrals need at least two samples");
  IntegralNorms out;
  const double vol = g.cell_volume();
  double prev2 = sum_power(series[0], 2.0) * vol;
  double prev3 = sum_power(series[0], 3.0) * vol;
  for (std::size_t k = 1; k < series.size(); ++k) {
    const double dt = series[k].t - series[k - 1].t;
    const double cur2 = sum_power(series[k], 2.0) * vol;
    const double cur3 = sum_power(series[k], 3.0) * vol;
    out.int_l2 += 0.5 * dt * (prev2 + cur2);
    out.int_l3 += 0.5 * dt * (prev3 + cur3);
    prev2 = cur2;
    prev3 = cur3;
  }
  return out;
}

double lp_energy_residual(const ModelSpec& m, const Grid& g, const StateField& prev, const StateField& next, double dt,
                          double p, const Vec& tau) {
  if (!(p > 0.0)) throw DomainError("lp_energy_residual needs p > 0");
  const double vol = g.cell_volume();
  double time_term = 0.0;
  double source = 0.0;
  for (int i = 0; i < m.n; ++i) {
    const auto& a = prev.u[static_cast<std::size_t>(i)];
    const auto& b = next.u[static_cast<std::size_t>(i)];
    double diff = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) diff += std::pow(b[c], p + 1.0) - std::pow(a[c], p + 1.0);
    time_term += tau[i] / (p + 1.0) * diff / dt;
  }
  for (std::size_t c = 0; c < prev.cells(); ++c) {
    const Vec u = prev.at(c);
    const Vec f = m.reaction.eval(u);
    for (int i = 0; i < m.n; ++i) source += f[i] * std::pow(u[i], p);
  }
  double flux = 0.0;
  for_each_face(g, [&](std::size_t c, std::size_t n, double h) {
    const Vec uc = prev.at(c);
    const Vec un = prev.at(n);
    const Mat a = diffusion_jacobian(m, (0.5 * (uc + un)).eval());
    const Vec du = (un - uc) / h;
    Vec dup(m.n);
    for (int i = 0; i < m.n; ++i) dup[i] = (std::pow(un[i], p) - std::pow(uc[i], p)) / h;
    flux += dup.dot(a * du);
  });
  return (time_term + flux - source) * vol;
}

Envelope sup_norm_envelope(std::span<const double> t, std::span<const double> sup_norm) {
  if (t.size() != sup_norm.size()) throw InputError("envelope: time and value series differ in length");
  if (t.size() < 3) throw InputError("envelope fit needs at least three samples");
  const std::size_t n = t.size();
  std::vector<double> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = std::log(std::max(sup_norm[k], std::numeric_limits<double>::min()));

  auto slope_of = [&](std::size_t lo, std::size_t hi) {
    const double cnt = static_cast<double>(hi - lo);
    double mt = 0.0, my = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      mt += t[k];
      my += y[k];
    }
    mt /= cnt;
    my /= cnt;
    double stt = 0.0, sty = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      stt += (t[k] - mt) * (t[k] - mt);
      sty += (t[k] - mt) * (y[k] - my);
    }
    return stt > 0.0 ? sty / stt : 0.0;
  };

  Envelope e;
  e.c2 = slope_of(0, n);
  double lift = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) lift = std::max(lift, y[k] - e.c2 * t[k]);
  e.c3 = std::exp(lift);

  bool below = true;
  for (std::size_t k = 0; k < n; ++k) below = below && sup_norm[k] <= e.c3 * std::exp(e.c2 * t[k]) * (1.0 + 1e-6);

  const std::size_t tail = std::max<std::size_t>(3, n / 3);
  const double late = slope_of(n - tail, n);
  const bool accelerating = late > std::max(e.c2, 0.0) + 0.05 * (1.0 + std::abs(e.c2));
  e.ok = below && !accelerating;
  return e;
}

const MonitorSeries& MonitorBundle::get(const std::string& name) const {
  for (const auto& s : series) {
    if (s.name == name) return s;
  }
  throw InputError("no monitor series named " + name);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunMonitor::RunMonitor(const ModelSpec& m, const Grid& g, double floor, std::vector<double> lp_powers,
                       std::vector<double> q_list)
    : model_(m), grid_(g), floor_(floor) {
  bundle_.lp_powers = std::move(lp_powers);
  for (double q : q_list) lq_norm(g, StateField(m.n, g.cells()), q);  // rejects q < 1 up front
  bundle_.q_sup.assign(q_list.size(), 0.0);
  bundle_.q_list = std::move(q_list);
  bundle_.floor = floor;
  for (const char* name : kMonitorColumns) {
    if (std::string_view(name) != "t") bundle_.series.push_back({name, {}, {}});
  }
  std::ostringstream os;
  os << "dim=" << g.dim << " cells=" << g.nx;
  if (g.dim == 2) os << "x" << g.ny;
  bundle_.grid_description = os.str();
}

void RunMonitor::start(const StateField& s0) {
  const double vol = grid_.cell_volume();
  last_mass_ = mass(grid_, s0, model_.tau);
  last_entropy_ = entropy(grid_, s0, model_.tau, floor_);
  last_l2sq_ = sum_power(s0, 2.0) * vol;
  last_l3cube_ = sum_power(s0, 3.0) * vol;
  bundle_.initial_mass = last_mass_;
  bundle_.initial_linf = lq_norm(grid_, s0, kInfNorm);
  record(s0);
}

void RunMonitor::step(const StateField& prev, const StateField& next, double dt, std::size_t clamps,
                      double clamp_mass, double solver_mass) {
  const double vol = grid_.cell_volume();
  StepRecord rec;
  rec.t = next.t;
  rec.dt = dt;
  rec.mass = mass(grid_, next, model_.tau);
  rec.mass_change = rec.mass - last_mass_;
  rec.clamp_mass = clamp_mass;
  rec.solver_mass = solver_mass;
  rec.clamps = clamps;
  rec.linf = lq_norm(grid_, next, kInfNorm);

  const double e_next = entropy(grid_, next, model_.tau, floor_);
  double source = 0.0;
  for (std::size_t c = 0; c < prev.cells(); ++c) {
    const Vec u = prev.at(c);
    const Vec f = model_.reaction.eval(u);
    for (int i = 0; i < model_.n; ++i) source += f[i] * std::log(std::max(u[i], floor_));
  }
  rec.entropy_residual = (e_next - last_entropy_) / dt - source * vol;
  for (double p : bundle_.lp_powers) {
    rec.lp_residuals.push_back(lp_energy_residual(model_, grid_, prev, next, dt, p, model_.tau));
  }

  const double l2sq = sum_power(next, 2.0) * vol;
  const double l3cube = sum_power(next, 3.0) * vol;
  integrals_.int_l2 += 0.5 * dt * (last_l2sq_ + l2sq);
  integrals_.int_l3 += 0.5 * dt * (last_l3cube_ + l3cube);
  last_l2sq_ = l2sq;
  last_l3cube_ = l3cube;
  last_mass_ = rec.mass;
  last_entropy_ = e_next;
  last_residual_ = rec.entropy_residual;
  clamp_total_ += clamps;
  bundle_.steps.push_back(std::move(rec));
}

void RunMonitor::record(const StateField& s) {
  auto& t_series = bundle_.series.front().t;
  if (!t_series.empty() && s.t <= t_series.back()) return;
  const double values[11] = {
      last_mass_,
      last_entropy_,
      entropy_dissipation(model_, grid_, s, floor_),
      last_residual_,
      lq_norm(grid_, s, kInfNorm),
      std::sqrt(last_l2sq_),
      std::cbrt(last_l3cube_),
      llogl_norm(grid_, s),
      integrals_.int_l2,
      integrals_.int_l3,
      static_cast<double>(clamp_total_),
  };
  for (std::size_t k = 0; k < 11; ++k) bundle_.series[k].push(s.t, values[k]);
  for (std::size_t k = 0; k < bundle_.q_list.size(); ++k) {
    bundle_.q_sup[k] = std::max(bundle_.q_sup[k], lq_norm(grid_, s, bundle_.q_list[k]));
  }
}

MonitorBundle RunMonitor::finish() && { return std::move(bundle_); }

}  // namespace sktlab
