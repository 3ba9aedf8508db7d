#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sktlab/grid.hpp"
#include "sktlab/model.hpp"

namespace sktlab {

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// tau-weighted total mass sum_c sum_i tau_i u_i vol.
double mass(const Grid& g, const StateField& s, const Vec& tau);

/// sum tau_i Phi(max(u_i, floor)) vol with Phi(x) = x (log x - 1) and Phi(0) = 0.
double entropy(const Grid& g, const StateField& s, const Vec& tau, double floor = 1e-12);

/// Face sum of B(u_f)[grad w, grad w] vol, w = log max(u, floor), u_f the
/// arithmetic mean of the two adjacent (floored) cells.
double entropy_dissipation(const ModelSpec& m, const Grid& g, const StateField& s, double floor = 1e-12);

/// (E(next) - E(prev))/dt - sum f_i(u_prev) log max(u_prev, floor) vol.
double entropy_inequality_residual(const ModelSpec& m, const Grid& g, const StateField& prev, const StateField& next,
                                   double dt, const Vec& tau, double floor = 1e-12);

/// (sum_c sum_i u^q vol)^(1/q); q = kInfNorm gives the max. q < 1 throws.
double lq_norm(const Grid& g, const StateField& s, double q);

/// Surrogate L log L size: sum_c sum_i u log(e + u) vol.
double llogl_norm(const Grid& g, const StateField& s);

struct IntegralNorms {
  double int_l3 = 0.0;  // int ||u||_3^3 dt
  double int_l2 = 0.0;  // int ||u||_2^2 dt
};

/// Trapezoidal time integrals over the states' own time stamps.
IntegralNorms time_integral_norms(const Grid& g, std::span<const StateField> series);

/// Discrete defect of the Lp energy identity, summed over species; spatial
/// terms at prev, forward difference in time.
double lp_energy_residual(const ModelSpec& m, const Grid& g, const StateField& prev, const StateField& next, double dt,
                          double p, const Vec& tau);

struct Envelope {
  double c2 = 0.0;
  double c3 = 0.0;
  bool ok = false;
};

/// Exponential envelope ||u||_inf <= C3 exp(C2 t): C2 is the least-squares
/// slope of log ||u||_inf, C3 the smallest constant lifting the line over
/// every sample. ok fails when the late-time slope outruns max(C2, 0).
Envelope sup_norm_envelope(std::span<const double> t, std::span<const double> sup_norm);

struct MonitorSeries {
  std::string name;
  std::vector<double> t;
  std::vector<double> value;

  void push(double time, double v) {
    t.push_back(time);
    value.push_back(v);
  }
};

/// Per accepted step bookkeeping.
struct StepRecord {
  double t = 0.0;
  double dt = 0.0;
  double mass = 0.0;
  double mass_change = 0.0;
  double clamp_mass = 0.0;
  double solver_mass = 0.0;
  double entropy_residual = 0.0;
  double linf = 0.0;
  std::size_t clamps = 0;
  std::vector<double> lp_residuals;
};

struct MonitorBundle {
  /// CSV column order: t, mass, entropy, dissipation, entropy_residual, linf,
  /// l2, l3, llogl, int_l2, int_l3, clamp_count.
  std::vector<MonitorSeries> series;
  std::vector<double> lp_powers;
  /// Extra Lq norms tracked at every recorded row: running suprema.
  std::vector<double> q_list;
  std::vector<double> q_sup;
  std::vector<StepRecord> steps;
  double initial_mass = 0.0;
  double initial_linf = 0.0;
  std::string grid_description;
  std::uint64_t model_hash = 0;
  double floor = 1e-12;

  const MonitorSeries& get(const std::string& name) const;
  std::size_t rows() const { return series.empty() ? 0 : series.front().t.size(); }
};

extern const char* const kMonitorColumns[12];

/// Single-owner accumulator used by the solver after every accepted step.
class RunMonitor {
 public:
  RunMonitor(const ModelSpec& m, const Grid& g, double floor, std::vector<double> lp_powers,
             std::vector<double> q_list = {});

  void start(const StateField& s0);
  void step(const StateField& prev, const StateField& next, double dt, std::size_t clamps, double clamp_mass,
            double solver_mass);
  /// Appends a CSV row for s (no-op when s.t equals the last recorded time).
  void record(const StateField& s);
  MonitorBundle finish() &&;

  const MonitorBundle& bundle() const { return bundle_; }

 private:
  const ModelSpec& model_;
  Grid grid_;
  double floor_;
  MonitorBundle bundle_;
  double last_mass_ = 0.0;
  double last_entropy_ = 0.0;
  double last_residual_ = std::numeric_limits<double>::quiet_NaN();
  double last_l2sq_ = 0.0;
  double last_l3cube_ = 0.0;
  IntegralNorms integrals_;
  std::size_t clamp_total_ = 0;
};

/// FNV-1a over a byte string, for model metadata.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace sktlab
