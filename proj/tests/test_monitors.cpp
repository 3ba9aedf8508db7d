#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sktlab/conditions.hpp"
#include "sktlab/errors.hpp"
#include "sktlab/monitors.hpp"
#include "sktlab/solver.hpp"

using namespace sktlab;
using namespace testutil;

namespace {

StateField filled(const Grid& g, int species, double v) { return StateField(species, g.cells(), v); }

StateField random_state(int species, const Grid& g, std::uint64_t seed, double lo = 0.2, double hi = 3.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  StateField s(species, g.cells());
  for (auto& row : s.u)
    for (auto& x : row) x = d(rng);
  return s;
}

}  // namespace

TEST_CASE("monitor mass") {
  const Grid unit = Grid::line(10, 1.0);
  CHECK(mass(unit, filled(unit, 3, 1.0), Vec::Ones(3)) == doctest::Approx(3.0));
  CHECK(mass(unit, filled(unit, 3, 0.0), Vec::Ones(3)) == 0.0);
  const Grid two = Grid::line(2, 1.0);
  StateField s(1, 2);
  s.u[0] = {1, 3};
  CHECK(mass(two, s, vec({2})) == doctest::Approx(4.0));
}

TEST_CASE("monitor entropy") {
  const Grid g = Grid::rect(4, 5, 2.0, 0.5);
  CHECK(entropy(g, filled(g, 2, 1.0), vec({1, 3})) == doctest::Approx(-4.0 * g.domain_volume()));
  CHECK(entropy(g, filled(g, 2, std::exp(1.0)), vec({1, 3})) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(entropy(g, filled(g, 2, 0.0), vec({1, 3})) == 0.0);
}

TEST_CASE("monitor entropy dissipation") {
  const auto m = skt_model(skt(1, 1, 1, 0.5, 0.5, 1));
  const Grid g = Grid::line(12, 1.0);
  CHECK(entropy_dissipation(m, g, filled(g, 2, 1.7)) == 0.0);
  const Grid one = Grid::line(1, 1.0);
  CHECK(entropy_dissipation(m, one, filled(one, 2, 1.7)) == 0.0);

  // N = 1, constant d: sum over faces of d u_face (dlog u / h)^2 vol
  const auto semi = make_semilinear(vec({2}), vec({1}), reaction_none(1));
  StateField s(1, 3);
  s.u[0] = {1, 2, 4};
  const Grid g3 = Grid::line(3, 3.0);
  const double expect = (2 * 1.5 * std::pow(std::log(2.0), 2) + 2 * 3.0 * std::pow(std::log(2.0), 2)) * 1.0;
  CHECK(entropy_dissipation(semi, g3, s) == doctest::Approx(expect));
}

TEST_CASE("monitor dissipation is nonnegative where the mobility is PSD") {
  const auto m = skt_model(skt(1, 1, 1, 2, 1, 1));
  REQUIRE(check_P_psd(m, SampleBox::cube(2, 0, 5, 1024)).holds());
  for (int k = 0; k < 30; ++k) {
    const Grid g = k % 2 ? Grid::rect(6, 7, 1.0, 1.0) : Grid::line(20, 1.0);
    const StateField s = random_state(2, g, 40 + k, 0.0, 5.0);
    double scale = 0.0;
    for (const auto& row : s.u)
      for (double x : row) scale = std::max(scale, x);
    CHECK(entropy_dissipation(m, g, s) >= -1e-9 * (1.0 + scale));
  }
}

TEST_CASE("monitor entropy inequality residual") {
  const auto m = skt_model(skt(1, 1, 0, 0, 0, 0));
  const Grid g = Grid::line(8, 1.0);
  const StateField s = filled(g, 2, 1.3);
  CHECK(entropy_inequality_residual(m, g, s, s, 0.1, Vec::Ones(2)) == 0.0);

  // single cell: residual is the ODE quantity dE/dt - sum f log u
  const auto lvm = skt_model(skt(1, 1, 0, 0, 0, 0), reaction_lotka_volterra(lv(2, 1, 1, 1, 1, 1)));
  const Grid one = Grid::line(1, 1.0);
  StateField a(2, 1), b(2, 1);
  a.u[0] = {0.5}, a.u[1] = {0.7};
  b.u[0] = {0.52}, b.u[1] = {0.69};
  auto phi = [](double x) { return x * (std::log(x) - 1); };
  const double de = (phi(0.52) + phi(0.69) - phi(0.5) - phi(0.7)) / 0.01;
  const double src = (2 - 0.5 - 0.7) * 0.5 * std::log(0.5) + (1 - 0.5 - 0.7) * 0.7 * std::log(0.7);
  CHECK(entropy_inequality_residual(lvm, one, a, b, 0.01, Vec::Ones(2)) == doctest::Approx(de - src));
}

TEST_CASE("monitor lq and llogl norms") {
  const Grid g = Grid::line(5, 1.0);
  for (double q : {1.0, 2.0, 3.0, 4.5, kInfNorm}) CHECK(lq_norm(g, filled(g, 1, 2.5), q) == doctest::Approx(2.5));
  StateField s(1, 3);
  s.u[0] = {1, 5, 2};
  CHECK(lq_norm(Grid::line(3, 1.0), s, kInfNorm) == 5.0);
  CHECK_THROWS_AS(lq_norm(g, filled(g, 1, 1.0), 0.5), DomainError);

  const StateField r = random_state(3, g, 2);
  CHECK(lq_norm(g, r, 1.0) == mass(g, r, Vec::Ones(3)));

  CHECK(llogl_norm(g, filled(g, 1, 0.0)) == 0.0);
  CHECK(llogl_norm(g, filled(g, 1, 1.0)) == doctest::Approx(std::log(std::exp(1.0) + 1.0)));
  StateField bigger = r;
  for (auto& row : bigger.u)
    for (auto& x : row) x *= 1.1;
  CHECK(llogl_norm(g, bigger) > llogl_norm(g, r));
}

TEST_CASE("monitor time integrals") {
  const Grid g = Grid::line(4, 1.0);
  std::vector<StateField> series;
  for (double t : {0.0, 0.3, 1.0, 2.0}) {
    StateField s = filled(g, 2, 1.5);
    s.t = t;
    series.push_back(s);
  }
  const auto n = time_integral_norms(g, series);
  CHECK(n.int_l3 == doctest::Approx(2.0 * 2 * std::pow(1.5, 3)).epsilon(1e-15));
  CHECK(n.int_l2 == doctest::Approx(2.0 * 2 * 1.5 * 1.5).epsilon(1e-15));
  for (auto& s : series) s = StateField(2, g.cells(), 0.0), s.t = 1.0;
  series[0].t = 0.0;
  const auto z = time_integral_norms(g, std::span<const StateField>(series).first(2));
  CHECK(z.int_l2 == 0.0);
  CHECK(z.int_l3 == 0.0);
  CHECK_THROWS_AS(time_integral_norms(g, std::span<const StateField>(series).first(1)), InputError);
}

TEST_CASE("monitor lp energy residual") {
  const auto m = make_semilinear(vec({1}), vec({1}), reaction_none(1));
  const Grid g = Grid::line(6, 1.0);
  const StateField s = filled(g, 1, 2.0);
  for (double p : {1.0, 2.0, 3.0}) CHECK(lp_energy_residual(m, g, s, s, 0.1, p, Vec::Ones(1)) == 0.0);
  CHECK_THROWS_AS(lp_energy_residual(m, g, s, s, 0.1, 0.0, Vec::Ones(1)), DomainError);

  // single cell ODE u' = -u: residual is O(dt)
  const auto decay = make_semilinear(vec({1}), vec({1}), reaction_linear_decay(1));
  const Grid one = Grid::line(1, 1.0);
  double prev = 0.0;
  for (double dt : {0.04, 0.02, 0.01}) {
    StateField a(1, 1, 1.0), b(1, 1, std::exp(-dt));
    const double r = std::abs(lp_energy_residual(decay, one, a, b, dt, 2.0, Vec::Ones(1)));
    if (prev > 0.0) CHECK(prev / r == doctest::Approx(2.0).epsilon(0.05));
    prev = r;
  }
}

TEST_CASE("monitor sup-norm envelope") {
  std::vector<double> t, v;
  for (int k = 0; k <= 20; ++k) t.push_back(0.1 * k);
  v.assign(t.size(), 4.0);
  auto e = sup_norm_envelope(t, v);
  CHECK(e.c2 == doctest::Approx(0.0));
  CHECK(e.c3 == doctest::Approx(4.0));
  CHECK(e.ok);

  v.clear();
  for (double x : t) v.push_back(2.0 * std::exp(3.0 * x));
  e = sup_norm_envelope(t, v);
  CHECK(e.c2 == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(e.c3 == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(e.ok);

  v.clear();
  for (double x : t) v.push_back(std::exp(x * x));
  CHECK_FALSE(sup_norm_envelope(t, v).ok);

  // logistic-type plateau stays inside the envelope
  v.clear();
  for (double x : t) v.push_back(1.0 / (1.0 + 9.0 * std::exp(-3.0 * x)));
  CHECK(sup_norm_envelope(t, v).ok);

  CHECK_THROWS_AS(sup_norm_envelope(std::span(t).first(2), std::span(v).first(2)), InputError);
}

TEST_CASE("monitor run bundle") {
  const auto m = skt_model(skt(1, 1, 1, 0, 0, 1), reaction_mass_dissipative(2));
  const Grid g = Grid::line(16, 1.0);
  SolverConfig cfg;
  cfg.t_end = 0.2;
  cfg.dt_max = 0.01;
  cfg.norm_powers = {2.0, kInfNorm};
  const RunResult r = run(m, g, random_state(2, g, 9), cfg);
  const auto& b = r.monitors;
  CHECK(b.series.size() == 11);
  CHECK(b.rows() == r.steps + 1);
  for (const auto& s : b.series) CHECK(s.value.size() == b.rows());
  CHECK(std::isnan(b.get("entropy_residual").value.front()));
  CHECK(b.get("linf").value.back() == doctest::Approx(lq_norm(g, r.snapshots.back(), kInfNorm)));
  CHECK(b.q_sup.at(1) >= b.get("linf").value.front());
  CHECK(b.steps.size() == r.steps);
  for (const auto& st : b.steps) CHECK(st.lp_residuals.size() == 3);
  CHECK_THROWS_AS(b.get("nope"), InputError);
  CHECK(b.initial_mass == doctest::Approx(mass(g, r.snapshots.front(), Vec::Ones(2))));
}
