#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sktlab/errors.hpp"
#include "sktlab/model.hpp"

using namespace sktlab;
using namespace testutil;

namespace {

bool close(const Mat& a, const Mat& b, double tol) { return (a - b).cwiseAbs().maxCoeff() <= tol; }

}  // namespace

TEST_CASE("diffusion and reaction evaluation at hand-computed points") {
  const ModelSpec m = skt_model(skt(1, 1, 2, 3, 5, 4));
  CHECK(close(eval_d(m, vec({1, 1})), vec({6, 10}), 0.0));
  CHECK(close(eval_d(m, vec({0, 0})), vec({1, 1}), 0.0));

  const ModelSpec semi = make_semilinear(vec({2, 3}), Vec::Ones(2), reaction_none(2));
  CHECK(close(eval_d(semi, vec({7, 9})), vec({2, 3}), 0.0));

  const ModelSpec lvm = skt_model(skt(1, 1, 0, 0, 0, 0), reaction_lotka_volterra(lv(1, 1, 1, 0, 0, 1)));
  CHECK(close(eval_f(lvm, vec({1, 1})), vec({0, 0}), 0.0));
  CHECK(close(eval_f(lvm, vec({0, 0})), vec({0, 0}), 0.0));

  const ModelSpec md = skt_model(skt(1, 1, 0, 0, 0, 0), reaction_mass_dissipative(2));
  CHECK(close(eval_f(md, vec({1, 2})), vec({-3, -6}), 0.0));
}

TEST_CASE("evaluators reject negative states") {
  const ModelSpec m = skt_model(skt(1, 1, 0, 0, 0, 0));
  CHECK_THROWS_AS(eval_d(m, vec({-1e-3, 1})), DomainError);
  CHECK_THROWS_AS(eval_f(m, vec({1, -2})), DomainError);
}

TEST_CASE("factories validate coefficients") {
  CHECK_THROWS_AS(skt_model(skt(0, 1, 0, 0, 0, 0)), DomainError);
  CHECK_THROWS_AS(skt_model(skt(1, 1, -1, 0, 0, 0)), DomainError);
  CHECK_THROWS_AS(make_skt(skt(1, 1, 0, 0, 0, 0), vec({1, 0}), reaction_none(2)), DomainError);
  SktCoefficients three;
  three.a0 = Vec::Ones(3);
  three.a = Mat::Zero(3, 3);
  three.lv = lv(1, 1, 1, 1, 1, 1);
  CHECK_THROWS_AS(make_skt(three, Vec::Ones(3), reaction_none(3)), DomainError);
}

TEST_CASE("diffusion jacobian matches hand values and the finite-difference oracle") {
  const ModelSpec m = skt_model(skt(1, 1, 2, 3, 5, 4));
  CHECK(close(diffusion_jacobian(m, vec({1, 1})), mat2(8, 3, 5, 14), 1e-15));
  CHECK(close(diffusion_jacobian(m, vec({0, 0})), mat2(1, 0, 0, 1), 0.0));
  const ModelSpec semi = make_semilinear(vec({2, 3}), Vec::Ones(2), reaction_none(2));
  CHECK(close(diffusion_jacobian(semi, vec({4, 5})), mat2(2, 0, 0, 3), 0.0));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(0.0, 5.0), base(0.1, 2.0), state(0.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const oracle::Skt o{{base(rng), base(rng)}, {{{coef(rng), coef(rng)}, {coef(rng), coef(rng)}}}};
    const ModelSpec mk = skt_model(skt(o.a0[0], o.a0[1], o.a[0][0], o.a[0][1], o.a[1][0], o.a[1][1]));
    const oracle::V2 u{state(rng), state(rng)};
    const oracle::M2 fd = oracle::fd_jacobian(o, u);
    const Mat a = diffusion_jacobian(mk, vec({u[0], u[1]}));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(a(i, j) == doctest::Approx(fd[i][j]).epsilon(1e-8));
  }
}

TEST_CASE("weighted matrix") {
  const ModelSpec m = skt_model(skt(1, 1, 2, 3, 5, 4));
  CHECK(close(weighted_matrix(m, vec({1, 1}), 0.7), diffusion_jacobian(m, vec({1, 1})), 0.0));

  // A at u=(2,1) recomputed, then off-diagonals scaled by (u_i/u_j)^alpha.
  const Mat a = diffusion_jacobian(m, vec({2, 1}));
  const Mat w = weighted_matrix(m, vec({2, 1}), 1.0);
  CHECK(w(0, 1) == doctest::Approx(a(0, 1) * 2.0));
  CHECK(w(1, 0) == doctest::Approx(a(1, 0) * 0.5));
  CHECK(w(0, 0) == a(0, 0));

  const ModelSpec diag = skt_model(skt(1.5, 0.5, 2, 0, 0, 3));
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(close(weighted_matrix(diag, vec({2, 7}), alpha), mat2(1.5 + 8, 0, 0, 0.5 + 42), 1e-13));
  }

  CHECK_THROWS_AS(weighted_matrix(m, vec({0, 1}), 1.0), SingularWeightError);
  CHECK_THROWS_AS(weighted_matrix(m, vec({1, 1}), 0.0), DomainError);
  CHECK_THROWS_AS(weighted_matrix(m, vec({1, 1}), -1.0), DomainError);
}

TEST_CASE("weighted quadratic form equals direct summation") {
  const ModelSpec m = skt_model(skt(1, 2, 0.5, 3, 1, 0.25));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pos(0.05, 8.0), any(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const Vec u = vec({pos(rng), pos(rng)});
    const Vec eta = vec({any(rng), any(rng)});
    const double p = 1.0 + 3.0 * (any(rng) + 1.0);
    const double alpha = 0.5 * (p - 1.0);
    if (!(alpha > 0.0)) continue;
    const Mat a = diffusion_jacobian(m, u);
    double direct = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) direct += a(i, j) * std::pow(u[i] / u[j], alpha) * eta[i] * eta[j];
    CHECK(eta.dot(weighted_matrix(m, u, alpha) * eta) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("mobility matrix") {
  const ModelSpec m = skt_model(skt(1, 1, 0, 4, 0, 0));
  CHECK(close(mobility_matrix(m, vec({1, 1})), mat2(10, 4, 4, 2), 1e-14));
  CHECK(close(mobility_matrix(m, vec({0, 0})), Mat::Zero(2, 2), 0.0));
  const ModelSpec one = make_semilinear(vec({3}), Vec::Ones(1), reaction_none(1));
  CHECK(mobility_matrix(one, vec({2}))(0, 0) == doctest::Approx(12.0));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coef(0.0, 5.0), base(0.1, 2.0), state(0.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const oracle::Skt o{{base(rng), base(rng)}, {{{coef(rng), coef(rng)}, {coef(rng), coef(rng)}}}};
    const ModelSpec mk = skt_model(skt(o.a0[0], o.a0[1], o.a[0][0], o.a[0][1], o.a[1][0], o.a[1][1]));
    const oracle::V2 u{state(rng), state(rng)};
    const Mat p = mobility_matrix(mk, vec({u[0], u[1]}));
    const oracle::M2 ref = oracle::skt_mobility(o, u);
    CHECK(p(0, 1) == p(1, 0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(p(i, j) == doctest::Approx(ref[i][j]).epsilon(1e-13));
    if (u[0] > 0 && u[1] > 0) {
      const Mat b = onsager_matrix(mk, vec({u[0], u[1]}));
      CHECK(close(p, b + b.transpose(), 1e-12 * (1.0 + p.cwiseAbs().maxCoeff())));
    }
  }
}

TEST_CASE("onsager matrix") {
  const ModelSpec m = skt_model(skt(1, 1, 2, 3, 5, 4));
  CHECK(close(onsager_matrix(m, vec({1, 1})), diffusion_jacobian(m, vec({1, 1})), 0.0));
  const Vec u = vec({2, 1});
  const Mat a = diffusion_jacobian(m, u);
  const Mat b = onsager_matrix(m, u);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(b(i, j) == a(i, j) * u[j]);
  const ModelSpec semi = make_semilinear(vec({2, 3}), Vec::Ones(2), reaction_none(2));
  CHECK(close(onsager_matrix(semi, vec({4, 5})), mat2(8, 0, 0, 15), 0.0));
  CHECK_THROWS_AS(onsager_matrix(m, vec({1, 0})), SingularWeightError);
}

TEST_CASE("custom models need a derivative unless the fallback is requested") {
  DiffusionModel dm;
  dm.eval = [](const Vec& u) { return Vec((1.0 + u.array().square()).matrix()); };
  dm.c0 = 1.0;
  const ModelSpec m = make_custom(2, Vec::Ones(2), dm, reaction_none(2));
  CHECK_THROWS_AS(diffusion_jacobian(m, vec({1, 2})), CapabilityError);
  const ModelSpec fb = with_derivative_fallback(m);
  // d_i = 1 + u_i^2, so A = diag(1 + 3 u_i^2)
  CHECK(close(diffusion_jacobian(fb, vec({1, 2})), mat2(4, 0, 0, 13), 1e-8));
}

TEST_CASE("reaction presets") {
  const Vec u = vec({0.5, 2.0});
  CHECK(close(eval_f(skt_model(skt(1, 1, 0, 0, 0, 0), reaction_cubic_dissipative(2, 2.0)), u),
              vec({-2 * 0.5 * 6.25, -2 * 2.0 * 6.25}), 1e-14));
  CHECK(close(eval_f(skt_model(skt(1, 1, 0, 0, 0, 0), reaction_logistic({1.0, 3.0})), u),
              vec({0.5 - 0.5 * 2.5, 6.0 - 2.0 * 2.5}), 1e-14));
  CHECK(close(eval_f(skt_model(skt(1, 1, 0, 0, 0, 0), reaction_linear_decay(2, 0.5)), u), vec({-0.25, -1.0}), 0.0));
  CHECK(reaction_lotka_volterra(lv(1, 1, 1, 1, 1, 1)).growth == GrowthClass::quadratic);
  CHECK(reaction_cubic_dissipative(2).growth == GrowthClass::cubic);
  CHECK(reaction_linear_decay(2).growth == GrowthClass::linear);
}
