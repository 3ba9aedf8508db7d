#include "sktlab/model.hpp"

#include <cmath>
#include <string>

#include "sktlab/errors.hpp"

namespace sktlab {

const char* to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::linear: return "linear";
    case GrowthClass::quadratic: return "quadratic";
    case GrowthClass::cubic: return "cubic";
    case GrowthClass::custom: return "custom";
  }
  return "custom";
}

const char* to_string(Preset p) {
  switch (p) {
    case Preset::skt: return "skt";
    case Preset::semilinear: return "semilinear";
    case Preset::custom: return "custom";
  }
  return "custom";
}

namespace {

void require_size(const ModelSpec& m, const Vec& u) {
  if (u.size() != m.n) {
    throw DomainError("state has " + std::to_string(u.size()) + " components, model has " +
                      std::to_string(m.n) + " species");
  }
}

void require_nonnegative(const ModelSpec& m, const Vec& u) {
  require_size(m, u);
  for (int i = 0; i < u.size(); ++i) {
    if (!(u[i] >= 0.0)) {
      throw DomainError("negative or non-finite state component u_" + std::to_string(i + 1));
    }
  }
}

void require_positive(const ModelSpec& m, const Vec& u) {
  require_nonnegative(m, u);
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] == 0.0) {
      throw SingularWeightError("u_" + std::to_string(i + 1) +
                                " = 0; clamp the state at a positivity floor first");
    }
  }
}

void validate_tau(int n, const Vec& tau) {
  if (n < 1 || n > kMaxSpecies) {
    throw DomainError("species count must be in [1, " + std::to_string(kMaxSpecies) + "]");
  }
  if (tau.size() != n) throw DomainError("tau length does not match species count");
  for (int i = 0; i < n; ++i) {
    if (!(tau[i] > 0.0) || !std::isfinite(tau[i])) throw DomainError("tau entries must be positive");
  }
}

Mat central_difference(const std::function<Vec(const Vec&)>& d, const Vec& u) {
  const int n = static_cast<int>(u.size());
  Mat out(n, n);
  for (int j = 0; j < n; ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(u[j]));
    Vec up = u, um = u;
    up[j] += h;
    um[j] -= h;
    out.col(j) = (d(up) - d(um)) / (2.0 * h);
  }
  return out;
}

}  // namespace

ReactionModel reaction_none(int n) {
  ReactionModel r;
  r.eval = [n](const Vec&) { return Vec::Zero(n).eval(); };
  r.diag_derivative = [n](const Vec&) { return Vec::Zero(n).eval(); };
  r.growth = GrowthClass::linear;
  r.name = "none";
  return r;
}

ReactionModel reaction_lotka_volterra(const LvTable& lv) {
  ReactionModel r;
  r.eval = [lv](const Vec& u) {
    Vec f(2);
    for (int i = 0; i < 2; ++i) f[i] = (lv.a[i] - lv.b[i] * u[0] - lv.c[i] * u[1]) * u[i];
    return f;
  };
  r.diag_derivative = [lv](const Vec& u) {
    Vec g(2);
    g[0] = lv.a[0] - 2.0 * lv.b[0] * u[0] - lv.c[0] * u[1];
    g[1] = lv.a[1] - lv.b[1] * u[0] - 2.0 * lv.c[1] * u[1];
    return g;
  };
  r.growth = GrowthClass::quadratic;
  r.name = "lotka_volterra";
  return r;
}

ReactionModel reaction_mass_dissipative(int n, double k) {
  ReactionModel r;
  r.eval = [k](const Vec& u) { return (-k * u.sum() * u).eval(); };
  r.diag_derivative = [k](const Vec& u) {
    const double s = u.sum();
    return (-k * (Vec::Constant(u.size(), s) + u)).eval();
  };
  r.growth = GrowthClass::quadratic;
  r.name = "mass_dissipative";
  (void)n;
  return r;
}

ReactionModel reaction_cubic_dissipative(int n, double k) {
  ReactionModel r;
  r.eval = [k](const Vec& u) {
    const double s = u.sum();
    return (-k * s * s * u).eval();
  };
  r.diag_derivative = [k](const Vec& u) {
    const double s = u.sum();
    return (-k * (Vec::Constant(u.size(), s * s) + 2.0 * s * u)).eval();
  };
  r.growth = GrowthClass::cubic;
  r.name = "cubic_dissipative";
  (void)n;
  return r;
}

ReactionModel reaction_logistic(const std::vector<double>& rates) {
  Vec rv(static_cast<int>(rates.size()));
  for (int i = 0; i < rv.size(); ++i) rv[i] = rates[static_cast<size_t>(i)];
  ReactionModel r;
  r.eval = [rv](const Vec& u) {
    const double s = u.sum();
    return (rv.cwiseProduct(u) - s * u).eval();
  };
  r.diag_derivative = [rv](const Vec& u) {
    const double s = u.sum();
    return (rv - Vec::Constant(u.size(), s) - u).eval();
  };
  r.growth = GrowthClass::quadratic;
  r.name = "logistic";
  return r;
}

ReactionModel reaction_linear_decay(int n, double k) {
  ReactionModel r;
  r.eval = [k](const Vec& u) { return (-k * u).eval(); };
  r.diag_derivative = [n, k](const Vec&) { return Vec::Constant(n, -k).eval(); };
  r.growth = GrowthClass::linear;
  r.name = "linear_decay";
  return r;
}

ModelSpec make_skt(const SktCoefficients& c, const Vec& tau, ReactionModel reaction) {
  const int n = c.species();
  validate_tau(n, tau);
  if (c.a.rows() != n || c.a.cols() != n) throw DomainError("cross-diffusion table must be N x N");
  for (int i = 0; i < n; ++i) {
    if (!(c.a0[i] > 0.0) || !std::isfinite(c.a0[i])) throw DomainError("a0 entries must be positive");
    for (int j = 0; j < n; ++j) {
      if (!(c.a(i, j) >= 0.0) || !std::isfinite(c.a(i, j)))
        throw DomainError("a_ij entries must be nonnegative");
    }
  }
  if (c.lv && n != 2) throw DomainError("Lotka-Volterra table requires two species");

  ModelSpec m;
  m.n = n;
  m.tau = tau;
  m.preset = Preset::skt;
  m.skt = c;
  const Vec a0 = c.a0;
  const Mat a = c.a;
  m.diffusion.eval = [a0, a](const Vec& u) { return (a0 + a * u).eval(); };
  m.diffusion.derivative = [a](const Vec&) { return a; };
  m.diffusion.c0 = a0.minCoeff();
  m.reaction = std::move(reaction);
  return m;
}

ModelSpec make_semilinear(const Vec& d, const Vec& tau, ReactionModel reaction) {
  SktCoefficients c;
  c.a0 = d;
  c.a = Mat::Zero(d.size(), d.size());
  ModelSpec m = make_skt(c, tau, std::move(reaction));
  m.preset = Preset::semilinear;
  return m;
}

ModelSpec make_custom(int n, const Vec& tau, DiffusionModel diffusion, ReactionModel reaction) {
  validate_tau(n, tau);
  if (!diffusion.eval || !reaction.eval) throw CapabilityError("custom model needs d and f evaluators");
  ModelSpec m;
  m.n = n;
  m.tau = tau;
  m.diffusion = std::move(diffusion);
  m.reaction = std::move(reaction);
  m.preset = Preset::custom;
  return m;
}

ModelSpec with_derivative_fallback(const ModelSpec& m) {
  if (m.diffusion.derivative) return m;
  ModelSpec out = m;
  auto d = m.diffusion.eval;
  out.diffusion.derivative = [d](const Vec& u) { return central_difference(d, u); };
  return out;
}

Vec eval_d(const ModelSpec& m, const Vec& u) {
  require_nonnegative(m, u);
  return m.diffusion.eval(u);
}

Vec eval_f(const ModelSpec& m, const Vec& u) {
  require_nonnegative(m, u);
  return m.reaction.eval(u);
}

Mat diffusion_jacobian(const ModelSpec& m, const Vec& u) {
  require_nonnegative(m, u);
  if (!m.diffusion.derivative) {
    throw CapabilityError("diffusion model has no derivative evaluator");
  }
  const Vec d = m.diffusion.eval(u);
  Mat a = m.diffusion.derivative(u);
  for (int i = 0; i < m.n; ++i) {
    a.row(i) *= u[i];
    a(i, i) += d[i];
  }
  return a;
}

Mat weighted_matrix(const ModelSpec& m, const Vec& u, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  require_positive(m, u);
  Mat a = diffusion_jacobian(m, u);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (i != j) a(i, j) *= std::pow(u[i] / u[j], alpha);
    }
  }
  return a;
}

Mat mobility_matrix(const ModelSpec& m, const Vec& u) {
  require_nonnegative(m, u);
  if (!m.diffusion.derivative) {
    throw CapabilityError("diffusion model has no derivative evaluator");
  }
  const Vec d = m.diffusion.eval(u);
  const Mat dd = m.diffusion.derivative(u);
  Mat p(m.n, m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = i; j < m.n; ++j) {
      double v = (dd(i, j) + dd(j, i)) * u[i] * u[j];
      if (i == j) v += 2.0 * d[i] * u[i];
      p(i, j) = v;
      p(j, i) = v;
    }
  }
  return p;
}

Mat onsager_matrix(const ModelSpec& m, const Vec& u) {
  require_positive(m, u);
  return diffusion_jacobian(m, u) * u.asDiagonal();
}

}  // namespace sktlab
