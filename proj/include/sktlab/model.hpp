#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sktlab/types.hpp"

namespace sktlab {

/// Lotka-Volterra competition table for two species:
/// f_i(u) = (a_i - b_i u_1 - c_i u_2) u_i.
struct LvTable {
  double a[2] = {0.0, 0.0};
  double b[2] = {0.0, 0.0};
  double c[2] = {0.0, 0.0};

  bool operator==(const LvTable&) const = default;
};

/// Coefficients of the linear cross-diffusion law d_i(u) = a0_i + sum_j a_ij u_j.
struct SktCoefficients {
  Vec a0;
  Mat a;
  std::optional<LvTable> lv;

  int species() const { return static_cast<int>(a0.size()); }
};

enum class GrowthClass { linear, quadratic, cubic, custom };
enum class Preset { skt, semilinear, custom };

const char* to_string(GrowthClass g);
const char* to_string(Preset p);

struct DiffusionModel {
  std::function<Vec(const Vec&)> eval;
  /// (dd_i/du_j); may be empty for custom models.
  std::function<Mat(const Vec&)> derivative;
  double c0 = 0.0;
};

struct ReactionModel {
  std::function<Vec(const Vec&)> eval;
  /// (df_i/du_i); may be empty.
  std::function<Vec(const Vec&)> diag_derivative;
  GrowthClass growth = GrowthClass::custom;
  std::string name = "custom";
};

/// Immutable description of one system: species count, time constants,
/// diffusion law and reaction law.
struct ModelSpec {
  int n = 0;
  Vec tau;
  DiffusionModel diffusion;
  ReactionModel reaction;
  Preset preset = Preset::custom;
  /// Present for the skt and semilinear presets (semilinear has a == 0).
  std::optional<SktCoefficients> skt;
};

// Reaction laws.
ReactionModel reaction_none(int n);
ReactionModel reaction_lotka_volterra(const LvTable& lv);
/// f_i = -k u_i sum_j u_j
ReactionModel reaction_mass_dissipative(int n, double k = 1.0);
/// f_i = -k u_i (sum_j u_j)^2
ReactionModel reaction_cubic_dissipative(int n, double k = 1.0);
/// f_i = r_i u_i - u_i sum_j u_j
ReactionModel reaction_logistic(const std::vector<double>& r);
/// f_i = -k u_i
ReactionModel reaction_linear_decay(int n, double k = 1.0);

// Model factories. Throw DomainError on invalid coefficients.
ModelSpec make_skt(const SktCoefficients& c, const Vec& tau, ReactionModel reaction);
ModelSpec make_semilinear(const Vec& d, const Vec& tau, ReactionModel reaction);
ModelSpec make_custom(int n, const Vec& tau, DiffusionModel diffusion, ReactionModel reaction);

/// Copy of m whose diffusion derivative falls back to central differences
/// (step 1e-6 max(1,|u_j|)) when no analytic derivative was supplied.
ModelSpec with_derivative_fallback(const ModelSpec& m);

Vec eval_d(const ModelSpec& m, const Vec& u);
Vec eval_f(const ModelSpec& m, const Vec& u);

/// A_ij = (dd_i/du_j) u_i + delta_ij d_i(u)
Mat diffusion_jacobian(const ModelSpec& m, const Vec& u);

/// A^alpha_ij = A_ij (u_i/u_j)^alpha; requires u > 0 and alpha > 0.
Mat weighted_matrix(const ModelSpec& m, const Vec& u, double alpha);

/// Symmetric mobility matrix
/// p_ij = (dd_i/du_j + dd_j/du_i) u_i u_j + delta_ij (d_i u_j + d_j u_i).
Mat mobility_matrix(const ModelSpec& m, const Vec& u);

/// B = A(u) diag(u); requires u > 0.
Mat onsager_matrix(const ModelSpec& m, const Vec& u);

}  // namespace sktlab
