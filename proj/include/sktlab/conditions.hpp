#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sktlab/model.hpp"
#include "sktlab/sampling.hpp"

namespace sktlab {

enum class VerdictStatus { holds_closed_form, holds_on_box, fails };

const char* to_string(VerdictStatus s);

struct ConditionVerdict {
  std::string name;
  VerdictStatus status = VerdictStatus::fails;
  /// State (or, for coefficient-only conditions, the offending coefficients)
  /// where the condition is violated. Always present when status == fails.
  std::optional<std::vector<double>> witness;
  /// Fitted constants: C of a growth bound, certified delta, (delta, C) pairs,
  /// detailed-balance weights, ...
  std::vector<double> constants;
  std::string detail;

  bool holds() const { return status != VerdictStatus::fails; }
};

enum class Applicability { applies, fails, undetermined };

const char* to_string(Applicability a);

struct TheoremStatus {
  Applicability state = Applicability::undetermined;
  std::vector<std::string> hypotheses;
  std::vector<std::string> failed;
  std::vector<std::string> undetermined;
  std::vector<std::string> assumes;
};

struct ConditionReport {
  std::vector<ConditionVerdict> verdicts;
  std::map<std::string, TheoremStatus> theorems;  // Thm1 .. Thm4

  const ConditionVerdict* find(const std::string& name) const;
  bool any_theorem_applies() const;
};

/// Tolerances shared by the sampled checks.
inline constexpr double kSignSlack = 1e-12;
inline constexpr double kPsdSlack = 1e-9;
/// Log-log slope of a ratio over the outer radii above which growth is declared.
inline constexpr double kGrowthSlope = 0.25;

enum class DiffusionForm { bounded, quadratic };

// Sampled checks over a box.
ConditionVerdict check_positive_diffusion(const ModelSpec& m, const SampleBox& box);
ConditionVerdict check_quasi_positive(const ModelSpec& m, const SampleBox& box);
ConditionVerdict check_mass_dissipation(const ModelSpec& m, const SampleBox& box);
ConditionVerdict check_growth(const ModelSpec& m, const SampleBox& box, GrowthClass cls);
ConditionVerdict check_P_psd(const ModelSpec& m, const SampleBox& box);
ConditionVerdict check_A_alpha(const ModelSpec& m, const SampleBox& box, const std::vector<double>& alphas,
                               double delta);
ConditionVerdict check_diffusion_bounds(const ModelSpec& m, const SampleBox& box, DiffusionForm form);
ConditionVerdict check_reaction_entropy_bound(const ModelSpec& m, const SampleBox& box, int order);

// Closed forms on SKT coefficient tables (two species unless noted).
bool skt_mobility_condition(const SktCoefficients& c);     // a11 a21 = a22 a12 = 0, (a12+a21)^2 >= 16(a12 a21 + 4 a11 a22)
bool skt_no_cross_diffusion(const SktCoefficients& c);     // a12 = a21 = 0
bool skt_coercive_diffusion(const SktCoefficients& c);     // 4 a11 a22 >= (a12+a21)^2, a11 > 0, a22 > 0
bool skt_yagi_condition(const SktCoefficients& c);         // 64 a11 a22 >= a12 a21
bool skt_competition(const SktCoefficients& c);            // a2 c1 > a1 c2, a1 b2 > a2 b1
/// Exact criterion for P >= 0 on the whole orthant when the base diffusion a0
/// is neglected: 16 a11 a22 + 16 sqrt(a11 a22 a12 a21) >= (a12 - a21)^2.
/// Sufficient for the full P (the a0 terms only add a PSD diagonal).
bool skt_mobility_psd_sufficient(const SktCoefficients& c);
/// Any N >= 2. Weights pi come back in `constants`.
ConditionVerdict check_detailed_balance(const SktCoefficients& c);

struct ApplicabilityOptions {
  std::vector<double> alphas = {0.5, 1.0, 2.0, 5.0};
  /// Lower bound substituted for zero box bounds in checks that need u > 0.
  double interior_floor = 0.01;
};

/// Runs every hypothesis check and maps the results onto the four theorems.
ConditionReport theorem_applicability(const ModelSpec& m, const SampleBox& box,
                                      const ApplicabilityOptions& opts = {});

}  // namespace sktlab
