#include "sktlab/conditions.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "sktlab/errors.hpp"

namespace sktlab {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds_closed_form: return "holds-closed-form";
    case VerdictStatus::holds_on_box: return "holds-on-box";
    case VerdictStatus::fails: return "fails";
  }
  return "fails";
}

const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::applies: return "applies";
    case Applicability::fails: return "fails";
    case Applicability::undetermined: return "undetermined";
  }
  return "undetermined";
}

const ConditionVerdict* ConditionReport::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool ConditionReport::any_theorem_applies() const {
  return std::any_of(theorems.begin(), theorems.end(),
                     [](const auto& kv) { return kv.second.state == Applicability::applies; });
}

namespace {

constexpr char kBoxCaveat[] = "box-limited certificate; asymptotics probed along rays";

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

ConditionVerdict holds_on_box(std::string name, std::vector<double> constants = {}, std::string detail = {}) {
  return {std::move(name), VerdictStatus::holds_on_box, std::nullopt, std::move(constants), std::move(detail)};
}

ConditionVerdict fails_at(std::string name, const Vec& witness, std::vector<double> constants = {},
                          std::string detail = {}) {
  return {std::move(name), VerdictStatus::fails, to_std(witness), std::move(constants), std::move(detail)};
}

ConditionVerdict closed_form(std::string name, bool ok, const SktCoefficients& c, std::vector<double> constants = {}) {
  ConditionVerdict v;
  v.name = std::move(name);
  v.status = ok ? VerdictStatus::holds_closed_form : VerdictStatus::fails;
  v.constants = std::move(constants);
  if (!ok) {
    v.witness = std::vector<double>{c.a(0, 0), c.a(0, 1), c.a(1, 0), c.a(1, 1)};
    v.detail = "witness holds the coefficients (a11, a12, a21, a22)";
  }
  return v;
}

void require_two_species(const SktCoefficients& c) {
  if (c.species() != 2) throw CapabilityError("closed form is only available for two species");
}

void require_interior(const SampleBox& box) {
  box.validate();
  if (!box.interior()) throw DomainError("condition needs u > 0: sample box touches zero");
}

double min_eigenvalue(const Mat& s, double* spectral_norm) {
  Eigen::SelfAdjointEigenSolver<Mat> es(s, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  if (spectral_norm) *spectral_norm = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
  return ev.minCoeff();
}

double outer_radius(const SampleBox& box) { return std::max(1.0, box.upper.norm()); }

struct Probe {
  bool triggered = false;
  Vec witness;
  double slope = 0.0;
};

enum class Trend { growth, decay };

// Follows the ratio along rays at radii R 2^k, k = 0..19, and inspects the
// outer 20% of those radii. Growth: ratio positive, strictly increasing,
// log-log slope above kGrowthSlope. Decay: ratio strictly decreasing toward
// zero with slope below -kGrowthSlope, or non-positive at the last radius.
Probe probe_rays(const std::function<double(const Vec&)>& ratio, int n, double radius, bool strictly_positive,
                 Trend trend) {
  constexpr int kRadii = 20;
  constexpr int kOuter = kRadii / 5;
  Probe out;
  for (const Vec& dir : probe_directions(n, strictly_positive)) {
    std::array<double, kOuter> r{};
    std::array<double, kOuter> g{};
    for (int k = 0; k < kOuter; ++k) {
      r[static_cast<size_t>(k)] = radius * std::ldexp(1.0, kRadii - kOuter + k);
      g[static_cast<size_t>(k)] = ratio(r[static_cast<size_t>(k)] * dir);
    }
    const Vec last = r.back() * dir;
    if (trend == Trend::decay && !(g.back() > 0.0)) {
      return {true, last, -std::numeric_limits<double>::infinity()};
    }
    bool monotone = true;
    for (int k = 1; k < kOuter; ++k) {
      const double prev = g[static_cast<size_t>(k - 1)], cur = g[static_cast<size_t>(k)];
      monotone = monotone && (trend == Trend::growth ? cur > prev : cur < prev);
    }
    if (!monotone || !(g.front() > 0.0) || !std::isfinite(g.back())) continue;
    const double slope = std::log(g.back() / g.front()) / std::log(r.back() / r.front());
    if ((trend == Trend::growth && slope > kGrowthSlope) || (trend == Trend::decay && slope < -kGrowthSlope)) {
      return {true, last, slope};
    }
  }
  return out;
}

std::string slope_note(const char* what, double slope) {
  return std::string(what) + " along ray, log-log slope " + std::to_string(slope);
}

}  // namespace

ConditionVerdict check_positive_diffusion(const ModelSpec& m, const SampleBox& box) {
  double c0 = std::numeric_limits<double>::infinity();
  for (const Vec& u : box_samples(box)) {
    const Vec d = m.diffusion.eval(u);
    const double lo = d.minCoeff();
    if (!(lo > 0.0)) return fails_at("positive_diffusion", u, {lo});
    c0 = std::min(c0, lo);
  }
  return holds_on_box("positive_diffusion", {c0}, kBoxCaveat);
}

ConditionVerdict check_quasi_positive(const ModelSpec& m, const SampleBox& box) {
  for (int i = 0; i < m.n; ++i) {
    for (const Vec& u : face_samples(box, i)) {
      const Vec f = m.reaction.eval(u);
      if (f[i] < -kSignSlack) {
        return fails_at("quasi_positivity", u, {}, "f_" + std::to_string(i + 1) + " < 0 on its zero face");
      }
    }
  }
  return holds_on_box("quasi_positivity");
}

ConditionVerdict check_mass_dissipation(const ModelSpec& m, const SampleBox& box) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Vec& u : box_samples(box)) {
    const double s = m.reaction.eval(u).sum();
    if (s > kSignSlack) return fails_at("mass_dissipation", u, {s}, "sum_i f_i(u) > 0");
    worst = std::max(worst, s);
  }
  return holds_on_box("mass_dissipation", {worst});
}

ConditionVerdict check_growth(const ModelSpec& m, const SampleBox& box, GrowthClass cls) {
  if (cls == GrowthClass::custom) throw DomainError("growth check needs linear, quadratic or cubic");
  const bool needs_derivative = cls != GrowthClass::linear;
  if (needs_derivative && !m.reaction.diag_derivative) {
    throw CapabilityError("growth class requires the diagonal reaction derivative");
  }
  const std::string name = std::string("growth_") + to_string(cls);
  const int power = cls == GrowthClass::cubic ? 3 : 2;

  // Ratios whose supremum is the fitted constant.
  std::function<double(const Vec&)> size_ratio;
  std::function<double(const Vec&)> slope_ratio;
  if (cls == GrowthClass::linear) {
    size_ratio = [&m](const Vec& u) {
      const Vec f = m.reaction.eval(u);
      double r = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < m.n; ++i) r = std::max(r, f[i] / (1.0 + u[i]));
      return r;
    };
  } else if (cls == GrowthClass::quadratic) {
    size_ratio = [&m](const Vec& u) { return m.reaction.eval(u).norm() / (1.0 + u.squaredNorm()); };
  } else {
    size_ratio = [&m](const Vec& u) {
      return m.reaction.eval(u).cwiseAbs().maxCoeff() / (1.0 + std::pow(u.norm(), 3));
    };
  }
  if (needs_derivative) {
    slope_ratio = [&m, power](const Vec& u) {
      const Vec g = m.reaction.diag_derivative(u);
      return -g.minCoeff() / (1.0 + std::pow(u.norm(), power - 1));
    };
  }

  double c = 0.0;
  for (const Vec& u : box_samples(box)) {
    c = std::max(c, size_ratio(u));
    if (slope_ratio) c = std::max(c, slope_ratio(u));
  }
  const double radius = outer_radius(box);
  if (auto p = probe_rays(size_ratio, m.n, radius, false, Trend::growth); p.triggered) {
    return fails_at(name, p.witness, {c}, slope_note("|f| outgrows the bound", p.slope));
  }
  if (slope_ratio) {
    if (auto p = probe_rays(slope_ratio, m.n, radius, false, Trend::growth); p.triggered) {
      return fails_at(name, p.witness, {c}, slope_note("-df_i/du_i outgrows the bound", p.slope));
    }
  }
  std::string detail = kBoxCaveat;
  if (cls == GrowthClass::cubic) detail += c <= 1.0 ? "; unit constant suffices" : "; needs constant > 1";
  return holds_on_box(name, {c}, detail);
}

ConditionVerdict check_P_psd(const ModelSpec& m, const SampleBox& box) {
  const ModelSpec mm = with_derivative_fallback(m);
  double lowest = std::numeric_limits<double>::infinity();
  for (const Vec& u : box_samples(box)) {
    double norm = 0.0;
    const double lam = min_eigenvalue(mobility_matrix(mm, u), &norm);
    if (lam < -kPsdSlack * (1.0 + norm)) return fails_at("mobility_psd", u, {lam});
    lowest = std::min(lowest, lam);
  }
  return holds_on_box("mobility_psd", {lowest}, kBoxCaveat);
}

ConditionVerdict check_A_alpha(const ModelSpec& m, const SampleBox& box, const std::vector<double>& alphas,
                               double delta) {
  require_interior(box);
  if (alphas.empty()) throw DomainError("alpha list is empty");
  for (double a : alphas) {
    if (!(a > 0.0)) throw DomainError("alpha must be positive");
  }
  if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
  const ModelSpec mm = with_derivative_fallback(m);
  const std::string name = delta > 0.0 ? "weighted_coercive" : "weighted_nonneg";
  double certified = std::numeric_limits<double>::infinity();
  for (const Vec& u : box_samples(box)) {
    for (double alpha : alphas) {
      const Mat w = weighted_matrix(mm, u, alpha);
      double norm = 0.0;
      const double lam = min_eigenvalue(w + w.transpose(), &norm);
      if (lam < delta - kPsdSlack * (1.0 + norm)) {
        return fails_at(name, u, {lam}, "alpha = " + std::to_string(alpha));
      }
      certified = std::min(certified, lam);
    }
  }
  return holds_on_box(name, {certified}, kBoxCaveat);
}

ConditionVerdict check_diffusion_bounds(const ModelSpec& m, const SampleBox& box, DiffusionForm form) {
  const double radius = outer_radius(box);
  auto flux = [&m](const Vec& u) { return m.diffusion.eval(u).dot(u); };

  if (form == DiffusionForm::bounded) {
    const std::string name = "diffusion_bounded";
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    Vec arg_lo;
    for (const Vec& u : box_samples(box)) {
      const double v = flux(u);
      if (v < lo) {
        lo = v;
        arg_lo = u;
      }
      hi = std::max(hi, v);
    }
    if (!(lo > 0.0)) return fails_at(name, arg_lo, {lo, hi}, "d(u).u is not bounded below by a positive constant");
    if (auto p = probe_rays(flux, m.n, radius, false, Trend::growth); p.triggered) {
      return fails_at(name, p.witness, {lo, hi}, slope_note("d(u).u unbounded", p.slope));
    }
    return holds_on_box(name, {lo, hi}, kBoxCaveat);
  }

  const std::string name = "diffusion_quadratic";
  auto lower_ratio = [&flux](const Vec& u) { return flux(u) / u.squaredNorm(); };
  auto upper_ratio = [&flux](const Vec& u) { return flux(u) / (1.0 + u.squaredNorm()); };
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  Vec arg_lo;
  for (const Vec& u : box_samples(box)) {
    hi = std::max(hi, upper_ratio(u));
    if (u.squaredNorm() == 0.0) continue;
    const double r = lower_ratio(u);
    if (r < lo) {
      lo = r;
      arg_lo = u;
    }
  }
  if (arg_lo.size() > 0 && !(lo > 0.0)) return fails_at(name, arg_lo, {lo, hi}, "d(u).u < delta |u|^2");
  if (auto p = probe_rays(lower_ratio, m.n, radius, false, Trend::decay); p.triggered) {
    return fails_at(name, p.witness, {lo, hi}, slope_note("d(u).u / |u|^2 decays", p.slope));
  }
  if (auto p = probe_rays(upper_ratio, m.n, radius, false, Trend::growth); p.triggered) {
    return fails_at(name, p.witness, {lo, hi}, slope_note("d(u).u outgrows 1 + |u|^2", p.slope));
  }
  return holds_on_box(name, {lo, hi}, kBoxCaveat);
}

ConditionVerdict check_reaction_entropy_bound(const ModelSpec& m, const SampleBox& box, int order) {
  if (order != 2 && order != 3) throw DomainError("reaction entropy bound order must be 2 or 3");
  require_interior(box);
  const std::string name = order == 2 ? "reaction_entropy_quadratic" : "reaction_entropy_cubic";
  auto ratio = [&m, order](const Vec& u) {
    const Vec f = m.reaction.eval(u);
    double s = 0.0;
    for (int i = 0; i < m.n; ++i) s += f[i] * std::log(u[i]);
    return s / (1.0 + std::pow(u.norm(), order));
  };
  double c = 0.0;
  for (const Vec& u : box_samples(box)) c = std::max(c, ratio(u));
  if (auto p = probe_rays(ratio, m.n, outer_radius(box), true, Trend::growth); p.triggered) {
    return fails_at(name, p.witness, {c}, slope_note("sum f_i log u_i outgrows the bound", p.slope));
  }
  return holds_on_box(name, {c}, kBoxCaveat);
}

bool skt_mobility_condition(const SktCoefficients& c) {
  require_two_species(c);
  const double a11 = c.a(0, 0), a12 = c.a(0, 1), a21 = c.a(1, 0), a22 = c.a(1, 1);
  const double s = a12 + a21;
  return a11 * a21 == 0.0 && a22 * a12 == 0.0 && s * s >= 16.0 * (a12 * a21 + 4.0 * a11 * a22);
}

bool skt_no_cross_diffusion(const SktCoefficients& c) {
  require_two_species(c);
  return c.a(0, 1) == 0.0 && c.a(1, 0) == 0.0;
}

bool skt_coercive_diffusion(const SktCoefficients& c) {
  require_two_species(c);
  const double a11 = c.a(0, 0), a22 = c.a(1, 1), s = c.a(0, 1) + c.a(1, 0);
  return a11 > 0.0 && a22 > 0.0 && 4.0 * a11 * a22 >= s * s;
}

bool skt_yagi_condition(const SktCoefficients& c) {
  require_two_species(c);
  return 64.0 * c.a(0, 0) * c.a(1, 1) >= c.a(0, 1) * c.a(1, 0);
}

bool skt_competition(const SktCoefficients& c) {
  if (!c.lv) throw CapabilityError("competition condition needs the Lotka-Volterra table");
  const LvTable& t = *c.lv;
  return t.a[1] * t.c[0] > t.a[0] * t.c[1] && t.a[0] * t.b[1] > t.a[1] * t.b[0];
}

bool skt_mobility_psd_sufficient(const SktCoefficients& c) {
  require_two_species(c);
  const double a11 = c.a(0, 0), a12 = c.a(0, 1), a21 = c.a(1, 0), a22 = c.a(1, 1);
  const double diff = a12 - a21;
  return 16.0 * a11 * a22 + 16.0 * std::sqrt(a11 * a22 * a12 * a21) >= diff * diff;
}

ConditionVerdict check_detailed_balance(const SktCoefficients& c) {
  const int n = c.species();
  if (n < 2) throw CapabilityError("detailed balance needs at least two species");
  const std::string name = "detailed_balance";
  auto coupled = [&c](int i, int j) { return c.a(i, j) != 0.0 || c.a(j, i) != 0.0; };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coupled(i, j) && (c.a(i, j) == 0.0 || c.a(j, i) == 0.0)) {
        ConditionVerdict v;
        v.name = name;
        v.status = VerdictStatus::fails;
        v.witness = std::vector<double>{double(i + 1), double(j + 1), c.a(i, j), c.a(j, i)};
        v.detail = "one-sided coupling; witness holds (i, j, a_ij, a_ji)";
        return v;
      }
    }
  }

  // Spanning forest: pi_j = pi_i a_ij / a_ji along tree edges.
  std::vector<double> pi(static_cast<size_t>(n), 0.0);
  for (int root = 0; root < n; ++root) {
    if (pi[static_cast<size_t>(root)] != 0.0) continue;
    pi[static_cast<size_t>(root)] = 1.0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || !coupled(i, j) || pi[static_cast<size_t>(j)] != 0.0) continue;
        pi[static_cast<size_t>(j)] = pi[static_cast<size_t>(i)] * c.a(i, j) / c.a(j, i);
        q.push(j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!coupled(i, j)) continue;
      const double lhs = pi[static_cast<size_t>(i)] * c.a(i, j);
      const double rhs = pi[static_cast<size_t>(j)] * c.a(j, i);
      if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs))) {
        ConditionVerdict v;
        v.name = name;
        v.status = VerdictStatus::fails;
        v.witness = std::vector<double>{double(i + 1), double(j + 1), c.a(i, j), c.a(j, i)};
        v.constants = pi;
        v.detail = "cycle inconsistency; witness holds (i, j, a_ij, a_ji)";
        return v;
      }
    }
  }
  return {name, VerdictStatus::holds_closed_form, std::nullopt, pi, "weights pi, first species normalized to 1"};
}

ConditionReport theorem_applicability(const ModelSpec& m, const SampleBox& box, const ApplicabilityOptions& opts) {
  box.validate();
  SampleBox inner = box;
  for (int i = 0; i < inner.dim(); ++i) {
    inner.lower[i] = std::max(inner.lower[i], opts.interior_floor);
    inner.upper[i] = std::max(inner.upper[i], inner.lower[i]);
  }

  ConditionReport report;
  std::map<std::string, std::string> errors;
  auto attempt = [&](const std::string& name, const std::function<ConditionVerdict()>& fn) {
    try {
      ConditionVerdict v = fn();
      v.name = name;
      report.verdicts.push_back(std::move(v));
    } catch (const std::exception& e) {
      errors[name] = e.what();
    }
  };

  const SktCoefficients* skt = m.skt ? &*m.skt : nullptr;
  const bool two = skt && skt->species() == 2;
  bool diagonal = skt != nullptr;
  if (skt) {
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) diagonal = diagonal && (i == j || skt->a(i, j) == 0.0);
  }

  attempt("positive_diffusion", [&] {
    if (skt) return ConditionVerdict{"", VerdictStatus::holds_closed_form, std::nullopt, {skt->a0.minCoeff()}, {}};
    return check_positive_diffusion(m, box);
  });
  attempt("quasi_positivity", [&] { return check_quasi_positive(m, box); });
  attempt("mass_dissipation", [&] { return check_mass_dissipation(m, box); });
  attempt("mobility_psd", [&] {
    if (two && skt_mobility_psd_sufficient(*skt)) {
      return ConditionVerdict{"", VerdictStatus::holds_closed_form, std::nullopt, {}, {}};
    }
    return check_P_psd(m, box);
  });
  attempt("diffusion_bounded", [&] { return check_diffusion_bounds(m, box, DiffusionForm::bounded); });
  attempt("diffusion_quadratic", [&] {
    if (two && skt_coercive_diffusion(*skt)) {
      const double delta = std::min(skt->a(0, 0), skt->a(1, 1));
      const double c = skt->a0.norm() + skt->a.norm();
      return ConditionVerdict{"", VerdictStatus::holds_closed_form, std::nullopt, {delta, c}, {}};
    }
    return check_diffusion_bounds(m, box, DiffusionForm::quadratic);
  });
  attempt("growth_linear", [&] { return check_growth(m, box, GrowthClass::linear); });
  attempt("growth_quadratic", [&] { return check_growth(m, box, GrowthClass::quadratic); });
  attempt("growth_cubic", [&] { return check_growth(m, box, GrowthClass::cubic); });

  // One sampling pass serves both the delta > 0 and the delta = 0 forms.
  std::optional<ConditionVerdict> weighted;
  try {
    if (diagonal) {
      weighted = ConditionVerdict{"", VerdictStatus::holds_closed_form, std::nullopt, {2.0 * skt->a0.minCoeff()},
                                  "no cross diffusion: A_alpha is diagonal"};
    } else {
      weighted = check_A_alpha(m, inner, opts.alphas, 0.0);
    }
  } catch (const std::exception& e) {
    errors["weighted_coercive"] = e.what();
    errors["weighted_nonneg"] = e.what();
  }
  if (weighted) {
    ConditionVerdict nonneg = *weighted;
    nonneg.name = "weighted_nonneg";
    ConditionVerdict coercive = *weighted;
    coercive.name = "weighted_coercive";
    if (coercive.holds() && !(coercive.constants.front() > kPsdSlack)) {
      coercive.status = VerdictStatus::fails;
      coercive.witness = std::vector<double>(inner.lower.data(), inner.lower.data() + inner.dim());
      coercive.detail = "no positive delta certified on the box";
    }
    report.verdicts.push_back(coercive);
    report.verdicts.push_back(nonneg);
  }

  attempt("reaction_entropy_quadratic", [&] { return check_reaction_entropy_bound(m, inner, 2); });
  attempt("reaction_entropy_cubic", [&] { return check_reaction_entropy_bound(m, inner, 3); });

  if (two) {
    report.verdicts.push_back(closed_form("skt_mobility_condition", skt_mobility_condition(*skt), *skt));
    report.verdicts.push_back(closed_form("skt_no_cross_diffusion", skt_no_cross_diffusion(*skt), *skt));
    report.verdicts.push_back(closed_form("skt_coercive_diffusion", skt_coercive_diffusion(*skt), *skt));
    report.verdicts.push_back(closed_form("skt_yagi_condition", skt_yagi_condition(*skt), *skt));
    if (skt->lv) {
      ConditionVerdict v = closed_form("skt_competition", skt_competition(*skt), *skt);
      if (!v.holds()) {
        const LvTable& t = *skt->lv;
        v.witness = std::vector<double>{t.a[0], t.a[1], t.b[0], t.b[1], t.c[0], t.c[1]};
        v.detail = "witness holds (a1, a2, b1, b2, c1, c2)";
      }
      report.verdicts.push_back(v);
    }
  }
  if (skt && m.n >= 2) attempt("detailed_balance", [&] { return check_detailed_balance(*skt); });

  auto theorem = [&](std::vector<std::string> hyps, std::vector<std::string> assumes = {}) {
    TheoremStatus t;
    t.hypotheses = std::move(hyps);
    t.assumes = std::move(assumes);
    for (const auto& h : t.hypotheses) {
      const ConditionVerdict* v = report.find(h);
      if (!v) {
        t.undetermined.push_back(h + (errors.count(h) ? ": " + errors[h] : std::string()));
      } else if (!v->holds()) {
        t.failed.push_back(h);
      }
    }
    t.state = !t.failed.empty() ? Applicability::fails
              : !t.undetermined.empty() ? Applicability::undetermined
                                        : Applicability::applies;
    return t;
  };
  report.theorems["Thm1"] = theorem({"positive_diffusion", "mobility_psd", "diffusion_bounded", "quasi_positivity",
                                     "mass_dissipation", "growth_quadratic"});
  report.theorems["Thm2"] = theorem({"positive_diffusion", "mobility_psd", "diffusion_quadratic", "quasi_positivity",
                                     "mass_dissipation", "growth_cubic"});
  report.theorems["Thm3"] = theorem({"growth_quadratic", "weighted_coercive"}, {"llogl_bound"});
  report.theorems["Thm4"] = theorem({"weighted_nonneg", "quasi_positivity", "growth_linear"});
  return report;
}

}  // namespace sktlab
