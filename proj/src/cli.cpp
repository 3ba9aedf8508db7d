#include "sktlab/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <thread>

#include "sktlab/errors.hpp"
#include "sktlab/io.hpp"
#include "sktlab/kernels.hpp"
#include "sktlab/verify.hpp"

namespace sktlab {

using nlohmann::json;

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void apply_globals(ExperimentConfig& c, const GlobalOptions& opts) {
  if (opts.output_dir) c.output_dir = opts.output_dir->string();
  if (opts.seed) {
    c.initial_condition.seed = *opts.seed;
    c.conditions.seed = *opts.seed;
  }
}

std::string hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double series_max(const MonitorBundle& b, const char* name) {
  double m = 0.0;
  for (double v : b.get(name).value) m = std::max(m, v);
  return m;
}

int exit_for(Termination t) {
  switch (t) {
    case Termination::completed: return kExitOk;
    case Termination::blow_up: return kExitBlowUp;
    case Termination::solver_failure: return kExitSolverFailure;
  }
  return kExitError;
}

struct RunOutcome {
  int code = kExitError;
  json summary;
};

RunOutcome execute_run(ExperimentConfig c) {
  const ModelSpec m = build_model(c.model);
  const Grid g = build_grid(c.grid);
  const StateField u0 = build_initial_state(c, g, m.n);
  RunResult r = run(m, g, u0, c.solver);
  r.monitors.model_hash = fnv1a(config_to_json(c)["model"].dump());

  const std::filesystem::path out(c.output_dir);
  for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
    char name[48];
    std::snprintf(name, sizeof name, "snapshot_%04zu.txt", k);
    write_file_atomic(out / "snapshots" / name, snapshot_text(g, r.snapshots[k]));
  }
  write_file_atomic(out / "monitors.csv", monitors_csv(r.monitors));
  write_file_atomic(out / "steps.csv", steps_csv(r.monitors));
  RunOutcome o{exit_for(r.termination), run_summary(c, r)};
  write_file_atomic(out / "summary.json", o.summary.dump(2) + "\n");
  return o;
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return v.dump();
}

}  // namespace

unsigned default_parallelism() {
  if (const char* env = std::getenv("SKTLAB_PARALLELISM")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json report_to_json(const ConditionReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json constants = json::array();
    for (double x : v.constants) constants.push_back(finite_or_null(x));
    json item = {{"name", v.name}, {"status", to_string(v.status)}, {"constants", constants}, {"detail", v.detail}};
    item["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    verdicts.push_back(item);
  }
  json theorems = json::object();
  for (const auto& [name, t] : r.theorems) {
    theorems[name] = {{"state", to_string(t.state)},
                      {"hypotheses", t.hypotheses},
                      {"failed", t.failed},
                      {"undetermined", t.undetermined},
                      {"assumes", t.assumes}};
  }
  return {{"verdicts", verdicts}, {"theorems", theorems}, {"any_theorem_applies", r.any_theorem_applies()}};
}

json run_summary(const ExperimentConfig& c, const RunResult& r) {
  const MonitorBundle& b = r.monitors;
  const auto& mass_series = b.get("mass").value;
  bool mass_ok = true;
  for (const auto& st : b.steps) {
    const double allowance = st.clamp_mass + std::abs(st.solver_mass) + 1e-14 * std::abs(st.mass);
    mass_ok = mass_ok && st.mass_change <= allowance;
  }
  const auto& ent = b.get("entropy").value;
  bool entropy_ok = true;
  for (std::size_t k = 1; k < ent.size(); ++k) {
    entropy_ok = entropy_ok && ent[k] <= ent[k - 1] + 1e-12 * (1.0 + std::abs(ent[k - 1]));
  }

  json envelope = nullptr;
  const auto& linf = b.get("linf");
  if (linf.t.size() >= 3) {
    const Envelope e = sup_norm_envelope(linf.t, linf.value);
    envelope = {{"C2", e.c2}, {"C3", e.c3}, {"ok", e.ok}};
  }
  json lq = json::object();
  for (std::size_t k = 0; k < b.q_list.size(); ++k) lq[format_double(b.q_list[k])] = b.q_sup[k];

  const StateField& last = r.snapshots.back();
  return {
      {"termination", to_string(r.termination)},
      {"message", r.message},
      {"steps", r.steps},
      {"t_final", last.t},
      {"clamp_count", r.clamp_count},
      {"mass_initial", b.initial_mass},
      {"mass_final", mass_series.empty() ? b.initial_mass : mass_series.back()},
      {"mass_nonincreasing", mass_ok},
      {"entropy_nonincreasing", entropy_ok},
      {"sup", {{"linf", series_max(b, "linf")},
               {"l2", series_max(b, "l2")},
               {"l3", series_max(b, "l3")},
               {"llogl", series_max(b, "llogl")},
               {"lq", lq}}},
      {"envelope", envelope},
      {"integrals", {{"int_l2", b.get("int_l2").value.back()}, {"int_l3", b.get("int_l3").value.back()}}},
      {"seed", c.initial_condition.seed},
      {"metadata",
       {{"grid", b.grid_description},
        {"model_hash", hex(b.model_hash)},
        {"floor", b.floor},
        {"entropy_phi_at_zero", 0.0},
        {"log_argument", "max(u, floor)"},
        {"scheme", to_string(c.solver.scheme)},
        {"kernels", kernels::active().name}}},
  };
}

int cmd_check(const std::filesystem::path& config, const GlobalOptions& opts) {
  ExperimentConfig c = load_config(config);
  apply_globals(c, opts);
  const ModelSpec m = build_model(c.model);
  const SampleBox box = build_box(c.conditions, m.n);
  ApplicabilityOptions ao;
  ao.alphas = c.conditions.alphas;
  const ConditionReport report = theorem_applicability(m, box, ao);
  const json j = report_to_json(report);
  write_file_atomic(std::filesystem::path(c.output_dir) / "condition_report.json", j.dump(2) + "\n");
  if (!opts.quiet) {
    for (const auto& [name, t] : report.theorems) {
      std::cout << name << ": " << to_string(t.state);
      if (!t.failed.empty()) {
        std::cout << " (failed:";
        for (const auto& f : t.failed) std::cout << ' ' << f;
        std::cout << ')';
      }
      std::cout << '\n';
    }
  }
  return report.any_theorem_applies() ? kExitOk : kExitNoTheorem;
}

int cmd_run(const std::filesystem::path& config, const GlobalOptions& opts) {
  ExperimentConfig c = load_config(config);
  apply_globals(c, opts);
  const RunOutcome o = execute_run(c);
  if (!opts.quiet) {
    std::cout << "termination: " << o.summary["termination"].get<std::string>() << "  steps: " << o.summary["steps"]
              << "  t: " << format_double(o.summary["t_final"].get<double>()) << '\n';
  }
  return o.code;
}

int cmd_sweep(const std::filesystem::path& spec_path, const GlobalOptions& opts) {
  const std::string text = read_file(spec_path);
  const json spec = parse_json_text(text, spec_path.string());
  if (!spec.is_object()) throw InputError(spec_path.string() + ": sweep spec must be an object");
  for (auto it = spec.begin(); it != spec.end(); ++it) {
    static const std::set<std::string> known = {"base", "axes", "parallelism", "output_dir"};
    if (!known.count(it.key())) throw InputError(spec_path.string() + ": unknown key '" + it.key() + "'");
  }
  if (!spec.contains("base")) throw InputError(spec_path.string() + ": missing key 'base'");

  ExperimentConfig base;
  if (spec["base"].is_string()) {
    base = load_config(spec_path.parent_path() / spec["base"].get<std::string>());
  } else {
    base = config_from_json(spec["base"], text);
    base.base_dir = spec_path.parent_path();
  }
  apply_globals(base, opts);
  std::string root = base.output_dir;
  if (spec.contains("output_dir")) root = spec["output_dir"].get<std::string>();
  if (opts.output_dir) root = opts.output_dir->string();
  const json normalized = config_to_json(base);

  std::vector<std::pair<std::string, json>> axes;
  if (spec.contains("axes")) {
    if (!spec["axes"].is_array()) throw InputError("sweep: 'axes' must be an array");
    for (const auto& a : spec["axes"]) {
      if (!a.is_object() || !a.contains("path") || !a.contains("values") || !a["values"].is_array() ||
          a.size() != 2) {
        throw InputError("sweep: each axis needs exactly 'path' and 'values'");
      }
      const std::string path = a["path"].get<std::string>();
      if (!normalized.contains(json::json_pointer(path))) throw InputError("sweep: no config key at " + path);
      if (a["values"].empty()) throw InputError("sweep: axis " + path + " has no values");
      axes.emplace_back(path, a["values"]);
    }
  }

  // Cartesian product, last axis fastest; every point is type-checked first.
  std::size_t total = 1;
  for (const auto& [p, v] : axes) total *= v.size();
  std::vector<ExperimentConfig> points;
  std::vector<std::vector<json>> coords;
  for (std::size_t k = 0; k < total; ++k) {
    json patched = normalized;
    std::vector<json> here;
    std::size_t rem = k;
    for (std::size_t a = axes.size(); a-- > 0;) {
      const auto& values = axes[a].second;
      const json& v = values[rem % values.size()];
      rem /= values.size();
      patched[json::json_pointer(axes[a].first)] = v;
      here.insert(here.begin(), v);
    }
    ExperimentConfig pc;
    try {
      pc = config_from_json(patched);
    } catch (const InputError& e) {
      throw InputError("sweep point " + std::to_string(k) + ": " + e.what());
    }
    pc.base_dir = base.base_dir;
    char dir[32];
    std::snprintf(dir, sizeof dir, "point_%04zu", k);
    pc.output_dir = (std::filesystem::path(root) / dir).string();
    points.push_back(std::move(pc));
    coords.push_back(std::move(here));
  }

  unsigned workers = default_parallelism();
  if (spec.contains("parallelism")) workers = std::max(1, spec["parallelism"].get<int>());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));

  std::vector<json> rows(points.size());
  std::vector<int> codes(points.size(), kExitError);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        const RunOutcome o = execute_run(points[k]);
        rows[k] = o.summary;
        codes[k] = o.code;
      } catch (const std::exception& e) {
        rows[k] = {{"termination", "error"}, {"message", e.what()}};
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::string csv = "point";
  for (const auto& [p, v] : axes) csv += "," + csv_field(json(p));
  const char* scalars[] = {"termination", "steps", "t_final", "mass_initial", "mass_final", "clamp_count"};
  for (const char* s : scalars) csv += std::string(",") + s;
  csv += ",exit_code,sup_linf,sup_l2,sup_l3,sup_llogl,int_l2,int_l3,envelope_C2,envelope_C3,envelope_ok,message\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const json& r = rows[k];
    auto field = [&](const json& obj, const char* key) { return obj.contains(key) ? csv_field(obj[key]) : ""; };
    csv += std::to_string(k);
    for (const auto& v : coords[k]) csv += "," + csv_field(v);
    for (const char* s : scalars) csv += "," + field(r, s);
    csv += "," + std::to_string(codes[k]);
    const json sup = r.value("sup", json::object());
    for (const char* s : {"linf", "l2", "l3", "llogl"}) csv += "," + field(sup, s);
    const json in = r.value("integrals", json::object());
    csv += "," + field(in, "int_l2") + "," + field(in, "int_l3");
    const json env = r.contains("envelope") && r["envelope"].is_object() ? r["envelope"] : json::object();
    csv += "," + field(env, "C2") + "," + field(env, "C3") + "," + field(env, "ok");
    csv += "," + field(r, "message") + "\n";
  }
  write_file_atomic(std::filesystem::path(root) / "aggregate.csv", csv);
  if (!opts.quiet) std::cout << "sweep: " << rows.size() << " points written to " << root << '\n';
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opts) {
  const auto results = run_verify_suites();
  const std::string table = format_verify_table(results);
  std::cout << table;
  if (!opts.quiet) {
    for (const auto& r : results) std::fprintf(stderr, "%-26s %.2f s\n", r.name.c_str(), r.seconds);
  }
  if (opts.output_dir) write_file_atomic(*opts.output_dir / "verify_report.txt", table);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  return all ? kExitOk : kExitError;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Cross-diffusion reaction system laboratory", "sktlab"};
  GlobalOptions opts;
  std::string output_dir;
  std::uint64_t seed = 0;
  auto* out_opt = app.add_option("--output-dir", output_dir, "Directory for output artifacts");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random initial conditions and sampling");
  app.add_flag("--quiet", opts.quiet, "Suppress progress output");
  app.require_subcommand(1);
  app.fallthrough();

  std::string path;
  auto* check = app.add_subcommand("check", "Decide theorem hypotheses for a config");
  check->add_option("config", path, "Experiment config (JSON)")->required();
  auto* runc = app.add_subcommand("run", "Simulate a config");
  runc->add_option("config", path, "Experiment config (JSON)")->required();
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("spec", path, "Sweep spec (JSON)")->required();
  auto* verify = app.add_subcommand("verify", "Run the built-in oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  if (*out_opt) opts.output_dir = output_dir;
  if (*seed_opt) opts.seed = seed;

  try {
    if (*check) return cmd_check(path, opts);
    if (*runc) return cmd_run(path, opts);
    if (*sweep) return cmd_sweep(path, opts);
    if (*verify) return cmd_verify(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace sktlab
