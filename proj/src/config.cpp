#include "sktlab/config.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "sktlab/errors.hpp"
#include "sktlab/io.hpp"

namespace sktlab {

using nlohmann::json;

namespace {

struct Context {
  std::string source;
  std::string origin;

  // Line of the first occurrence of the last path component in the source.
  std::string where(const std::string& path) const {
    std::string prefix = origin.empty() ? "" : origin + ":";
    if (source.empty()) return prefix;
    const auto dot = path.find_last_of('.');
    const std::string key = "\"" + (dot == std::string::npos ? path : path.substr(dot + 1)) + "\"";
    const auto pos = source.find(key);
    if (pos == std::string::npos) return prefix;
    const auto line = 1 + std::count(source.begin(), source.begin() + static_cast<long>(pos), '\n');
    return prefix + std::to_string(line) + ": ";
  }

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw InputError(where(path) + "key '" + path + "': " + msg);
  }
};

void convert(const json& j, const std::string& path, const Context& ctx, double& out) {
  if (j.is_number()) {
    out = j.get<double>();
  } else if (j.is_string() && (j == "inf" || j == "infinity")) {
    out = std::numeric_limits<double>::infinity();
  } else {
    ctx.fail(path, "expected a number");
  }
}

void convert(const json& j, const std::string& path, const Context& ctx, int& out) {
  if (!j.is_number_integer()) ctx.fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) ctx.fail(path, "out of range");
  out = static_cast<int>(v);
}

void convert(const json& j, const std::string& path, const Context& ctx, std::uint64_t& out) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    ctx.fail(path, "expected a nonnegative integer");
  }
  out = j.get<std::uint64_t>();
}

void convert(const json& j, const std::string& path, const Context& ctx, bool& out) {
  if (!j.is_boolean()) ctx.fail(path, "expected true or false");
  out = j.get<bool>();
}

void convert(const json& j, const std::string& path, const Context& ctx, std::string& out) {
  if (!j.is_string()) ctx.fail(path, "expected a string");
  out = j.get<std::string>();
}

template <class T>
void convert(const json& j, const std::string& path, const Context& ctx, std::vector<T>& out) {
  if (!j.is_array()) ctx.fail(path, "expected an array");
  out.clear();
  for (std::size_t k = 0; k < j.size(); ++k) {
    T v{};
    convert(j[k], path + "[" + std::to_string(k) + "]", ctx, v);
    out.push_back(std::move(v));
  }
}

class Section {
 public:
  Section(const json& j, std::string path, const Context& ctx) : j_(j), path_(std::move(path)), ctx_(ctx) {
    if (!j_.is_object()) ctx_.fail(path_, "expected an object");
  }

  template <class T>
  void optional(const char* key, T& out) {
    seen_.insert(key);
    if (j_.contains(key)) convert(j_.at(key), child(key), ctx_, out);
  }

  template <class T>
  void required(const char* key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) ctx_.fail(child(key), "missing required key");
    convert(j_.at(key), child(key), ctx_, out);
  }

  bool has(const char* key) const { return j_.contains(key); }
  Section sub(const char* key) {
    seen_.insert(key);
    return Section(j_.at(key), child(key), ctx_);
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) ctx_.fail(child(it.key()), "unknown key");
    }
  }

  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  const Context& ctx() const { return ctx_; }

 private:
  const json& j_;
  std::string path_;
  const Context& ctx_;
  std::set<std::string> seen_;
};

json number(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  return json(x);
}

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

ModelConfig read_model(Section s) {
  ModelConfig m;
  s.required("preset", m.preset);
  s.required("tau", m.tau);
  s.optional("a0", m.a0);
  s.optional("a", m.a);
  s.optional("d", m.d);
  s.optional("reaction", m.reaction);
  s.optional("rate", m.rate);
  s.optional("growth", m.growth);
  if (s.has("lv")) {
    Section lv = s.sub("lv");
    LvTable t;
    std::vector<double> a, b, c;
    lv.required("a", a);
    lv.required("b", b);
    lv.required("c", c);
    lv.finish();
    if (a.size() != 2 || b.size() != 2 || c.size() != 2) s.ctx().fail(s.child("lv"), "a, b, c need two entries each");
    for (int i = 0; i < 2; ++i) {
      t.a[i] = a[static_cast<std::size_t>(i)];
      t.b[i] = b[static_cast<std::size_t>(i)];
      t.c[i] = c[static_cast<std::size_t>(i)];
    }
    m.lv = t;
  }
  s.finish();
  if (m.preset != "skt" && m.preset != "semilinear") s.ctx().fail(s.child("preset"), "expected skt or semilinear");
  if (m.preset == "skt" && (m.a0.empty() || m.a.empty())) s.ctx().fail(s.child("a0"), "skt preset needs a0 and a");
  if (m.preset == "semilinear" && m.d.empty()) s.ctx().fail(s.child("d"), "semilinear preset needs d");
  static const std::set<std::string> reactions = {"none",      "lotka_volterra", "mass_dissipative", "cubic_dissipative",
                                                  "logistic", "linear_decay"};
  if (!reactions.count(m.reaction)) s.ctx().fail(s.child("reaction"), "unknown reaction '" + m.reaction + "'");
  if (m.reaction == "lotka_volterra" && !m.lv) s.ctx().fail(s.child("lv"), "lotka_volterra needs an lv table");
  return m;
}

GridConfig read_grid(Section s) {
  GridConfig g;
  s.optional("dim", g.dim);
  s.optional("cells", g.cells);
  s.optional("lengths", g.lengths);
  s.finish();
  if (g.dim != 1 && g.dim != 2) s.ctx().fail(s.child("dim"), "expected 1 or 2");
  if (static_cast<int>(g.cells.size()) != g.dim) s.ctx().fail(s.child("cells"), "needs one entry per dimension");
  if (static_cast<int>(g.lengths.size()) != g.dim) s.ctx().fail(s.child("lengths"), "needs one entry per dimension");
  return g;
}

InitialConfig read_initial(Section s) {
  InitialConfig c;
  s.required("kind", c.kind);
  s.optional("value", c.value);
  s.optional("amplitude", c.amplitude);
  s.optional("mode", c.mode);
  s.optional("file", c.file);
  s.optional("low", c.low);
  s.optional("high", c.high);
  s.optional("seed", c.seed);
  s.finish();
  if (c.kind != "constant" && c.kind != "cosine" && c.kind != "file" && c.kind != "random") {
    s.ctx().fail(s.child("kind"), "expected constant, cosine, file or random");
  }
  if ((c.kind == "constant" || c.kind == "cosine") && c.value.empty()) s.ctx().fail(s.child("value"), "required");
  if (c.kind == "file" && c.file.empty()) s.ctx().fail(s.child("file"), "required");
  return c;
}

void read_solver(Section s, SolverConfig& c) {
  std::string scheme = to_string(c.scheme);
  s.optional("scheme", scheme);
  try {
    c.scheme = scheme_from_string(scheme);
  } catch (const InputError& e) {
    s.ctx().fail(s.child("scheme"), e.what());
  }
  s.optional("dt_initial", c.dt_initial);
  s.optional("dt_max", c.dt_max);
  s.optional("safety", c.safety);
  s.optional("floor", c.floor);
  s.optional("blowup_threshold", c.blowup_threshold);
  s.optional("T", c.t_end);
  s.optional("fixed_dt", c.fixed_dt);
  s.optional("linear_tolerance", c.linear_tolerance);
  s.optional("snapshot_every", c.snapshot_every);
  s.finish();
}

void read_monitors(Section s, SolverConfig& c) {
  s.optional("cadence", c.monitor_every);
  s.optional("p_list", c.lp_powers);
  s.optional("q_list", c.norm_powers);
  s.finish();
}

BoxConfig read_box(Section s) {
  BoxConfig b;
  s.optional("lower", b.lower);
  s.optional("upper", b.upper);
  s.optional("count", b.count);
  s.optional("seed", b.seed);
  s.optional("alphas", b.alphas);
  s.finish();
  return b;
}

}  // namespace

ExperimentConfig config_from_json(const json& j, const std::string& source) {
  const Context ctx{source, ""};
  Section root(j, "", ctx);
  ExperimentConfig c;
  if (!root.has("model")) ctx.fail("model", "missing required section");
  c.model = read_model(root.sub("model"));
  if (root.has("grid")) c.grid = read_grid(root.sub("grid"));
  if (!root.has("initial_condition")) ctx.fail("initial_condition", "missing required section");
  c.initial_condition = read_initial(root.sub("initial_condition"));
  if (root.has("solver")) read_solver(root.sub("solver"), c.solver);
  if (root.has("monitors")) read_monitors(root.sub("monitors"), c.solver);
  if (root.has("conditions")) c.conditions = read_box(root.sub("conditions"));
  root.optional("output_dir", c.output_dir);
  root.finish();
  try {
    c.solver.validate();
  } catch (const InputError& e) {
    throw InputError(ctx.where("solver") + e.what());
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json model = {{"preset", c.model.preset}, {"tau", c.model.tau}, {"reaction", c.model.reaction},
                {"rate", c.model.rate}};
  if (!c.model.a0.empty()) model["a0"] = c.model.a0;
  if (!c.model.a.empty()) model["a"] = c.model.a;
  if (!c.model.d.empty()) model["d"] = c.model.d;
  if (!c.model.growth.empty()) model["growth"] = c.model.growth;
  if (c.model.lv) {
    const auto& t = *c.model.lv;
    model["lv"] = {{"a", {t.a[0], t.a[1]}}, {"b", {t.b[0], t.b[1]}}, {"c", {t.c[0], t.c[1]}}};
  }
  const auto& ic = c.initial_condition;
  json init = {{"kind", ic.kind}, {"value", ic.value}, {"amplitude", ic.amplitude}, {"mode", ic.mode},
               {"file", ic.file}, {"low", ic.low},     {"high", ic.high},           {"seed", ic.seed}};
  const auto& s = c.solver;
  json solver = {{"scheme", to_string(s.scheme)},
                 {"dt_initial", s.dt_initial},
                 {"dt_max", s.dt_max},
                 {"safety", s.safety},
                 {"floor", s.floor},
                 {"blowup_threshold", s.blowup_threshold},
                 {"T", s.t_end},
                 {"fixed_dt", s.fixed_dt},
                 {"linear_tolerance", s.linear_tolerance},
                 {"snapshot_every", s.snapshot_every}};
  json monitors = {{"cadence", s.monitor_every}, {"p_list", numbers(s.lp_powers)}, {"q_list", numbers(s.norm_powers)}};
  json box = {{"lower", c.conditions.lower},
              {"upper", c.conditions.upper},
              {"count", c.conditions.count},
              {"seed", c.conditions.seed},
              {"alphas", c.conditions.alphas}};
  return {{"model", model},   {"grid", {{"dim", c.grid.dim}, {"cells", c.grid.cells}, {"lengths", c.grid.lengths}}},
          {"initial_condition", init}, {"solver", solver}, {"monitors", monitors}, {"conditions", box},
          {"output_dir", c.output_dir}};
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto ? upto - 1 : 0), '\n');
    throw InputError(origin + ":" + std::to_string(line) + ": syntax error: " + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const json j = parse_json_text(text, path.string());
  ExperimentConfig c;
  try {
    c = config_from_json(j, text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ":" + e.what());
  }
  c.base_dir = path.parent_path();
  return c;
}

namespace {

Vec to_vec(const std::vector<double>& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

ReactionModel build_reaction(const ModelConfig& c, int n) {
  if (c.reaction == "none") return reaction_none(n);
  if (c.reaction == "lotka_volterra") return reaction_lotka_volterra(*c.lv);
  if (c.reaction == "mass_dissipative") return reaction_mass_dissipative(n, c.rate);
  if (c.reaction == "cubic_dissipative") return reaction_cubic_dissipative(n, c.rate);
  if (c.reaction == "linear_decay") return reaction_linear_decay(n, c.rate);
  if (c.reaction == "logistic") {
    if (static_cast<int>(c.growth.size()) != n) throw InputError("model.growth needs one rate per species");
    return reaction_logistic(c.growth);
  }
  throw InputError("unknown reaction '" + c.reaction + "'");
}

}  // namespace

ModelSpec build_model(const ModelConfig& c) {
  const int n = static_cast<int>(c.tau.size());
  if (n < 1 || n > kMaxSpecies) throw InputError("model.tau must list between 1 and 8 species");
  const Vec tau = to_vec(c.tau);
  ReactionModel reaction = build_reaction(c, n);
  try {
    if (c.preset == "semilinear") {
      if (static_cast<int>(c.d.size()) != n) throw InputError("model.d needs one entry per species");
      return make_semilinear(to_vec(c.d), tau, std::move(reaction));
    }
    SktCoefficients k;
    k.a0 = to_vec(c.a0);
    if (static_cast<int>(c.a0.size()) != n) throw InputError("model.a0 needs one entry per species");
    if (static_cast<int>(c.a.size()) != n) throw InputError("model.a must be an N x N table");
    k.a = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = c.a[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != n) throw InputError("model.a must be an N x N table");
      for (int j = 0; j < n; ++j) k.a(i, j) = row[static_cast<std::size_t>(j)];
    }
    k.lv = c.lv;
    return make_skt(k, tau, std::move(reaction));
  } catch (const DomainError& e) {
    throw InputError(std::string("model: ") + e.what());
  }
}

Grid build_grid(const GridConfig& c) {
  Grid g = c.dim == 2 ? Grid::rect(c.cells.at(0), c.cells.at(1), c.lengths.at(0), c.lengths.at(1))
                      : Grid::line(c.cells.at(0), c.lengths.at(0));
  return g;
}

StateField build_initial_state(const ExperimentConfig& c, const Grid& g, int species) {
  const auto& ic = c.initial_condition;
  const std::size_t cells = g.cells();
  StateField s(species, cells);
  auto need = [&](const std::vector<double>& v, const char* key) {
    if (static_cast<int>(v.size()) != species) {
      throw InputError(std::string("initial_condition.") + key + " needs one entry per species");
    }
  };
  if (ic.kind == "file") {
    const std::filesystem::path p = c.base_dir / ic.file;
    if (!std::filesystem::exists(p)) throw InputError("initial_condition.file: " + p.string() + " does not exist");
    s = parse_snapshot(read_file(p), g);
    if (s.species() != species) throw InputError("initial_condition.file: species count does not match the model");
  } else if (ic.kind == "random") {
    if (!(ic.low >= 0.0) || !(ic.high > ic.low)) throw InputError("initial_condition: need 0 <= low < high");
    std::mt19937_64 rng(ic.seed);
    std::uniform_real_distribution<double> dist(ic.low, ic.high);
    for (int i = 0; i < species; ++i) {
      for (auto& x : s.u[static_cast<std::size_t>(i)]) x = dist(rng);
    }
  } else {
    need(ic.value, "value");
    std::vector<double> amp = ic.amplitude;
    if (ic.kind == "constant") amp.assign(static_cast<std::size_t>(species), 0.0);
    need(amp, "amplitude");
    const int ny = g.dim == 2 ? g.ny : 1;
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < g.nx; ++ix) {
        double shape = std::cos(ic.mode * M_PI * g.x_center(ix) / g.lx);
        if (g.dim == 2) shape *= std::cos(ic.mode * M_PI * g.y_center(iy) / g.ly);
        for (int i = 0; i < species; ++i) {
          const auto si = static_cast<std::size_t>(i);
          s.u[si][static_cast<std::size_t>(iy * g.nx + ix)] = ic.value[si] + amp[si] * shape;
        }
      }
    }
  }
  s.t = 0.0;
  if (!s.nonnegative_finite()) throw InputError("initial condition must be finite and nonnegative");
  return s;
}

SampleBox build_box(const BoxConfig& c, int species) {
  SampleBox b;
  b.lower = c.lower.empty() ? Vec::Zero(species) : to_vec(c.lower);
  b.upper = c.upper.empty() ? Vec::Constant(species, 10.0) : to_vec(c.upper);
  b.count = c.count;
  b.seed = c.seed;
  b.validate();
  return b;
}

}  // namespace sktlab
