#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sktlab/conditions.hpp"
#include "sktlab/grid.hpp"
#include "sktlab/model.hpp"
#include "sktlab/solver.hpp"

namespace sktlab {

struct ModelConfig {
  std::string preset = "skt";  // skt | semilinear
  std::vector<double> tau;
  std::vector<double> a0;              // skt
  std::vector<std::vector<double>> a;  // skt
  std::vector<double> d;               // semilinear
  /// none | lotka_volterra | mass_dissipative | cubic_dissipative | logistic | linear_decay
  std::string reaction = "none";
  std::optional<LvTable> lv;
  double rate = 1.0;             // k of the dissipative and decay laws
  std::vector<double> growth;    // r_i of the logistic law

  bool operator==(const ModelConfig&) const = default;
};

struct GridConfig {
  int dim = 1;
  std::vector<int> cells = {64};
  std::vector<double> lengths = {1.0};

  bool operator==(const GridConfig&) const = default;
};

struct InitialConfig {
  std::string kind = "constant";  // constant | cosine | file | random
  std::vector<double> value;      // per species base level
  std::vector<double> amplitude;  // cosine
  int mode = 1;                   // cosine
  std::string file;               // file (relative to the config file)
  double low = 0.5;               // random
  double high = 1.5;              // random
  std::uint64_t seed = 1;         // random

  bool operator==(const InitialConfig&) const = default;
};

struct BoxConfig {
  std::vector<double> lower;  // default 0
  std::vector<double> upper;  // default 10
  int count = 4096;
  std::uint64_t seed = 1;
  std::vector<double> alphas = {0.5, 1.0, 2.0, 5.0};

  bool operator==(const BoxConfig&) const = default;
};

struct ExperimentConfig {
  ModelConfig model;
  GridConfig grid;
  InitialConfig initial_condition;
  SolverConfig solver;
  BoxConfig conditions;
  std::string output_dir = "out";
  /// Directory that relative paths inside the config resolve against.
  std::filesystem::path base_dir;

  bool operator==(const ExperimentConfig& o) const {
    return model == o.model && grid == o.grid && initial_condition == o.initial_condition && solver == o.solver &&
           conditions == o.conditions && output_dir == o.output_dir;
  }
};

/// Strict conversion: unknown keys and type mismatches throw InputError
/// naming the key path (and the line of its first occurrence when `source`
/// text is given).
ExperimentConfig config_from_json(const nlohmann::json& j, const std::string& source = {});
nlohmann::json config_to_json(const ExperimentConfig& c);

/// Parses text; syntax errors report the line number.
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);
ExperimentConfig load_config(const std::filesystem::path& path);

ModelSpec build_model(const ModelConfig& c);
Grid build_grid(const GridConfig& c);
StateField build_initial_state(const ExperimentConfig& c, const Grid& g, int species);
SampleBox build_box(const BoxConfig& c, int species);

}  // namespace sktlab
