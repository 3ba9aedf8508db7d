#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sktlab/conditions.hpp"
#include "sktlab/config.hpp"
#include "sktlab/solver.hpp"

namespace sktlab {

/// Process exit codes; no others are emitted.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitNoTheorem = 2,
  kExitBlowUp = 3,
  kExitSolverFailure = 4,
};

struct GlobalOptions {
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

nlohmann::json report_to_json(const ConditionReport& r);

/// Summary scalars of a finished run (also the aggregate CSV row of a sweep).
nlohmann::json run_summary(const ExperimentConfig& c, const RunResult& r);

int cmd_check(const std::filesystem::path& config, const GlobalOptions& opts);
int cmd_run(const std::filesystem::path& config, const GlobalOptions& opts);
int cmd_sweep(const std::filesystem::path& spec, const GlobalOptions& opts);
int cmd_verify(const GlobalOptions& opts);

/// Full command line entry point (CLI11 parsing, error mapping).
int cli_main(int argc, char** argv);

/// Default sweep parallelism: SKTLAB_PARALLELISM, else hardware concurrency.
unsigned default_parallelism();

}  // namespace sktlab
