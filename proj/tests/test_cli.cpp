#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "sktlab/cli.hpp"
#include "sktlab/io.hpp"

using namespace sktlab;
using nlohmann::json;

namespace {

const std::filesystem::path kConfigs = std::filesystem::path(SKTLAB_SOURCE_DIR) / "configs";

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("sktlab_cli_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

int invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sktlab");
  args.push_back("--quiet");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("cli check exit codes and report") {
  const auto out = scratch("check");
  CHECK(invoke({"check", (kConfigs / "semilinear_mass_dissipative.json").string(), "--output-dir",
                (out / "a").string()}) == kExitOk);
  const json ok = json::parse(read_file(out / "a" / "condition_report.json"));
  CHECK(ok.contains("theorems"));

  CHECK(invoke({"check", (kConfigs / "skt_lv_classical.json").string(), "--output-dir", (out / "b").string()}) ==
        kExitNoTheorem);
  const json bad = json::parse(read_file(out / "b" / "condition_report.json"));
  bool witnessed = false;
  for (const auto& v : bad["verdicts"])
    if (v["name"] == "mass_dissipation") witnessed = v["status"] == "fails" && v["witness"].is_array();
  CHECK(witnessed);
}

TEST_CASE("cli input errors exit 1") {
  const auto dir = scratch("bad");
  json j = json::parse(read_file(kConfigs / "heat.json"));
  j["model"].erase("tau");
  write_file_atomic(dir / "no_tau.json", j.dump(2));
  CHECK(invoke({"check", (dir / "no_tau.json").string()}) == kExitError);
  CHECK(invoke({"run", (dir / "missing.json").string()}) == kExitError);
  CHECK(invoke({"frobnicate"}) == kExitError);
  CHECK(invoke({"run"}) == kExitError);
  CHECK(invoke({"check", (kConfigs / "heat.json").string(), "--seed", "x"}) == kExitError);
}

TEST_CASE("cli run writes artifacts and maps blow-up") {
  const auto out = scratch("run");
  CHECK(invoke({"run", (kConfigs / "heat.json").string(), "--output-dir", (out / "heat").string()}) == kExitOk);
  CHECK(std::filesystem::exists(out / "heat" / "snapshots" / "snapshot_0000.txt"));
  const json summary = json::parse(read_file(out / "heat" / "summary.json"));
  CHECK(summary["termination"] == "completed");
  CHECK(summary["mass_nonincreasing"] == true);
  const std::string csv = read_file(out / "heat" / "monitors.csv");
  CHECK(csv.rfind("t,mass,entropy,dissipation,entropy_residual,linf", 0) == 0);

  CHECK(invoke({"run", (kConfigs / "explicit_unstable.json").string(), "--output-dir", (out / "boom").string()}) ==
        kExitBlowUp);
  CHECK(json::parse(read_file(out / "boom" / "summary.json"))["termination"] == "blow_up");
}

TEST_CASE("cli sweep rows follow the axes") {
  const auto dir = scratch("sweep");
  json base = json::parse(read_file(kConfigs / "heat.json"));
  base["solver"]["T"] = 0.01;

  json spec = {{"base", base}, {"axes", json::array()}, {"output_dir", (dir / "empty").string()}};
  write_file_atomic(dir / "empty.json", spec.dump());
  CHECK(invoke({"sweep", (dir / "empty.json").string()}) == kExitOk);
  CHECK(line_count(read_file(dir / "empty" / "aggregate.csv")) == 2);

  spec["axes"] = json::array({{{"path", "/solver/dt_max"}, {"values", {0.004, 0.002, 0.001}}}});
  spec["output_dir"] = (dir / "three").string();
  spec["parallelism"] = 2;
  write_file_atomic(dir / "three.json", spec.dump());
  CHECK(invoke({"sweep", (dir / "three.json").string()}) == kExitOk);
  const std::string agg = read_file(dir / "three" / "aggregate.csv");
  CHECK(line_count(agg) == 4);
  CHECK(std::filesystem::exists(dir / "three" / "point_0002" / "summary.json"));

  spec["axes"] = json::array({{{"path", "/solver/nonsense"}, {"values", {1}}}});
  write_file_atomic(dir / "bad.json", spec.dump());
  CHECK(invoke({"sweep", (dir / "bad.json").string()}) == kExitError);
}
