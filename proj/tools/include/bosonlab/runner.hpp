#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bosonhopf/report.hpp"
#include "bosonlab/config.hpp"
#include "json.hpp"

namespace bosonlab {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

struct RunOptions {
  std::optional<int> dim;     // overrides every scenario and suite
  std::optional<double> tol;  // overrides every scenario and suite
  std::optional<int> jobs;
};

struct ReportRow {
  std::string scenario;
  std::string suite;
  int point = 0;
  bosonhopf::CheckReport report;
};

struct RunResult {
  std::vector<ReportRow> rows;  // sorted by (scenario, suite, identity, subject, point)
  std::vector<std::string> warnings;
  int passed = 0, failed = 0, skipped = 0;

  int exit_code() const { return failed > 0 ? 1 : 0; }
};

// Default tolerance and dimension of a suite when the config does not set one.
double default_tolerance(const std::string& suite, bosonhopf::Family f);
int default_dim(const std::string& suite, bosonhopf::Family f);

// Reports of one suite at one grid point; ProvisoError becomes a skip, any other
// exception a failed report.
std::vector<bosonhopf::CheckReport> run_suite(const Scenario& s, const GridPoint& p, const std::string& suite,
                                              const RunOptions& opt);

RunResult run(const RunConfig& cfg, const RunOptions& opt = {});

nlohmann::json to_json(const RunResult& r);
nlohmann::json to_json(const bosonhopf::CheckReport& r);
// Pretty-printed with a trailing newline.
std::string render(const RunResult& r);

}  // namespace bosonlab
