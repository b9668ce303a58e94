// Runs the selected verification suites of a scenario and collects one report.
#ifndef PDUAL_RUNNER_HPP
#define PDUAL_RUNNER_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pdual/report.hpp"
#include "pdual/scenario.hpp"

namespace pdual {

struct RunOptions {
  /// Overrides the scenario's own selection when non-empty.
  std::vector<std::string> suites;
  /// Overrides the scenario's field.
  std::optional<Field> field;
  /// Records wall time, which makes output differ between runs.
  bool timing = false;
};

/// Suites run when neither the options nor the scenario select any.
std::vector<std::string> default_suites(const ScenarioSpec& spec);

/// Construction errors propagate unless the scenario expects that error, in
/// which case the report records the match. Falsified checks and expectation
/// mismatches are failed report entries.
Report run_scenario(const ScenarioSpec& spec, const RunOptions& options = {});
Report run_scenario_file(const std::filesystem::path& path, const RunOptions& options = {});

/// Every *.json file in a directory, in name order.
std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir);

}  // namespace pdual

#endif  // PDUAL_RUNNER_HPP
