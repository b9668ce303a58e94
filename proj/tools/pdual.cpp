// pdual: verify scenario files, list suites, or run the bundled corpus.
// Exit status: 0 when every check passes, 1 on a failed check or internal
// failure, 2 on unreadable or invalid input.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdual/runner.hpp"

#ifndef PDUAL_FIXTURE_DIR
#define PDUAL_FIXTURE_DIR "fixtures"
#endif

namespace {

int exit_status(const pdual::Error& err) { return err.kind() == pdual::ErrorKind::InternalFailure ? 1 : 2; }

int verify(const std::string& file, const std::vector<std::string>& suites, const std::string& field,
           const std::string& format, const std::string& out, bool timing) {
  pdual::RunOptions options;
  options.suites = suites;
  options.timing = timing;
  if (!field.empty()) options.field = pdual::Field::parse(field);
  const auto report = pdual::run_scenario_file(file, options);
  const auto text =
      pdual::emit_report(report, format == "structured" ? pdual::ReportFormat::structured : pdual::ReportFormat::text);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream stream(out, std::ios::binary);
    if (!stream) throw pdual::Error(pdual::ErrorKind::ParseError, "cannot write " + out);
    stream << text;
  }
  return report.all_passed() ? 0 : 1;
}

int selftest(const std::string& dir) {
  const auto files = pdual::fixture_files(dir);
  if (files.empty()) {
    std::cerr << "no fixtures in " << dir << "\n";
    return 2;
  }
  int status = 0;
  for (const auto& path : files) {
    const auto name = path.filename().string();
    try {
      const auto report = pdual::run_scenario_file(path);
      const bool ok = report.all_passed();
      std::cout << (ok ? "pass  " : "FAIL  ") << name << "  (" << report.count(pdual::Status::pass) << " pass, "
                << report.count(pdual::Status::fail) << " fail)\n";
      if (!ok) {
        status = 1;
        for (const auto& c : report.checks) {
          if (c.status == pdual::Status::fail) std::cout << "      " << c.name << ": " << c.witnesses.front() << "\n";
        }
      }
    } catch (const pdual::Error& err) {
      std::cout << "ERROR " << name << "  " << err.what() << "\n";
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of partial group and Hopf actions, skew group rings and their duality"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> suites;
  std::string field;
  std::string format = "text";
  std::string out;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites of one scenario file");
  verify_cmd->add_option("scenario", file, "Scenario file")->required();
  verify_cmd->add_option("--suite", suites, "Suite to run (repeatable); defaults to the scenario's selection")
      ->check(CLI::IsMember(pdual::suite_names()));
  verify_cmd->add_option("--field", field, "Override the base field: q or fp:<p>");
  verify_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  verify_cmd->add_option("--out", out, "Write the report to a file instead of stdout");
  verify_cmd->add_flag("--timing", timing, "Record wall time in the report");

  auto* list_cmd = app.add_subcommand("list-suites", "Print the available suites");

  std::string fixtures = PDUAL_FIXTURE_DIR;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run every scenario in the bundled fixture directory");
  selftest_cmd->add_option("--fixtures", fixtures, "Fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return verify(file, suites, field, format, out, timing);
    if (*list_cmd) {
      for (const auto& name : pdual::suite_names()) std::cout << name << "\n";
      return 0;
    }
    if (*selftest_cmd) return selftest(fixtures);
  } catch (const pdual::Error& err) {
    std::cerr << "pdual: " << err.what() << "\n";
    return exit_status(err);
  } catch (const std::exception& err) {
    std::cerr << "pdual: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
