#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pdual/runner.hpp"
#include "support.hpp"

using namespace pdual;
using namespace pdual::testing;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse_scenario(text, "inline");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  return "";
}

const char* kS1 = R"({
  "name": "two-point",
  "group": {"cyclic": 2},
  "algebra": {"product_of_fields": 2},
  "partial_action": {"explicit": {
    "idempotents": [["1", "1"], ["1", "0"]],
    "beta": [[["1", "0"], ["0", "1"]], [["1", "0"], ["0", "0"]]]}},
  "suites": ["axioms", "duality"],
  "expected": {"dim_kernel": KERNEL}
})";

std::string s1_with_kernel(int kernel) {
  std::string text = kS1;
  text.replace(text.find("KERNEL"), 6, std::to_string(kernel));
  return text;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("every bundled fixture passes") {
  const auto files = fixture_files(PDUAL_FIXTURE_DIR);
  CHECK(files.size() >= 16);
  for (const auto& path : files) {
    CAPTURE(path.filename().string());
    auto report = run_scenario_file(path);
    CHECK(report.all_passed());
    CHECK(report.count(Status::pass) > 0);
  }
}

TEST_CASE("inline scenarios and expectation mismatches") {
  auto spec = parse_scenario(s1_with_kernel(1), "inline");
  CHECK(spec.name == "two-point");
  CHECK(spec.field.is_rational());
  auto report = run_scenario(spec);
  CHECK(report.all_passed());
  CHECK(report.find("kernel.formula"));
  CHECK(report.find("grading.inclusion") == nullptr);

  auto wrong = run_scenario(parse_scenario(s1_with_kernel(2), "inline"));
  CHECK_FALSE(wrong.all_passed());
  const auto* c = wrong.find("expected.dim_kernel");
  REQUIRE(c);
  CHECK(c->status == Status::fail);
  CHECK(c->measured.at("expected") == 2);
  CHECK(c->measured.at("measured") == 1);
  CHECK(c->witnesses.front().find("ExpectationMismatch") == 0);
}

TEST_CASE("options override suites and field") {
  auto spec = parse_scenario(s1_with_kernel(1), "inline");
  RunOptions options;
  options.suites = {"grading"};
  auto grading = run_scenario(spec, options);
  CHECK(grading.find("grading.inclusion"));
  CHECK(grading.find("kernel.formula") == nullptr);
  options.suites.clear();
  options.field = Field::prime(7);
  auto mod7 = run_scenario(spec, options);
  CHECK(mod7.all_passed());
  options.suites = {"nonsense"};
  CHECK_THROWS_AS(run_scenario(spec, options), Error);
}

TEST_CASE("parse errors name the location") {
  CHECK(parse_error("{").find("inline: ") != std::string::npos);
  CHECK(parse_error(R"({"name": "x", "group": {"cyclic": 0}})").find("/group/cyclic") != std::string::npos);
  CHECK(parse_error(R"({"name": "x", "colour": 1})").find("unknown key 'colour'") != std::string::npos);
  CHECK(parse_error(R"({"name": "x", "group": {"cyclic": 2}, "algebra": {"product_of_fields": 2},
      "partial_action": {"explicit": {"idempotents": [["1", "1.5"], ["1", "0"]], "beta": []}}})")
            .find("/partial_action/explicit/idempotents/0/1") != std::string::npos);
  CHECK(parse_error(R"({"name": "x", "field": "fp:9"})").find("field") != std::string::npos);
  auto s1_text = s1_with_kernel(1);
  auto suites = s1_text;
  suites.replace(suites.find("\"duality\""), 9, "\"bogus\"");
  CHECK(parse_error(suites).find("/suites/1: unknown suite 'bogus'") != std::string::npos);
  auto expected = s1_text;
  expected.replace(expected.find("\"dim_kernel\": 1"), 15, "\"validation_error\": \"Sadness\"");
  CHECK(parse_error(expected).find("Sadness") != std::string::npos);
  CHECK(parse_error(R"({"name": "x"})").find("nothing to verify") != std::string::npos);
  try {
    load_scenario(fixture("does_not_exist"));
    FAIL("loaded a missing file");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("construction errors propagate unless expected") {
  auto text = read_file(fixture("bad_axiom_iii"));
  auto expected = run_scenario(parse_scenario(text, "bad"));
  CHECK(expected.all_passed());
  REQUIRE(expected.find("expected.validation_error"));
  auto spec = parse_scenario(text, "bad");
  spec.expected_error.reset();
  try {
    run_scenario(spec);
    FAIL("accepted an invalid action");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomIIIFails);
  }
  // Expecting a different error than the one raised fails the check.
  spec.expected_error = "AxiomIIFails";
  auto mismatch = run_scenario(spec);
  CHECK_FALSE(mismatch.all_passed());
}

TEST_CASE("reports are deterministic") {
  const auto path = fixture("z3_restriction");
  const auto a = emit_report(run_scenario_file(path), ReportFormat::structured);
  const auto b = emit_report(run_scenario_file(path), ReportFormat::structured);
  CHECK(a == b);
  RunOptions timed;
  timed.timing = true;
  CHECK(run_scenario_file(path, timed).wall_time_ms.has_value());
  CHECK_FALSE(run_scenario_file(path).wall_time_ms.has_value());
}

TEST_CASE("suite and expectation names") {
  CHECK(suite_names().front() == "axioms");
  CHECK(std::find(suite_names().begin(), suite_names().end(), "hopf") != suite_names().end());
  CHECK(std::is_sorted(expectation_keys().begin(), expectation_keys().end()));
}

}  // TEST_SUITE
