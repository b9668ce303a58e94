#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "support.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#endif

using namespace pdual::testing;

namespace {

int run(const std::string& args, const std::string& output = "/dev/null") {
  const std::string command = std::string("\"") + PDUAL_CLI_PATH + "\" " + args + " > \"" + output + "\" 2>&1";
  const int raw = std::system(command.c_str());
#ifdef WEXITSTATUS
  return WEXITSTATUS(raw);
#else
  return raw;
#endif
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pdual_cli_" + name)).string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit status") {
  CHECK(run("verify \"" + fixture("s1").string() + "\"") == 0);
  CHECK(run("verify \"" + fixture("bad_axiom_ii").string() + "\"") == 0);
  CHECK(run("list-suites") == 0);
  CHECK(run("verify \"" + fixture("does_not_exist").string() + "\"") == 2);
  CHECK(run("verify") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("verify \"" + fixture("s1").string() + "\" --suite nonsense") == 2);
  CHECK(run("verify \"" + fixture("s1").string() + "\" --field fp:4") == 2);

  // A scenario whose expectation is wrong exits 1.
  const auto path = temp_path("mismatch.json");
  {
    std::ofstream out(path);
    out << R"({"name": "mismatch", "group": {"cyclic": 2}, "algebra": {"product_of_fields": 2},
      "partial_action": {"explicit": {"idempotents": [["1", "1"], ["1", "0"]],
        "beta": [[["1", "0"], ["0", "1"]], [["1", "0"], ["0", "0"]]]}},
      "suites": ["duality"], "expected": {"dim_kernel": 2}})";
  }
  CHECK(run("verify \"" + path + "\"") == 1);
  // An invalid action without a matching expectation is an input error.
  const auto bad = temp_path("invalid.json");
  {
    std::ofstream out(bad);
    out << R"({"name": "invalid", "group": {"cyclic": 2}, "algebra": {"product_of_fields": 2},
      "partial_action": {"explicit": {"idempotents": [["1", "1"], ["1", "0"]],
        "beta": [[["1", "0"], ["0", "1"]], [["0", "0"], ["0", "0"]]]}}})";
  }
  CHECK(run("verify \"" + bad + "\"") == 2);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST_CASE("structured output is byte-stable and written to --out") {
  const auto a = temp_path("a.json");
  const auto b = temp_path("b.json");
  const auto scenario = "\"" + fixture("z3_restriction").string() + "\"";
  REQUIRE(run("verify " + scenario + " --format structured --out \"" + a + "\"") == 0);
  REQUIRE(run("verify " + scenario + " --format structured", b) == 0);
  const auto first = read_file(a);
  CHECK(!first.empty());
  CHECK(first == read_file(b));
  auto report = pdual::parse_structured_report(first);
  CHECK(report.all_passed());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("suite selection and listing") {
  const auto out = temp_path("suites.txt");
  REQUIRE(run("list-suites", out) == 0);
  CHECK(read_file(out) == "axioms\ndot_identities\ngrading\nsmash\nduality\nseparability\ncenters\nhopf\n");
  REQUIRE(run("verify \"" + fixture("s1").string() + "\" --suite grading", out) == 0);
  const auto text = read_file(out);
  CHECK(text.find("grading.inclusion") != std::string::npos);
  CHECK(text.find("kernel.formula") == std::string::npos);
  std::filesystem::remove(out);
}

}  // TEST_SUITE
