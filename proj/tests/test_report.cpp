#include <doctest.h>

#include "support.hpp"

using namespace pdual;

TEST_SUITE("report") {

TEST_CASE("structured reports round-trip") {
  Report report;
  report.subject = "sample";
  Check ok("a.pass");
  ok.measure("dim", 5);
  report.add(ok);
  Check bad("b.fail");
  bad.fail("g=x a=e0");
  report.add(bad);
  Check skipped("c.skipped");
  skipped.skip("not applicable");
  report.add(skipped);
  const auto text = emit_report(report, ReportFormat::structured);
  CHECK(parse_structured_report(text) == report);
  CHECK(emit_report(parse_structured_report(text), ReportFormat::structured) == text);
  CHECK_FALSE(report.all_passed());
  CHECK(report.count(Status::pass) == 1);
  CHECK(report.count(Status::fail) == 1);
  CHECK(report.count(Status::skipped) == 1);
  CHECK(report.find("b.fail")->measured.at("failures") == 1);
  CHECK(report.find("missing") == nullptr);

  report.wall_time_ms = 1.5;
  auto timed = parse_structured_report(emit_report(report, ReportFormat::structured));
  REQUIRE(timed.wall_time_ms);
  CHECK(*timed.wall_time_ms == doctest::Approx(1.5));
}

TEST_CASE("empty report") {
  Report report;
  report.subject = "nothing";
  CHECK(report.all_passed());
  CHECK(emit_report(report, ReportFormat::text) == "report: nothing\ncheck                                       status   measured\n");
  CHECK(parse_structured_report(emit_report(report, ReportFormat::structured)).checks.empty());
}

TEST_CASE("witnesses are capped but failures are counted") {
  Check c("many");
  for (int i = 0; i < 20; ++i) c.fail("witness " + std::to_string(i));
  CHECK(c.witnesses.size() == Check::kMaxWitnesses);
  CHECK(c.measured.at("failures") == 20);
  CHECK(c.witnesses.front() == "witness 0");
  int evaluated = 0;
  Check lazy("lazy");
  CHECK(lazy.expect(true, [&] {
    ++evaluated;
    return std::string("unused");
  }));
  CHECK(evaluated == 0);
  CHECK(lazy.passed());
}

TEST_CASE("text reports are sorted, aligned and free of trailing blanks") {
  Report report;
  report.subject = "s";
  report.add(Check("z.last"));
  Check first("a.first");
  first.measure("k", 2);
  report.add(first);
  report.sort();
  CHECK(report.checks.front().name == "a.first");
  const auto text = emit_report(report, ReportFormat::text);
  CHECK(text.find("a.first") < text.find("z.last"));
  CHECK(text.find(" \n") == std::string::npos);
  CHECK(text.find("summary: 2 pass, 0 fail, 0 skipped") != std::string::npos);
}

TEST_CASE("malformed structured reports are parse errors") {
  try {
    parse_structured_report("{\"subject\": 3}");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  CHECK_THROWS_AS(parse_structured_report(R"({"subject":"s","checks":[{"name":"a","status":"odd","witnesses":[],"measured":{}}]})"),
                  Error);
}

}  // TEST_SUITE
