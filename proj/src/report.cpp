#include "pdual/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "pdual/error.hpp"

namespace pdual {

std::string_view status_name(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw Error(ErrorKind::ParseError, "unknown check status '" + s + "'");
}

}  // namespace

void Check::fail(std::string witness) {
  status = Status::fail;
  ++measured["failures"];
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void Check::skip(std::string reason) {
  status = Status::skipped;
  witnesses.push_back(std::move(reason));
}

Check& Report::add(Check check) {
  checks.push_back(std::move(check));
  return checks.back();
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

const Check* Report::find(std::string_view name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::size_t Report::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

namespace {

std::string text_report(const Report& report) {
  std::ostringstream out;
  out << "report: " << report.subject << "\n";
  out << std::left << std::setw(44) << "check" << std::setw(9) << "status" << "measured\n";
  for (const auto& check : report.checks) {
    std::ostringstream line;
    line << std::left << std::setw(44) << check.name << std::setw(9) << status_name(check.status);
    for (const auto& [key, value] : check.measured) line << key << "=" << value << " ";
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
    for (const auto& w : check.witnesses) out << "    witness: " << w << "\n";
  }
  if (!report.checks.empty()) {
    out << "summary: " << report.count(Status::pass) << " pass, " << report.count(Status::fail) << " fail, "
        << report.count(Status::skipped) << " skipped\n";
  }
  if (report.wall_time_ms) out << "wall_time_ms: " << std::fixed << std::setprecision(3) << *report.wall_time_ms << "\n";
  return out.str();
}

std::string structured_report(const Report& report) {
  nlohmann::json doc;
  doc["subject"] = report.subject;
  doc["checks"] = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json c;
    c["name"] = check.name;
    c["status"] = std::string(status_name(check.status));
    c["witnesses"] = check.witnesses;
    c["measured"] = nlohmann::json::object();
    for (const auto& [key, value] : check.measured) c["measured"][key] = value;
    doc["checks"].push_back(std::move(c));
  }
  doc["summary"] = {{"pass", report.count(Status::pass)},
                    {"fail", report.count(Status::fail)},
                    {"skipped", report.count(Status::skipped)}};
  if (report.wall_time_ms) doc["wall_time_ms"] = *report.wall_time_ms;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::text ? text_report(report) : structured_report(report);
}

Report parse_structured_report(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
    Report report;
    report.subject = doc.at("subject").get<std::string>();
    for (const auto& c : doc.at("checks")) {
      Check check(c.at("name").get<std::string>());
      check.status = parse_status(c.at("status").get<std::string>());
      check.witnesses = c.at("witnesses").get<std::vector<std::string>>();
      for (const auto& [key, value] : c.at("measured").items()) check.measured[key] = value.get<std::int64_t>();
      report.checks.push_back(std::move(check));
    }
    if (doc.contains("wall_time_ms")) report.wall_time_ms = doc["wall_time_ms"].get<double>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace pdual
