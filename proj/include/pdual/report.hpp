#ifndef PDUAL_REPORT_HPP
#define PDUAL_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdual {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status status);

/// Outcome of one named verification. Failures never throw; they carry
/// witnesses naming the offending group elements and basis indices.
struct Check {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string name;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  std::map<std::string, std::int64_t> measured;

  Check() = default;
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  bool passed() const { return status == Status::pass; }

  /// Marks the check failed; only the first few witnesses are kept, the
  /// total is counted under "failures".
  void fail(std::string witness);

  /// Records a failure built lazily by `witness()` when `ok` is false.
  template <class F>
  bool expect(bool ok, F&& witness) {
    if (!ok) fail(witness());
    return ok;
  }

  void measure(const std::string& key, std::int64_t value) { measured[key] = value; }
  void skip(std::string reason);

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  /// Present only when timing was requested; byte-stable output omits it.
  std::optional<double> wall_time_ms;

  Check& add(Check check);
  void merge(const Report& other);
  bool all_passed() const;
  const Check* find(std::string_view name) const;
  /// Deterministic order by check name.
  void sort();
  std::size_t count(Status status) const;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { text, structured };

/// Text: a stable, diff-friendly table. Structured: key-sorted JSON holding
/// every field of the report.
std::string emit_report(const Report& report, ReportFormat format);
Report parse_structured_report(std::string_view json);

}  // namespace pdual

#endif  // PDUAL_REPORT_HPP
