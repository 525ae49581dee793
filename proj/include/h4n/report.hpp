#pragma once

#include <string>
#include <vector>

namespace h4n {

/// Outcome of one verification item. `Deviation` marks a reproducible
/// disagreement between the computed ground truth and a bundled reference
/// claim; it is reported distinctly from `Fail` (an internal check that must
/// never break) and exits nonzero at the CLI. `Info` lines never affect the
/// exit code.
enum class Status { Pass, Fail, Deviation, Info };

std::string status_str(Status s);

struct CheckItem {
  std::string id;
  Status status;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;

  void add(const std::string& id, Status status, const std::string& detail = "");
  void pass(const std::string& id, const std::string& detail = "");
  void fail(const std::string& id, const std::string& detail = "");
  void deviation(const std::string& id, const std::string& detail = "");
  void info(const std::string& id, const std::string& detail = "");
  /// pass/fail shorthand for boolean checks.
  void require(const std::string& id, bool ok, const std::string& detail_on_fail = "");
  void merge(const Report& o);

  int count(Status s) const;
  bool any_fail() const { return count(Status::Fail) > 0; }
  bool any_deviation() const { return count(Status::Deviation) > 0; }
  /// True when nothing failed and nothing deviated.
  bool clean() const { return !any_fail() && !any_deviation(); }
};

}  // namespace h4n
