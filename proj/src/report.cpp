#include "h4n/report.hpp"

namespace h4n {

std::string status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Deviation: return "deviation";
    case Status::Info: return "info";
  }
  return "?";
}

void Report::add(const std::string& id, Status status, const std::string& detail) {
  items.push_back(CheckItem{id, status, detail});
}

void Report::pass(const std::string& id, const std::string& detail) {
  add(id, Status::Pass, detail);
}

void Report::fail(const std::string& id, const std::string& detail) {
  add(id, Status::Fail, detail);
}

void Report::deviation(const std::string& id, const std::string& detail) {
  add(id, Status::Deviation, detail);
}

void Report::info(const std::string& id, const std::string& detail) {
  add(id, Status::Info, detail);
}

void Report::require(const std::string& id, bool ok, const std::string& detail_on_fail) {
  if (ok) {
    pass(id);
  } else {
    fail(id, detail_on_fail);
  }
}

void Report::merge(const Report& o) {
  items.insert(items.end(), o.items.begin(), o.items.end());
}

int Report::count(Status s) const {
  int c = 0;
  for (const auto& it : items) {
    if (it.status == s) ++c;
  }
  return c;
}

}  // namespace h4n
