#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace eiszeta {

using Json = nlohmann::ordered_json;

/// FLAGGED marks items where a printed claim and the computation are known to
/// disagree, or where the claim is vacuous; it never fails a run.
enum class Status { PASS, FAIL, FLAGGED };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::FLAGGED: return "FLAGGED";
  }
  return "?";
}

struct CheckItem {
  std::string subject;
  std::string claim;
  Status status = Status::PASS;
  Json witness = Json::object();
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  void add(std::string subject, std::string claim, Status status, Json witness = Json::object()) {
    items.push_back({std::move(subject), std::move(claim), status, std::move(witness)});
  }
  void add(std::string subject, std::string claim, bool ok, Json witness = Json::object()) {
    add(std::move(subject), std::move(claim), ok ? Status::PASS : Status::FAIL, std::move(witness));
  }

  bool failed() const {
    for (const auto& it : items)
      if (it.status == Status::FAIL) return true;
    return false;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& it : items) n += it.status == s;
    return n;
  }
};

/// 0 when nothing failed, 1 otherwise.
inline int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.failed()) return 1;
  return 0;
}

}  // namespace eiszeta
