#pragma once

// Pass/fail lists shared by the verification routines.

#include <string>
#include <vector>

#include <json.hpp>

namespace cuntz {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs. computed on failure
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
  nlohmann::json to_json() const {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      items.push_back(std::move(j));
    }
    return {{"title", title}, {"ok", ok()}, {"checks", items}};
  }
};

}  // namespace cuntz
