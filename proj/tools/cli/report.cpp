#include "cli/report.hpp"

#include <algorithm>
#include <ctime>

namespace rahecke::cli {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json out;
  out["suite"] = suite;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["params"] = c.params;
    j["pass"] = c.pass;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["witness"] = c.witness;
    if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  out["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  if (with_timing) out["timestamp"] = utc_timestamp();
  return out;
}

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rahecke::cli
