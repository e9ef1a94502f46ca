#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace rahecke::cli {

struct CheckRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  nlohmann::json lhs;
  nlohmann::json rhs;
  nlohmann::json witness;
  double elapsed_ms = 0.0;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  // Timing and timestamp fields are omitted when with_timing is false, so
  // the output is byte-identical across runs.
  nlohmann::json to_json(bool with_timing) const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string utc_timestamp();

}  // namespace rahecke::cli
