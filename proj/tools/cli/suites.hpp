#pragma once

#include <cstdint>
#include <string>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace rahecke::cli {

inline constexpr std::size_t kMaxVerifyDepth = 6;

struct SuiteOptions {
  std::size_t depth = 4;
  std::uint64_t seed = 1;
};

// suite is one of combinatorics, traces, pairing, analysis, all. Throws
// ResourceError when depth exceeds kMaxVerifyDepth.
Report run_suite(const SystemConfig& cfg, const std::string& suite, const SuiteOptions& opt);

}  // namespace rahecke::cli
