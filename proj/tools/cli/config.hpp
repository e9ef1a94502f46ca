#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "rahecke/coxeter.hpp"
#include "rahecke/hecke.hpp"

namespace rahecke::cli {

struct SystemConfig {
  std::shared_ptr<const CoxeterSystem> system;
  ContextPtr params;
};

// {"generators": [...], "commuting_pairs": [[a, b], ...],
//  "mode": "iwahori" | "generic",
//  "q_sqrt": {label: "num/den"} or one string for every generator,
//  "generic_params": {"a": {label: ...}, "b": {label: ...}}}
SystemConfig parse_config(const nlohmann::json& doc);
SystemConfig load_config(const std::string& path);
// Pentagon with q_s = 4 for every generator.
SystemConfig default_config();

}  // namespace rahecke::cli
