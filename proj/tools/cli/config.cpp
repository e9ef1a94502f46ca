#include "cli/config.hpp"

#include <fstream>
#include <sstream>

#include "rahecke/errors.hpp"
#include "rahecke/presentations.hpp"

namespace rahecke::cli {

namespace {

using nlohmann::json;

std::string rational_text(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(what + " must be a rational string \"num/den\"");
}

// Either one value for all generators or a label-keyed table.
std::vector<Rational> per_generator(const CoxeterSystem& sys, const json& v, const std::string& what) {
  std::vector<Rational> out(sys.rank());
  if (v.is_string() || v.is_number_integer()) {
    Rational q = parse_rational(rational_text(v, what));
    std::fill(out.begin(), out.end(), q);
    return out;
  }
  if (!v.is_object()) throw InputError(what + " must be a string or a table keyed by generator label");
  std::vector<bool> seen(sys.rank(), false);
  for (auto it = v.begin(); it != v.end(); ++it) {
    auto id = sys.find(it.key());
    if (!id) throw InputError(what + " names unknown generator '" + it.key() + "'");
    out[*id] = parse_rational(rational_text(it.value(), what));
    seen[*id] = true;
  }
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    if (!seen[s]) throw InputError(what + " is missing generator '" + sys.name(static_cast<GeneratorId>(s)) + "'");
  }
  return out;
}

}  // namespace

SystemConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw InputError("config needs a \"generators\" array");
  }
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw InputError("generator labels must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("commuting_pairs")) {
    if (!doc["commuting_pairs"].is_array()) throw InputError("\"commuting_pairs\" must be an array");
    for (const auto& p : doc["commuting_pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw InputError("each commuting pair must be a two-element array of labels");
      }
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  auto sys = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_labels(names, pairs));

  std::string mode = doc.value("mode", std::string("iwahori"));
  SystemConfig cfg;
  cfg.system = sys;
  if (mode == "iwahori") {
    json q = doc.contains("q_sqrt") ? doc["q_sqrt"] : json("2");
    cfg.params = ParamContext::iwahori(sys, per_generator(*sys, q, "q_sqrt"));
  } else if (mode == "generic") {
    if (!doc.contains("generic_params")) throw InputError("generic mode needs \"generic_params\"");
    const json& gp = doc["generic_params"];
    if (!gp.is_object() || !gp.contains("a") || !gp.contains("b")) {
      throw InputError("\"generic_params\" needs tables \"a\" and \"b\"");
    }
    cfg.params = ParamContext::generic(sys, per_generator(*sys, gp["a"], "generic_params.a"),
                                       per_generator(*sys, gp["b"], "generic_params.b"));
  } else {
    throw InputError("unknown mode '" + mode + "' (expected iwahori or generic)");
  }
  return cfg;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

SystemConfig default_config() {
  auto sys = std::make_shared<const CoxeterSystem>(presentations::pentagon());
  return SystemConfig{sys, ParamContext::iwahori_uniform(sys, 2)};
}

}  // namespace rahecke::cli
