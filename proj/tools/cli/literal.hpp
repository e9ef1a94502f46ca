#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rahecke/hecke.hpp"
#include "rahecke/traces.hpp"

namespace rahecke::cli {

// term ("+" term)*, term = rational "*" "T[" word "]" | rational. A bare
// "T[word]" is read as coefficient 1.
HeckeElem parse_hecke_literal(const ContextPtr& ctx, std::string_view text);
// Inverse of the parser: "3/2*T[ba] + 1*T[b]", or "0".
std::string format_hecke_literal(const HeckeElem& h);
// [{"word": ..., "coeff": "num/den"}, ...] in ShortLex order.
nlohmann::json hecke_to_json(const HeckeElem& h);
// {class representative word: "num/den"}
nlohmann::json cocentre_to_json(const CoxeterSystem& sys, const CocentreVector& v);

}  // namespace rahecke::cli
