#include "cli/literal.hpp"

#include <cctype>

#include "rahecke/errors.hpp"

namespace rahecke::cli {

namespace {

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  HeckeElem run() {
    HeckeElem out(ctx_);
    skip_ws();
    if (at_end()) fail("empty Hecke literal");
    for (;;) {
      parse_term(out);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+' between terms");
      ++pos_;
      skip_ws();
    }
    return out;
  }

 private:
  void parse_term(HeckeElem& out) {
    skip_ws();
    if (at_end()) fail("missing term");
    if (peek() == 'T') {
      out.add_term(parse_basis(), 1);
      return;
    }
    Rational c = parse_rational_token();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      out.add_term(parse_basis(), c);
    } else {
      out.add_term(Elem{}, c);
    }
  }

  Elem parse_basis() {
    if (text_.substr(pos_, 2) != "T[") fail("expected 'T['");
    pos_ += 2;
    auto close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("missing ']'");
    std::string_view word = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    return ctx_->system().parse(word);
  }

  Rational parse_rational_token() {
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    if (pos_ == start) fail("expected a rational coefficient");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad Hecke literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HeckeElem parse_hecke_literal(const ContextPtr& ctx, std::string_view text) { return Parser(ctx, text).run(); }

std::string format_hecke_literal(const HeckeElem& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : h.sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*T[" + h.system().format(w) + "]";
  }
  return out;
}

nlohmann::json hecke_to_json(const HeckeElem& h) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : h.sorted_terms()) {
    arr.push_back({{"word", h.system().format(w)}, {"coeff", to_string(c)}});
  }
  return arr;
}

nlohmann::json cocentre_to_json(const CoxeterSystem& sys, const CocentreVector& v) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [cls, c] : v) obj[sys.format(cls.rep)] = to_string(c);
  return obj;
}

}  // namespace rahecke::cli
