#include "cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/literal.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "rahecke/analysis.hpp"
#include "rahecke/errors.hpp"
#include "rahecke/ktheory.hpp"
#include "rahecke/traces.hpp"

namespace rahecke::cli {

namespace {

using nlohmann::json;

// A command result: the JSON document plus a flat table for csv/table output.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int exit_code = kExitOk;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
    return;
  }
  std::vector<std::size_t> width(o.header.size());
  for (std::size_t i = 0; i < o.header.size(); ++i) width[i] = o.header[i].size();
  for (const auto& r : o.rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << r[i];
    }
    out << "\n";
  };
  line(o.header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : o.rows) line(r);
}

std::string word_or_e(const CoxeterSystem& sys, const Elem& g) { return sys.format(g); }

std::string fmt_double(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

Output hecke_output(const HeckeElem& h) {
  Output o;
  o.doc = {{"literal", format_hecke_literal(h)}, {"terms", hecke_to_json(h)}};
  o.header = {"word", "coeff"};
  for (const auto& [w, c] : h.sorted_terms()) o.rows.push_back({word_or_e(h.system(), w), to_string(c)});
  return o;
}

Output cocentre_output(const CoxeterSystem& sys, const CocentreVector& v) {
  Output o;
  o.doc = {{"cocentre", cocentre_to_json(sys, v)}};
  o.header = {"class", "value"};
  for (const auto& [cls, c] : v) o.rows.push_back({sys.format(cls.rep), to_string(c)});
  return o;
}

json clique_labels(const CoxeterSystem& sys, Clique c) {
  json arr = json::array();
  for (GeneratorId s : letters_of(c)) arr.push_back(sys.name(s));
  return arr;
}

std::string clique_text(const CoxeterSystem& sys, Clique c) {
  std::string s = "{";
  auto ls = letters_of(c);
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + sys.name(ls[i]);
  return s + "}";
}

void warn_if_not_hyperbolic(const CoxeterSystem& sys, std::ostream& err) {
  if (auto sq = sys.induced_square()) {
    err << "warning: presentation is not hyperbolic (induced square";
    for (GeneratorId s : *sq) err << " " << sys.name(s);
    err << "); trace extension results assume hyperbolicity\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hecke algebra kernel for right-angled Coxeter systems", "rahecke"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "json";
  std::size_t depth = 4;
  std::uint64_t seed = 1;
  bool no_timestamp = false;
  app.add_option("--config", config_path, "JSON presentation file (default: pentagon, q_s = 4)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--depth", depth, "Ball radius for verify sweeps");
  app.add_option("--seed", seed, "Seed for randomized sweeps");
  app.add_flag("--no-timestamp", no_timestamp, "Omit timing fields for byte-identical output");

  std::string word_arg, lit_a, lit_b, class_word, suite = "all";
  std::size_t op_radius = 8;
  double r_param = 1.0, alpha = 0.5;

  auto* c_norm = app.add_subcommand("normalize", "Canonical ShortLex word of a group element");
  c_norm->add_option("word", word_arg, "Word in generator labels")->required();
  auto* c_mul = app.add_subcommand("mul", "Product of two Hecke element literals");
  c_mul->add_option("a", lit_a)->required();
  c_mul->add_option("b", lit_b)->required();
  auto* c_trace = app.add_subcommand("trace", "Delocalised trace at one conjugacy class");
  c_trace->add_option("element", lit_a)->required();
  c_trace->add_option("--class", class_word, "Word representing the class")->required();
  auto* c_coc = app.add_subcommand("cocentre", "All nonzero delocalised traces of an element");
  c_coc->add_option("element", lit_a)->required();
  auto* c_pair = app.add_subcommand("pairing", "Pairing matrix between clique projections and traces");
  auto* c_cliq = app.add_subcommand("cliques", "Cliques of the commutation graph");
  auto* c_hyp = app.add_subcommand("hyperbolic", "Induced-square test");
  auto* c_norms = app.add_subcommand("norms", "Sobolev norms, operator norm and propagation seminorm");
  c_norms->add_option("element", lit_a)->required();
  c_norms->add_option("--radius", op_radius, "Truncation radius for the operator norm");
  c_norms->add_option("--r", r_param, "Propagation exponent r");
  c_norms->add_option("--alpha", alpha, "Propagation exponent alpha")->check(CLI::Range(0.0, 1.0));
  auto* c_ver = app.add_subcommand("verify", "Run a verification suite");
  c_ver->add_option("--suite", suite)->check(CLI::IsMember({"combinatorics", "traces", "pairing", "analysis", "all"}));
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    SystemConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
    const CoxeterSystem& sys = *cfg.system;
    const ContextPtr& ctx = cfg.params;
    Output o;

    if (c_norm->parsed()) {
      Elem g = sys.parse(word_arg);
      o.doc = {{"input", word_arg}, {"word", sys.format(g)}, {"length", g.length()}};
      o.header = {"input", "word", "length"};
      o.rows = {{word_arg, sys.format(g), std::to_string(g.length())}};
    } else if (c_mul->parsed()) {
      o = hecke_output(mul(parse_hecke_literal(ctx, lit_a), parse_hecke_literal(ctx, lit_b)));
    } else if (c_trace->parsed()) {
      warn_if_not_hyperbolic(sys, err);
      TraceEngine te(ctx);
      HeckeElem h = parse_hecke_literal(ctx, lit_a);
      ConjClassId cls = te.class_id(sys.parse(class_word));
      Rational v = te.trace(h, cls);
      o.doc = {{"class", sys.format(cls.rep)}, {"value", to_string(v)}};
      o.header = {"class", "value"};
      o.rows = {{sys.format(cls.rep), to_string(v)}};
    } else if (c_coc->parsed()) {
      warn_if_not_hyperbolic(sys, err);
      TraceEngine te(ctx);
      o = cocentre_output(sys, te.cocentre_image(parse_hecke_literal(ctx, lit_a)));
    } else if (c_pair->parsed()) {
      warn_if_not_hyperbolic(sys, err);
      if (!ctx->is_iwahori()) throw UnsupportedParameter("pairing needs Iwahori parameters");
      PairingMatrix m = pairing_matrix(ctx);
      NondegeneracyReport nd = pairing_nondegeneracy(m);
      json labels = json::array(), matrix = json::array();
      o.header = {"clique"};
      for (Clique c : m.cliques) {
        labels.push_back(clique_text(sys, c));
        o.header.push_back(clique_text(sys, c));
      }
      for (std::size_t i = 0; i < m.cliques.size(); ++i) {
        json row = json::array();
        std::vector<std::string> r{clique_text(sys, m.cliques[i])};
        for (const auto& e : m.entries[i]) {
          row.push_back(to_string(e));
          r.push_back(to_string(e));
        }
        matrix.push_back(row);
        o.rows.push_back(std::move(r));
      }
      o.doc = {{"cliques", labels},
               {"matrix", matrix},
               {"paths_agree", true},
               {"nondegeneracy",
                {{"inclusion_triangular", nd.inclusion_triangular},
                 {"diagonal_nonzero", nd.diagonal_nonzero},
                 {"determinant", to_string(nd.determinant)},
                 {"nondegenerate", nd.nondegenerate}}}};
    } else if (c_cliq->parsed()) {
      json arr = json::array();
      o.header = {"clique", "class"};
      for (Clique c : enumerate_cliques(sys)) {
        std::string rep = sys.format(clique_to_class(sys, c).rep);
        arr.push_back({{"generators", clique_labels(sys, c)}, {"class", rep}});
        o.rows.push_back({clique_text(sys, c), rep});
      }
      o.doc = {{"cliques", arr}};
    } else if (c_hyp->parsed()) {
      auto sq = sys.induced_square();
      json cyc = json::array();
      std::string cyc_text;
      if (sq) {
        for (GeneratorId s : *sq) {
          cyc.push_back(sys.name(s));
          cyc_text += (cyc_text.empty() ? "" : " ") + sys.name(s);
        }
      }
      o.doc = {{"hyperbolic", !sq.has_value()}, {"cycle", sq ? cyc : json(nullptr)}};
      o.header = {"hyperbolic", "cycle"};
      o.rows = {{sq ? "false" : "true", cyc_text}};
    } else if (c_norms->parsed()) {
      if (!ctx->is_iwahori()) throw UnsupportedParameter("norms need Iwahori parameters");
      AnalysisEngine an(ctx);
      HeckeElem h = parse_hecke_literal(ctx, lit_a);
      SpectralNorm op = an.op_norm_lower(h, op_radius);
      double nu = an.propagation_seminorm(h, r_param, alpha);
      o.doc = {{"element", format_hecke_literal(h)},
               {"sobolev", {{"s0", sobolev_norm(h, 0)}, {"s1", sobolev_norm(h, 1)}, {"s2", sobolev_norm(h, 2)}}},
               {"op_norm_lower", {{"radius", op_radius}, {"value", op.value}, {"exact_on_ball", op.exact}}},
               {"propagation", {{"r", r_param}, {"alpha", alpha}, {"value", nu}}}};
      o.header = {"quantity", "value"};
      o.rows = {{"sobolev_0", fmt_double(sobolev_norm(h, 0))},
                {"sobolev_1", fmt_double(sobolev_norm(h, 1))},
                {"sobolev_2", fmt_double(sobolev_norm(h, 2))},
                {"op_norm_lower", fmt_double(op.value)},
                {"propagation", fmt_double(nu)}};
    } else if (c_ver->parsed()) {
      warn_if_not_hyperbolic(sys, err);
      Report rep = run_suite(cfg, suite, SuiteOptions{depth, seed});
      o.doc = rep.to_json(!no_timestamp);
      o.header = {"name", "pass", "lhs", "rhs"};
      for (const auto& c : rep.checks) o.rows.push_back({c.name, c.pass ? "PASS" : "FAIL", c.lhs.dump(), c.rhs.dump()});
      o.exit_code = rep.failed() == 0 ? kExitOk : kExitVerifyFailed;
    }
    emit(o, format, out);
    return o.exit_code;
  } catch (const TheoremCheckFailure& e) {
    err << "theorem check failed: " << e.what() << "\n";
    return kExitTheoremCheck;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace rahecke::cli
