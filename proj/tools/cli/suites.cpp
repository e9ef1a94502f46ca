#include "cli/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_set>

#include "cli/literal.hpp"
#include "rahecke/analysis.hpp"
#include "rahecke/errors.hpp"
#include "rahecke/ktheory.hpp"
#include "rahecke/traces.hpp"

namespace rahecke::cli {

namespace {

using nlohmann::json;
using ElemSet = std::unordered_set<Elem, ElemHash>;

struct Outcome {
  bool pass = true;
  json lhs;
  json rhs;
  json witness;
};

void record(Report& rep, const std::string& name, json params, const std::function<Outcome()>& body) {
  Stopwatch sw;
  Outcome o = body();
  CheckRecord c;
  c.name = name;
  c.params = std::move(params);
  c.pass = o.pass;
  c.lhs = std::move(o.lhs);
  c.rhs = std::move(o.rhs);
  c.witness = std::move(o.witness);
  c.elapsed_ms = sw.ms();
  rep.checks.push_back(std::move(c));
}

// Counts failures, keeping the first as a witness.
struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  json witness;
  void add(bool ok, const std::function<json()>& describe) {
    ++checked;
    if (!ok) {
      if (failures == 0) witness = describe();
      ++failures;
    }
  }
  Outcome outcome() const { return Outcome{failures == 0, json{{"failures", failures}}, json{{"checked", checked}}, witness}; }
};

HeckeElem random_element(const ContextPtr& ctx, const std::vector<Elem>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), terms(1, 4);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  HeckeElem h(ctx);
  std::size_t k = terms(rng);
  while (h.support_size() < k) {
    int n = num(rng);
    if (n == 0) continue;
    Rational c(n, den(rng));
    c.canonicalize();
    h.add_term(pool[pick(rng)], c);
  }
  return h;
}

// {x g x^{-1} : x in conjugators} restricted to length <= max_len.
ElemSet conjugates(const CoxeterSystem& sys, const Elem& g, const std::vector<Elem>& conjugators,
                   std::size_t max_len) {
  ElemSet out;
  for (const Elem& x : conjugators) {
    Elem c = sys.multiply(sys.multiply(x, g), sys.inverse(x));
    if (c.length() <= max_len) out.insert(c);
  }
  return out;
}

// ---------------------------------------------------------------- combinatorics

void combinatorics(const SystemConfig& cfg, const SuiteOptions& opt, Report& rep) {
  const CoxeterSystem& sys = *cfg.system;
  const std::size_t d = opt.depth;
  const json base{{"depth", d}};
  auto ball = sys.ball(d);

  record(rep, "normal_form_tits_invariance", {{"depth", d}, {"samples", 500}, {"seed", opt.seed}}, [&] {
    std::mt19937_64 rng(opt.seed);
    Tally t;
    if (sys.rank() == 0) return t.outcome();
    std::uniform_int_distribution<std::size_t> len(0, 2 * d), gen(0, sys.rank() - 1);
    for (int i = 0; i < 500; ++i) {
      Word w(len(rng));
      for (auto& s : w) s = static_cast<GeneratorId>(gen(rng));
      Elem ref = sys.normalize(w);
      Word moved = w;
      std::uniform_int_distribution<std::size_t> pos(0, moved.size());
      std::size_t p = pos(rng);
      auto s = static_cast<GeneratorId>(gen(rng));
      moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(p), {s, s});
      for (std::size_t j = 0; j + 1 < moved.size(); ++j) {
        if (sys.commute(moved[j], moved[j + 1]) && (rng() & 1U)) std::swap(moved[j], moved[j + 1]);
      }
      t.add(sys.normalize(moved) == ref && sys.normalize(ref.word()) == ref,
            [&] { return json{{"word", sys.format_word(w)}, {"moved", sys.format_word(moved)}}; });
    }
    return t.outcome();
  });

  record(rep, "unique_cancellation_index", base, [&] {
    Tally t;
    for (const Elem& g : ball) {
      for (GeneratorId s : letters_of(sys.terminal_letters(g))) {
        Elem target = sys.right_multiply(g, s);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < g.length(); ++i) {
          Word w = g.word();
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          if (w.size() == target.length() && sys.normalize(w) == target) ++hits;
        }
        t.add(hits == 1, [&] { return json{{"element", sys.format(g)}, {"letter", sys.name(s)}, {"indices", hits}}; });
      }
    }
    return t.outcome();
  });

  record(rep, "bruhat_subword_property", {{"depth", std::min<std::size_t>(d, 5)}}, [&] {
    Tally t;
    auto small = sys.ball(std::min<std::size_t>(d, 5));
    for (const Elem& w : small) {
      ElemSet sub;
      for (std::uint32_t mask = 0; mask < (1U << w.length()); ++mask) {
        Word part;
        for (std::size_t i = 0; i < w.length(); ++i) {
          if ((mask >> i) & 1U) part.push_back(w.word()[i]);
        }
        sub.insert(sys.normalize(part));
      }
      for (const Elem& x : small) {
        if (x.length() > w.length()) break;
        t.add(sys.bruhat_leq(x, w) == (sub.count(x) > 0),
              [&] { return json{{"x", sys.format(x)}, {"w", sys.format(w)}}; });
      }
    }
    return t.outcome();
  });

  record(rep, "cyclic_reduction_decomposition", base, [&] {
    Tally t;
    for (const Elem& g : ball) {
      auto cr = sys.cyclic_reduce(g);
      Elem back = sys.multiply(sys.multiply(cr.gamma, cr.rho), sys.inverse(cr.gamma));
      t.add(back == g && g.length() == 2 * cr.gamma.length() + cr.rho.length() && sys.is_min_length_in_class(cr.rho),
            [&] { return json{{"element", sys.format(g)}}; });
    }
    return t.outcome();
  });

  const std::size_t cd = std::min<std::size_t>(d, 4);
  record(rep, "conjugacy_vs_brute_force", {{"depth", cd}}, [&] {
    Tally t;
    auto small = sys.ball(cd);
    std::vector<Elem> conj_ball = sys.ball(2 * cd);
    for (const Elem& g : small) {
      std::vector<Elem> xs;
      for (const Elem& x : conj_ball) {
        if (x.length() <= cd + g.length()) xs.push_back(x);
      }
      ElemSet orbit = conjugates(sys, g, xs, cd);
      ConjClassId id = sys.conj_class_id(g);
      for (const Elem& h : small) {
        bool same = sys.conj_class_id(h) == id;
        t.add(same == (orbit.count(h) > 0), [&] { return json{{"g", sys.format(g)}, {"h", sys.format(h)}}; });
      }
    }
    return t.outcome();
  });

  record(rep, "cyclic_shift_orbits", {{"depth", cd}}, [&] {
    Tally t;
    auto small = sys.ball(cd);
    std::vector<Elem> conj_ball = sys.ball(2 * cd);
    ElemSet done;
    for (const Elem& g : small) {
      if (done.count(g)) continue;
      ElemSet cls = conjugates(sys, g, conj_ball, cd);
      std::size_t lmin = g.length();
      for (const Elem& h : cls) lmin = std::min(lmin, h.length());
      std::vector<Elem> minimal;
      for (const Elem& h : cls) {
        done.insert(h);
        if (h.length() == lmin) minimal.push_back(h);
      }
      std::sort(minimal.begin(), minimal.end());
      t.add(sys.cyclic_shifts(minimal.front()) == minimal, [&] { return json{{"class_of", sys.format(g)}}; });
    }
    return t.outcome();
  });

  record(rep, "product_witnesses", base, [&] {
    Tally t;
    for (const Elem& w : ball) {
      for (const Elem& x : ball) {
        for (const auto& [u, c] : prod_set(cfg.params, w, x)) {
          bool ok;
          try {
            ok = witness_is_valid(sys, w, x, u, product_witness(cfg.params, w, x, u));
          } catch (const TheoremCheckFailure&) {
            ok = false;
          }
          t.add(ok, [&] { return json{{"w", sys.format(w)}, {"x", sys.format(x)}, {"u", sys.format(u)}}; });
        }
      }
    }
    return t.outcome();
  });

  record(rep, "product_bounds", base, [&] {
    Tally t;
    std::size_t widest = 0;
    for (const Elem& w : ball) {
      for (const Elem& x : ball) {
        auto b = check_prod_bounds(cfg.params, w, x);
        for (auto c : b.level_counts) widest = std::max(widest, c);
        t.add(b.size_ok && b.coeff_ok, [&] {
          return json{{"w", sys.format(w)}, {"x", sys.format(x)}, {"size", b.prod_size}, {"max_coeff", to_string(b.max_coeff)}};
        });
      }
    }
    Outcome o = t.outcome();
    o.lhs["max_level_count"] = widest;
    return o;
  });

  record(rep, "class_partial_order", base, [&] {
    TraceEngine te(cfg.params);
    std::set<ConjClassId> classes;
    for (const Elem& g : ball) classes.insert(te.class_id(g));
    std::vector<ConjClassId> cl(classes.begin(), classes.end());
    const std::size_t n = cl.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rel[i][j] = te.class_leq(cl[i], cl[j]);
    }
    Tally t;
    for (std::size_t i = 0; i < n; ++i) {
      t.add(rel[i][i], [&] { return json{{"reflexive", sys.format(cl[i].rep)}}; });
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          t.add(!(rel[i][j] && rel[j][i]),
                [&] { return json{{"antisymmetric", {sys.format(cl[i].rep), sys.format(cl[j].rep)}}}; });
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (rel[i][j] && rel[j][k]) {
            t.add(rel[i][k], [&] {
              return json{{"transitive", {sys.format(cl[i].rep), sys.format(cl[j].rep), sys.format(cl[k].rep)}}};
            });
          }
        }
      }
    }
    Outcome o = t.outcome();
    o.lhs["classes"] = n;
    return o;
  });

  record(rep, "hyperbolicity", json::object(), [&] {
    Outcome o;
    auto sq = sys.induced_square();
    o.lhs = !sq.has_value();
    if (sq) {
      json c = json::array();
      for (GeneratorId s : *sq) c.push_back(sys.name(s));
      o.witness = c;
    }
    return o;
  });
}

// ---------------------------------------------------------------- traces

void traces(const SystemConfig& cfg, const SuiteOptions& opt, Report& rep) {
  const CoxeterSystem& sys = *cfg.system;
  const ContextPtr& ctx = cfg.params;
  TraceEngine te(ctx);
  const std::size_t d = opt.depth;
  auto ball = sys.ball(d);
  auto big = sys.ball(d + 2);

  record(rep, "phi_supported_on_minimal", {{"depth", d + 2}}, [&] {
    Tally t;
    for (const Elem& w : big) {
      HeckeElem f = te.phi(t_basis(ctx, w));
      bool ok = std::all_of(f.terms().begin(), f.terms().end(),
                            [&](const auto& kv) { return sys.is_min_length_in_class(kv.first); });
      t.add(ok, [&] { return json{{"w", sys.format(w)}}; });
    }
    return t.outcome();
  });

  record(rep, "trace_property", {{"depth", d}, {"random_pairs", 200}, {"seed", opt.seed}}, [&] {
    Tally t;
    for (GeneratorId s = 0; s < sys.rank(); ++s) {
      HeckeElem ts = t_basis(ctx, sys.generator(s));
      for (const Elem& w : big) {
        HeckeElem tw = t_basis(ctx, w);
        t.add(te.cocentre_image(mul(ts, tw)) == te.cocentre_image(mul(tw, ts)),
              [&] { return json{{"s", sys.name(s)}, {"w", sys.format(w)}}; });
      }
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 200; ++i) {
      HeckeElem a = random_element(ctx, ball, rng), b = random_element(ctx, ball, rng);
      t.add(te.cocentre_image(mul(a, b)) == te.cocentre_image(mul(b, a)),
            [&] { return json{{"a", format_hecke_literal(a)}, {"b", format_hecke_literal(b)}}; });
    }
    return t.outcome();
  });

  record(rep, "conjugation_lemma", {{"depth", d + 2}}, [&] {
    Tally t;
    for (const Elem& w : big) {
      for (GeneratorId s : letters_of(sys.initial_letters(w) & sys.terminal_letters(w))) {
        Elem wp = sys.conjugate(s, w);
        if (wp.length() + 2 != w.length()) continue;
        HeckeElem ts = t_basis(ctx, sys.generator(s));
        HeckeElem rhs = te.phi(mul(t_basis(ctx, wp), mul(ts, ts)));
        t.add(te.phi(t_basis(ctx, w)) == rhs, [&] { return json{{"w", sys.format(w)}, {"s", sys.name(s)}}; });
      }
    }
    return t.outcome();
  });

  record(rep, "dual_basis", {{"depth", d + 1}}, [&] {
    std::set<ConjClassId> classes;
    for (const Elem& g : sys.ball(d + 1)) classes.insert(te.class_id(g));
    Tally t;
    for (const ConjClassId& u : classes) {
      HeckeElem tu = t_basis(ctx, u.rep);
      for (const ConjClassId& o : classes) {
        Rational want = o == u ? 1 : 0;
        t.add(te.trace(tu, o) == want, [&] { return json{{"O", sys.format(o.rep)}, {"U", sys.format(u.rep)}}; });
      }
    }
    Outcome out = t.outcome();
    out.lhs["classes"] = classes.size();
    return out;
  });

  record(rep, "delta_prime_factorization", {{"depth", d + 1}}, [&] {
    Tally t;
    for (const Elem& w : sys.ball(d + 1)) {
      t.add(te.delta_prime_image(w) == te.cocentre_image(t_basis(ctx, w)), [&] { return json{{"w", sys.format(w)}}; });
    }
    return t.outcome();
  });

  record(rep, "gamma_rho_route", {{"depth", d + 1}}, [&] {
    Tally t;
    for (const Elem& w : sys.ball(d + 1)) {
      HeckeElem tw = t_basis(ctx, w);
      t.add(te.sigma_vector(te.phi_via_gamma_rho(tw)) == te.cocentre_image(tw),
            [&] { return json{{"w", sys.format(w)}}; });
    }
    return t.outcome();
  });

  record(rep, "minimal_conjugation_support", {{"total_length", d + 2}}, [&] {
    Tally t;
    for (const Elem& wp : big) {
      if (!sys.is_min_length_in_class(wp)) continue;
      for (const Elem& x : big) {
        if (2 * x.length() + wp.length() > d + 2) continue;
        Elem full = sys.multiply(sys.multiply(x, wp), sys.inverse(x));
        if (full.length() != 2 * x.length() + wp.length()) continue;
        t.add(te.min_conjugation_support_check(x, wp), [&] { return json{{"x", sys.format(x)}, {"w'", sys.format(wp)}}; });
      }
    }
    return t.outcome();
  });

  record(rep, "bruhat_subordinate_support", {{"depth", d}}, [&] {
    Tally t;
    for (const Elem& w : ball) {
      std::set<ConjClassId> below;
      for (const Elem& g : sys.bruhat_interval(w)) below.insert(te.class_id(g));
      for (const auto& [cls, v] : te.cocentre_image(t_basis(ctx, w))) {
        t.add(below.count(cls) > 0, [&] { return json{{"w", sys.format(w)}, {"class", sys.format(cls.rep)}}; });
      }
    }
    return t.outcome();
  });
}

// ---------------------------------------------------------------- pairing

void pairing(const SystemConfig& cfg, const SuiteOptions&, Report& rep) {
  const ContextPtr& ctx = cfg.params;
  const CoxeterSystem& sys = *cfg.system;
  if (!ctx->is_iwahori()) {
    record(rep, "pairing_matrix", json::object(), [] {
      return Outcome{true, "skipped", "needs Iwahori parameters", json()};
    });
    return;
  }
  PairingMatrix m = pairing_matrix(ctx);  // TheoremCheckFailure propagates (exit 3)
  NondegeneracyReport nd = pairing_nondegeneracy(m);
  const json params{{"cliques", m.cliques.size()}};

  record(rep, "pairing_paths_agree", params, [&] { return Outcome{true, "trace of p_D", "closed form", json()}; });
  record(rep, "pairing_triangular", params, [&] { return Outcome{nd.inclusion_triangular, nd.inclusion_triangular, true, json()}; });
  record(rep, "pairing_diagonal_nonzero", params, [&] { return Outcome{nd.diagonal_nonzero, nd.diagonal_nonzero, true, json()}; });
  record(rep, "pairing_determinant", params, [&] {
    return Outcome{nd.nondegenerate, to_string(nd.determinant), "nonzero", json()};
  });

  record(rep, "projection_idempotent_selfadjoint", params, [&] {
    Tally t;
    for (Clique c : m.cliques) {
      HeckeElem p = projection_p(ctx, c);
      t.add(mul(p, p) == p && star(p) == p, [&] { return json{{"clique", sys.format(sys.normalize(letters_of(c)))}}; });
    }
    return t.outcome();
  });

  record(rep, "projection_order_independent", params, [&] {
    Tally t;
    for (Clique c : m.cliques) {
      auto letters = letters_of(c);
      HeckeElem ref = projection_p(ctx, c);
      std::sort(letters.begin(), letters.end());
      do {
        HeckeElem p = HeckeElem::scalar(ctx, 1);
        for (GeneratorId s : letters) p = mul(p, chi_one(ctx, s));
        t.add(p == ref, [&] { return json{{"order", sys.format_word(letters)}}; });
      } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return t.outcome();
  });
}

// ---------------------------------------------------------------- analysis

void analysis(const SystemConfig& cfg, const SuiteOptions& opt, Report& rep) {
  const ContextPtr& ctx = cfg.params;
  const CoxeterSystem& sys = *cfg.system;
  bool positive = ctx->is_iwahori() && sys.rank() > 0;
  for (std::size_t s = 0; positive && s < sys.rank(); ++s) positive = sgn(ctx->p(static_cast<GeneratorId>(s))) > 0;
  if (!positive) {
    record(rep, "analysis", json::object(), [] {
      return Outcome{true, "skipped", "needs Iwahori parameters with q_s > 1", json()};
    });
    return;
  }
  AnalysisEngine an(ctx);
  const std::size_t d = opt.depth;
  const std::size_t support = std::min<std::size_t>(d, 3);
  const std::size_t n_op = d + 2;
  auto pool = sys.ball(support);
  std::mt19937_64 rng(opt.seed);
  std::vector<HeckeElem> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(random_element(ctx, pool, rng));
  std::vector<double> norms;
  for (const auto& h : sample) norms.push_back(an.op_norm_lower(h, n_op).value);

  record(rep, "haagerup_probe", {{"support_radius", support}, {"N", n_op}, {"samples", sample.size()}}, [&] {
    Tally t;
    double c = an.haagerup_constant();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      double rhs = c * sobolev_norm(sample[i], 2.0);
      t.add(inequality_holds(norms[i], rhs), [&] { return json{{"h", format_hecke_literal(sample[i])}}; });
    }
    Outcome o = t.outcome();
    o.lhs["constant"] = c;
    return o;
  });

  record(rep, "sobolev_propagation_comparison", {{"n", {1, 2}}, {"r_alpha", {{1, 0.5}, {2, 0.5}}}}, [&] {
    Tally t;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t n : {1, 2}) {
        for (double r : {1.0, 2.0}) {
          auto rp = an.sobolev_propagation_check(sample[i], n, r, 0.5, norms[i]);
          t.add(rp.sobolev_by_propagation.pass && rp.propagation_by_sobolev.pass,
                [&] { return json{{"h", format_hecke_literal(sample[i])}, {"n", n}, {"r", r}}; });
        }
      }
    }
    return t.outcome();
  });

  const std::size_t qd_depth = std::min<std::size_t>(d, 3);
  record(rep, "quasi_derivation_domination", {{"depth", qd_depth}}, [&] {
    std::size_t geo = geodesic_stability_constant(sys, 2 * qd_depth);
    std::size_t bound = 2 * geo;
    std::size_t worst = 0;
    Tally t;
    auto b = sys.ball(qd_depth);
    for (const Elem& w : b) {
      for (const Elem& x : b) {
        auto dmin = an.minimal_qd_radius(w, x, bound);
        if (dmin) worst = std::max(worst, *dmin);
        t.add(dmin.has_value(), [&] { return json{{"w", sys.format(w)}, {"x", sys.format(x)}}; });
      }
    }
    Outcome o = t.outcome();
    o.lhs["max_minimal_radius"] = worst;
    o.rhs["radius_bound"] = bound;
    return o;
  });

  record(rep, "power_sum_decay", {{"r", 1}, {"alpha", 0.5}, {"starts", {1, 2, 4, 8}}, {"N", {12, 16}}}, [&] {
    const Rational& r = ctx->q_sqrt(0);
    Rational inv = 1 / r;
    Rational scale = 1 / (2 * (r > inv ? r : inv));
    HeckeElem h = HeckeElem::basis(ctx, sys.generator(0), scale);
    auto ps = an.power_sum_decay_check(h, 1.0, 0.5, {1, 2, 4, 8}, 12, 16);
    bool ok = ps.non_increasing_after_max && ps.max_relative_change < 1e-6;
    return Outcome{ok, json{{"ratios", ps.ratios}}, json{{"ratios_at_compare_end", ps.compare_ratios}},
                   json{{"max_relative_change", ps.max_relative_change}}};
  });

  record(rep, "sobolev_submultiplicativity", {{"depth", std::min<std::size_t>(d, 3)}, {"t", 2}}, [&] {
    Tally t;
    double worst_t = 0.0;
    auto b = sys.ball(std::min<std::size_t>(d, 3));
    for (const Elem& w : b) {
      for (const Elem& x : b) {
        for (double s : {0.0, 1.0, 2.0}) {
          auto pr = an.sobolev_submult_probe(t_basis(ctx, w), t_basis(ctx, x), s, 2.0);
          worst_t = std::max(worst_t, pr.minimal_t);
          t.add(pr.check.pass, [&] { return json{{"w", sys.format(w)}, {"x", sys.format(x)}, {"s", s}}; });
        }
      }
    }
    Outcome o = t.outcome();
    o.lhs["max_minimal_t"] = worst_t;
    return o;
  });
}

}  // namespace

Report run_suite(const SystemConfig& cfg, const std::string& suite, const SuiteOptions& opt) {
  if (opt.depth > kMaxVerifyDepth) {
    throw ResourceError("verify depth " + std::to_string(opt.depth) + " exceeds the cap of " +
                        std::to_string(kMaxVerifyDepth));
  }
  Report rep;
  rep.suite = suite;
  bool all = suite == "all";
  bool known = false;
  if (all || suite == "combinatorics") {
    known = true;
    combinatorics(cfg, opt, rep);
  }
  if (all || suite == "traces") {
    known = true;
    traces(cfg, opt, rep);
  }
  if (all || suite == "pairing") {
    known = true;
    pairing(cfg, opt, rep);
  }
  if (all || suite == "analysis") {
    known = true;
    analysis(cfg, opt, rep);
  }
  if (!known) throw InputError("unknown suite '" + suite + "'");
  return rep;
}

}  // namespace rahecke::cli
