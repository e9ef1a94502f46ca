#pragma once

// Brute-force reference implementations for the tests. They only use the
// commutation relation of a system and never call its normal-form code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rahecke/coxeter.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/rational.hpp"

#ifndef RAHECKE_TEST_DATA_DIR
#define RAHECKE_TEST_DATA_DIR "."
#endif

namespace oracle {

using rahecke::CoxeterSystem;
using rahecke::GeneratorId;
using rahecke::Rational;
using rahecke::Word;

inline std::string data_path(const std::string& name) { return std::string(RAHECKE_TEST_DATA_DIR) + "/" + name; }

// Closure of {w} under swapping adjacent commuting letters and deleting an
// adjacent pair ss. By Tits' solution of the word problem, the shortest words
// in the closure are exactly the reduced words of the element.
inline std::set<Word> reduced_words(const CoxeterSystem& sys, const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Word next = cur;
      if (cur[i] == cur[i + 1]) {
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      } else if (sys.commute(cur[i], cur[i + 1])) {
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  std::size_t best = w.size();
  for (const auto& x : seen) best = std::min(best, x.size());
  std::set<Word> out;
  for (const auto& x : seen) {
    if (x.size() == best) out.insert(x);
  }
  return out;
}

// ShortLex-least reduced word.
inline Word normal_form(const CoxeterSystem& sys, const Word& w) { return *reduced_words(sys, w).begin(); }

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Breadth-first growth with a linear-scan equality test.
inline std::vector<Word> ball(const CoxeterSystem& sys, std::size_t n) {
  std::vector<Word> all{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (GeneratorId s = 0; s < sys.rank(); ++s) {
        Word v = normal_form(sys, concat(w, Word{s}));
        if (v.size() != k) continue;
        if (std::find(next.begin(), next.end(), v) == next.end()) next.push_back(v);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

// Minimal in its class iff no conjugate by an element of length <= radius is
// shorter; radius |g| suffices for right-angled systems at desk scale.
inline bool is_min_length(const CoxeterSystem& sys, const Word& g, const std::vector<Word>& conjugators) {
  for (const Word& x : conjugators) {
    if (normal_form(sys, concat(concat(x, g), reversed(x))).size() < g.size()) return false;
  }
  return true;
}

// Hecke multiplication on words in normal form, from the defining relation
// T_s T_w = T_{sw} if |sw| > |w|, else a_s T_w + b_s T_{sw}.
using HeckeMap = std::map<Word, Rational>;

inline void add(HeckeMap& m, const Word& w, const Rational& c) {
  auto& v = m[w];
  v += c;
  if (v == 0) m.erase(w);
}

inline HeckeMap mul_gen(const CoxeterSystem& sys, const std::vector<Rational>& a, const std::vector<Rational>& b,
                        GeneratorId s, const HeckeMap& h) {
  HeckeMap out;
  for (const auto& [w, c] : h) {
    Word sw = normal_form(sys, concat(Word{s}, w));
    if (sw.size() > w.size()) {
      add(out, sw, c);
    } else {
      add(out, w, a[s] * c);
      add(out, sw, b[s] * c);
    }
  }
  return out;
}

inline HeckeMap mul(const CoxeterSystem& sys, const std::vector<Rational>& a, const std::vector<Rational>& b,
                    const HeckeMap& x, const HeckeMap& y) {
  HeckeMap out;
  for (const auto& [w, c] : x) {
    HeckeMap acc;
    for (const auto& [v, d] : y) add(acc, v, c * d);
    for (std::size_t j = w.size(); j-- > 0;) acc = mul_gen(sys, a, b, w[j], acc);
    for (const auto& [v, d] : acc) add(out, v, d);
  }
  return out;
}

inline HeckeMap to_map(const rahecke::HeckeElem& h) {
  HeckeMap m;
  for (const auto& [w, c] : h.terms()) m[w.word()] = c;
  return m;
}

inline std::vector<Rational> params_a(const rahecke::ParamContext& ctx) {
  std::vector<Rational> a;
  for (std::size_t s = 0; s < ctx.system().rank(); ++s) a.push_back(ctx.a(static_cast<GeneratorId>(s)));
  return a;
}

inline std::vector<Rational> params_b(const rahecke::ParamContext& ctx) {
  std::vector<Rational> b;
  for (std::size_t s = 0; s < ctx.system().rank(); ++s) b.push_back(ctx.b(static_cast<GeneratorId>(s)));
  return b;
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

// 1 to max_terms terms drawn from pool with small nonzero coefficients.
inline rahecke::HeckeElem random_element(const rahecke::ContextPtr& ctx, const std::vector<rahecke::Elem>& pool,
                                         std::mt19937_64& rng, std::size_t max_terms = 4) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), terms(1, max_terms);
  rahecke::HeckeElem h(ctx);
  std::size_t k = terms(rng);
  while (h.support_size() < k) h.add_term(pool[pick(rng)], small_rational(rng));
  return h;
}

}  // namespace oracle
