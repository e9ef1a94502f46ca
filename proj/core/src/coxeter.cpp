#include "rahecke/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "rahecke/errors.hpp"

namespace rahecke {

std::vector<GeneratorId> letters_of(LetterMask mask) {
  std::vector<GeneratorId> out;
  while (mask != 0) {
    out.push_back(static_cast<GeneratorId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::size_t ElemHash::operator()(const Elem& e) const noexcept {
  // FNV-1a over the canonical word.
  std::size_t h = 1469598103934665603ULL;
  for (GeneratorId s : e.word()) {
    h ^= static_cast<std::size_t>(s) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty() || s == "e") return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '.' || c == ',' || c == '[' || c == ']' || c == '*' || c == '+') return false;
  }
  return true;
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             const std::vector<std::pair<GeneratorId, GeneratorId>>& commuting_pairs)
    : names_(std::move(names)) {
  if (names_.size() > kMaxGenerators) {
    throw InputError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_label(names_[i])) throw InputError("invalid generator label '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InputError("duplicate generator label '" + names_[i] + "'");
    }
    if (names_[i].size() != 1) single_char_labels_ = false;
  }
  commuting_.assign(names_.size(), 0);
  all_ = names_.size() == 64 ? ~LetterMask{0} : ((LetterMask{1} << names_.size()) - 1);
  for (auto [s, t] : commuting_pairs) {
    if (s >= names_.size() || t >= names_.size()) throw InputError("commuting pair refers to unknown generator");
    if (s == t) throw InputError("a generator cannot be listed as commuting with itself");
    commuting_[s] |= LetterMask{1} << t;
    commuting_[t] |= LetterMask{1} << s;
  }
}

CoxeterSystem CoxeterSystem::from_labels(std::vector<std::string> names,
                                         const std::vector<std::pair<std::string, std::string>>& commuting_pairs) {
  std::vector<std::pair<GeneratorId, GeneratorId>> ids;
  auto lookup = [&](const std::string& l) -> GeneratorId {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == l) return static_cast<GeneratorId>(i);
    }
    throw InputError("commuting pair refers to unknown generator '" + l + "'");
  };
  for (const auto& [a, b] : commuting_pairs) ids.emplace_back(lookup(a), lookup(b));
  return CoxeterSystem(std::move(names), ids);
}

std::optional<GeneratorId> CoxeterSystem::find(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return static_cast<GeneratorId>(i);
  }
  return std::nullopt;
}

std::vector<std::pair<GeneratorId, GeneratorId>> CoxeterSystem::commuting_pairs() const {
  std::vector<std::pair<GeneratorId, GeneratorId>> out;
  for (std::size_t s = 0; s < rank(); ++s) {
    for (std::size_t t = s + 1; t < rank(); ++t) {
      if (commute(static_cast<GeneratorId>(s), static_cast<GeneratorId>(t))) {
        out.emplace_back(static_cast<GeneratorId>(s), static_cast<GeneratorId>(t));
      }
    }
  }
  return out;
}

void CoxeterSystem::check_letter(GeneratorId s) const {
  if (s >= rank()) throw InputError("generator id " + std::to_string(s) + " out of range");
}

Elem CoxeterSystem::generator(GeneratorId s) const {
  check_letter(s);
  return Elem(Word{s});
}

// A letter s cancels against the last occurrence of s that is separated from
// the end only by letters commuting with s; otherwise it is appended.
Word CoxeterSystem::reduce(std::span<const GeneratorId> word) const {
  Word out;
  out.reserve(word.size());
  for (GeneratorId s : word) {
    check_letter(s);
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j] == s) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (!commute(out[j], s)) break;
    }
    if (!cancelled) out.push_back(s);
  }
  return out;
}

// Greedy: repeatedly emit the least letter that can be moved to the front.
Word CoxeterSystem::canonical_order(const Word& reduced) const {
  const std::size_t n = reduced.size();
  if (n < 2) return reduced;
  Word out;
  out.reserve(n);
  std::vector<char> used(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    LetterMask blocked = 0;
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      GeneratorId s = reduced[i];
      if (!((blocked >> s) & 1U) && (best == n || s < reduced[best])) best = i;
      blocked |= ~commuting_[s];
    }
    used[best] = 1;
    out.push_back(reduced[best]);
  }
  return out;
}

Elem CoxeterSystem::normalize(std::span<const GeneratorId> word) const {
  return Elem(canonical_order(reduce(word)));
}

Elem CoxeterSystem::multiply(const Elem& g, const Elem& h) const {
  Word w = g.word();
  w.insert(w.end(), h.word().begin(), h.word().end());
  return normalize(w);
}

Elem CoxeterSystem::inverse(const Elem& g) const {
  Word w(g.word().rbegin(), g.word().rend());
  return Elem(canonical_order(w));
}

bool CoxeterSystem::is_initial(GeneratorId s, const Elem& g) const {
  for (GeneratorId t : g.word()) {
    if (t == s) return true;
    if (!commute(t, s)) return false;
  }
  return false;
}

bool CoxeterSystem::is_terminal(GeneratorId s, const Elem& g) const {
  const Word& w = g.word();
  for (std::size_t j = w.size(); j-- > 0;) {
    if (w[j] == s) return true;
    if (!commute(w[j], s)) return false;
  }
  return false;
}

LetterMask CoxeterSystem::initial_letters(const Elem& g) const {
  // Letter i is initial iff every earlier letter commutes with it and differs.
  LetterMask blocked = 0, out = 0;
  for (GeneratorId t : g.word()) {
    if (!((blocked >> t) & 1U)) out |= LetterMask{1} << t;
    blocked |= ~commuting_[t];
  }
  return out;
}

LetterMask CoxeterSystem::terminal_letters(const Elem& g) const {
  LetterMask blocked = 0, out = 0;
  const Word& w = g.word();
  for (std::size_t j = w.size(); j-- > 0;) {
    GeneratorId t = w[j];
    if (!((blocked >> t) & 1U)) out |= LetterMask{1} << t;
    blocked |= ~commuting_[t];
  }
  return out;
}

LetterMask CoxeterSystem::support(const Elem& g) const {
  LetterMask m = 0;
  for (GeneratorId s : g.word()) m |= LetterMask{1} << s;
  return m;
}

Elem CoxeterSystem::left_multiply(GeneratorId s, const Elem& g) const {
  check_letter(s);
  const Word& w = g.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == s) {
      Word r = w;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      return Elem(canonical_order(r));
    }
    if (!commute(w[i], s)) break;
  }
  Word r;
  r.reserve(w.size() + 1);
  r.push_back(s);
  r.insert(r.end(), w.begin(), w.end());
  return Elem(canonical_order(r));
}

Elem CoxeterSystem::right_multiply(const Elem& g, GeneratorId s) const {
  check_letter(s);
  const Word& w = g.word();
  for (std::size_t j = w.size(); j-- > 0;) {
    if (w[j] == s) {
      Word r = w;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
      return Elem(canonical_order(r));
    }
    if (!commute(w[j], s)) break;
  }
  Word r = w;
  r.push_back(s);
  return Elem(canonical_order(r));
}

std::vector<Elem> CoxeterSystem::left_prefixes(const Elem& w) const {
  // Prefixes are reached from w by repeatedly stripping terminal letters.
  std::unordered_set<Elem, ElemHash> seen{w};
  std::deque<Elem> queue{w};
  while (!queue.empty()) {
    Elem u = std::move(queue.front());
    queue.pop_front();
    for (GeneratorId s : letters_of(terminal_letters(u))) {
      Elem v = right_multiply(u, s);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterSystem::bruhat_leq(const Elem& x, const Elem& w) const {
  if (x.length() > w.length()) return false;
  if (x.length() == w.length()) return x == w;
  // Walk a reduced word of w, tracking which prefixes of x are already
  // spelled by a reduced subword.
  std::vector<Elem> pre = left_prefixes(x);
  std::unordered_set<Elem, ElemHash> prefixes(pre.begin(), pre.end());
  std::unordered_set<Elem, ElemHash> reached{identity()};
  if (x.is_identity()) return true;
  std::size_t remaining = w.length();
  for (GeneratorId s : w.word()) {
    --remaining;
    std::vector<Elem> fresh;
    for (const Elem& y : reached) {
      if (y.length() + remaining + 1 < x.length()) continue;
      if (is_terminal(s, y)) continue;
      Elem ys = right_multiply(y, s);
      if (prefixes.count(ys) && !reached.count(ys)) fresh.push_back(std::move(ys));
    }
    for (auto& y : fresh) {
      if (y == x) return true;
      reached.insert(std::move(y));
    }
  }
  return false;
}

std::vector<Elem> CoxeterSystem::bruhat_interval(const Elem& w) const {
  std::unordered_set<Elem, ElemHash> reached{identity()};
  for (GeneratorId s : w.word()) {
    std::vector<Elem> fresh;
    for (const Elem& y : reached) fresh.push_back(right_multiply(y, s));
    for (auto& y : fresh) reached.insert(std::move(y));
  }
  std::vector<Elem> out(reached.begin(), reached.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> CoxeterSystem::ball(std::size_t n, std::size_t cap) const {
  std::vector<Elem> out{identity()};
  std::vector<Elem> sphere{identity()};
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_set<Elem, ElemHash> next;
    for (const Elem& g : sphere) {
      LetterMask extend = all_ & ~terminal_letters(g);
      for (GeneratorId s : letters_of(extend)) {
        next.insert(right_multiply(g, s));
        if (out.size() + next.size() > cap) {
          throw ResourceError("ball(" + std::to_string(n) + ") exceeds the element cap of " + std::to_string(cap));
        }
      }
    }
    if (next.empty()) break;
    sphere.assign(next.begin(), next.end());
    std::sort(sphere.begin(), sphere.end());
    out.insert(out.end(), sphere.begin(), sphere.end());
  }
  return out;
}

CyclicReduction CoxeterSystem::cyclic_reduce(const Elem& g) const {
  Word gamma;
  Elem cur = g;
  for (;;) {
    LetterMask both = initial_letters(cur) & terminal_letters(cur);
    bool shortened = false;
    for (GeneratorId s : letters_of(both)) {
      Elem c = conjugate(s, cur);
      if (c.length() < cur.length()) {
        gamma.push_back(s);
        cur = std::move(c);
        shortened = true;
        break;
      }
    }
    if (!shortened) break;
  }
  return CyclicReduction{normalize(gamma), cur};
}

bool CoxeterSystem::is_min_length_in_class(const Elem& g) const {
  LetterMask both = initial_letters(g) & terminal_letters(g);
  for (GeneratorId s : letters_of(both)) {
    if (conjugate(s, g).length() < g.length()) return false;
  }
  return true;
}

std::vector<Elem> CoxeterSystem::cyclic_shifts(const Elem& g) const {
  if (!is_min_length_in_class(g)) {
    throw PreconditionError("cyclic_shifts requires a cyclically reduced element, got " + format(g));
  }
  // Shifting the first letter s of a reduced word to the end is conjugation
  // by an initial letter s; chains of such moves give every shift of every
  // reduced word.
  std::unordered_set<Elem, ElemHash> seen{g};
  std::deque<Elem> queue{g};
  while (!queue.empty()) {
    Elem u = std::move(queue.front());
    queue.pop_front();
    for (GeneratorId s : letters_of(initial_letters(u))) {
      Elem v = conjugate(s, u);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

ConjClassId CoxeterSystem::conj_class_id(const Elem& g) const {
  Elem rho = cyclic_reduce(g).rho;
  auto orbit = cyclic_shifts(rho);
  return ConjClassId{orbit.front()};
}

LetterMask CoxeterSystem::comm_set(LetterMask letters) const {
  LetterMask out = 0;
  for (std::size_t s = 0; s < rank(); ++s) {
    LetterMask others = letters & ~(LetterMask{1} << s);
    if ((others & ~commuting_[s]) == 0) out |= LetterMask{1} << s;
  }
  return out;
}

std::optional<std::array<GeneratorId, 4>> CoxeterSystem::induced_square() const {
  const std::size_t n = rank();
  // An induced 4-cycle a-b-c-d: a,c non-adjacent, b,d non-adjacent, both b
  // and d adjacent to both a and c.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      if (commute(static_cast<GeneratorId>(a), static_cast<GeneratorId>(c))) continue;
      LetterMask common = commuting_[a] & commuting_[c];
      auto mids = letters_of(common);
      for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t j = i + 1; j < mids.size(); ++j) {
          if (!commute(mids[i], mids[j])) {
            return std::array<GeneratorId, 4>{static_cast<GeneratorId>(a), mids[i], static_cast<GeneratorId>(c),
                                              mids[j]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::string CoxeterSystem::format_word(std::span<const GeneratorId> w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_labels_) out += '.';
    out += names_.at(w[i]);
  }
  return out;
}

std::string CoxeterSystem::format(const Elem& g) const { return format_word(g.word()); }

Word CoxeterSystem::parse_word(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  Word out;
  if (text.empty() || text == "e") return out;
  auto is_sep = [](char c) { return c == '.' || c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  bool has_sep = std::any_of(text.begin(), text.end(), is_sep);
  if (single_char_labels_ && !has_sep) {
    for (char c : text) {
      auto id = find(std::string_view(&c, 1));
      if (!id) throw InputError("unknown generator '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
      out.push_back(*id);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) {
      auto tok = text.substr(i, j - i);
      auto id = find(tok);
      if (!id) throw InputError("unknown generator '" + std::string(tok) + "' in word '" + std::string(text) + "'");
      out.push_back(*id);
    }
    i = j;
  }
  return out;
}

ConjClassId ConjugacyCache::class_id(const Elem& g) const {
  Elem rho = sys_->cyclic_reduce(g).rho;
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(rho);
    if (it != memo_.end()) return it->second;
  }
  auto orbit = sys_->cyclic_shifts(rho);
  ConjClassId id{orbit.front()};
  std::unique_lock lock(mu_);
  for (const Elem& e : orbit) memo_.emplace(e, id);
  return id;
}

}  // namespace rahecke
