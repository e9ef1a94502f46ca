#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rahecke {

using GeneratorId = std::uint8_t;
using Word = std::vector<GeneratorId>;
// Bit i set <=> generator i is in the set.
using LetterMask = std::uint64_t;

inline constexpr std::size_t kMaxGenerators = 64;
inline constexpr std::size_t kDefaultBallCap = 5'000'000;

std::vector<GeneratorId> letters_of(LetterMask mask);

// A group element, stored as its ShortLex-least reduced word. Only a
// CoxeterSystem can build one, so every Elem is canonical for the system that
// produced it.
class Elem {
 public:
  Elem() = default;

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const Elem&, const Elem&) = default;
  // ShortLex: length first, then lexicographic on generator ids.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
    return a.word_ <=> b.word_;
  }

 private:
  friend class CoxeterSystem;
  explicit Elem(Word canonical) : word_(std::move(canonical)) {}
  Word word_;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept;
};

// Named by the ShortLex-least minimal-length member of the class.
struct ConjClassId {
  Elem rep;
  friend bool operator==(const ConjClassId&, const ConjClassId&) = default;
  friend auto operator<=>(const ConjClassId& a, const ConjClassId& b) { return a.rep <=> b.rep; }
};

struct ConjClassIdHash {
  std::size_t operator()(const ConjClassId& c) const noexcept { return ElemHash{}(c.rep); }
};

// g = gamma * rho * gamma^{-1} with |g| = 2|gamma| + |rho| and rho minimal in
// its conjugacy class.
struct CyclicReduction {
  Elem gamma;
  Elem rho;
};

class CoxeterSystem {
 public:
  // commuting_pairs lists unordered pairs {s, t}, s != t, with (st)^2 = e.
  CoxeterSystem(std::vector<std::string> names,
                const std::vector<std::pair<GeneratorId, GeneratorId>>& commuting_pairs);

  static CoxeterSystem from_labels(std::vector<std::string> names,
                                   const std::vector<std::pair<std::string, std::string>>& commuting_pairs);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GeneratorId s) const { return names_.at(s); }
  std::optional<GeneratorId> find(std::string_view label) const;
  LetterMask all_letters() const { return all_; }

  bool commute(GeneratorId s, GeneratorId t) const { return (commuting_[s] >> t) & 1U; }
  LetterMask commuting_mask(GeneratorId s) const { return commuting_[s]; }
  std::vector<std::pair<GeneratorId, GeneratorId>> commuting_pairs() const;

  Elem identity() const { return Elem{}; }
  Elem generator(GeneratorId s) const;
  Elem normalize(std::span<const GeneratorId> word) const;
  Elem multiply(const Elem& g, const Elem& h) const;
  Elem inverse(const Elem& g) const;
  Elem left_multiply(GeneratorId s, const Elem& g) const;
  Elem right_multiply(const Elem& g, GeneratorId s) const;
  Elem conjugate(GeneratorId s, const Elem& g) const { return left_multiply(s, right_multiply(g, s)); }

  // Generators s with |sg| < |g| (resp. |gs| < |g|).
  LetterMask initial_letters(const Elem& g) const;
  LetterMask terminal_letters(const Elem& g) const;
  bool is_initial(GeneratorId s, const Elem& g) const;
  bool is_terminal(GeneratorId s, const Elem& g) const;
  // Letters occurring in any (equivalently, every) reduced word of g.
  LetterMask support(const Elem& g) const;

  // All u with |u| + |u^{-1}w| = |w|, ShortLex sorted.
  std::vector<Elem> left_prefixes(const Elem& w) const;
  bool bruhat_leq(const Elem& x, const Elem& w) const;
  std::vector<Elem> bruhat_interval(const Elem& w) const;

  // Elements of length <= n sorted ShortLex.
  std::vector<Elem> ball(std::size_t n, std::size_t cap = kDefaultBallCap) const;

  CyclicReduction cyclic_reduce(const Elem& g) const;
  bool is_min_length_in_class(const Elem& g) const;
  // Orbit of a minimal-length element under repeated cyclic shifts of its
  // reduced words; ShortLex sorted.
  std::vector<Elem> cyclic_shifts(const Elem& g) const;
  ConjClassId conj_class_id(const Elem& g) const;

  // Generators commuting with every letter of T; s in T qualifies when it
  // commutes with the remaining letters, since [s, s] = e.
  LetterMask comm_set(LetterMask letters) const;
  LetterMask comm_set(const Elem& g) const { return comm_set(support(g)); }

  // No induced 4-cycle in the commutation graph.
  bool is_hyperbolic() const { return !induced_square().has_value(); }
  // Vertices of an induced 4-cycle in cyclic order, if one exists.
  std::optional<std::array<GeneratorId, 4>> induced_square() const;

  // Labels concatenated; "." separated when some label is longer than one
  // character; "e" for the identity.
  std::string format(const Elem& g) const;
  std::string format_word(std::span<const GeneratorId> w) const;
  Word parse_word(std::string_view text) const;
  Elem parse(std::string_view text) const { return normalize(parse_word(text)); }

 private:
  Word reduce(std::span<const GeneratorId> word) const;
  Word canonical_order(const Word& reduced) const;
  void check_letter(GeneratorId s) const;

  std::vector<std::string> names_;
  std::vector<LetterMask> commuting_;
  LetterMask all_ = 0;
  bool single_char_labels_ = true;
};

// Thread-safe memo from minimal elements to class ids. The system must
// outlive the cache.
class ConjugacyCache {
 public:
  explicit ConjugacyCache(const CoxeterSystem& sys) : sys_(&sys) {}
  ConjugacyCache(const ConjugacyCache&) = delete;
  ConjugacyCache& operator=(const ConjugacyCache&) = delete;

  ConjClassId class_id(const Elem& g) const;
  const CoxeterSystem& system() const { return *sys_; }

 private:
  const CoxeterSystem* sys_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Elem, ConjClassId, ElemHash> memo_;
};

// Integer-indexed ball with left-multiplication tables, for numeric kernels
// that apply many generators to many basis vectors.
class BallIndex {
 public:
  BallIndex(const CoxeterSystem& sys, std::size_t radius, std::size_t cap = kDefaultBallCap);

  std::size_t radius() const { return radius_; }
  std::size_t size() const { return elems_.size(); }
  const Elem& at(std::size_t id) const { return elems_[id]; }
  const std::vector<Elem>& elements() const { return elems_; }
  std::optional<std::size_t> find(const Elem& g) const;
  // Number of elements of length < k (so ids of length-k elements start here).
  std::size_t sphere_begin(std::size_t k) const { return sphere_begin_.at(k); }
  std::size_t length(std::size_t id) const { return elems_[id].length(); }

  // Id of s*x, or -1 when it falls outside the ball.
  std::int32_t left(GeneratorId s, std::size_t id) const { return left_[id * rank_ + s]; }
  bool left_descent(GeneratorId s, std::size_t id) const { return (descent_[id] >> s) & 1U; }

 private:
  std::size_t radius_;
  std::size_t rank_;
  std::vector<Elem> elems_;
  std::vector<std::size_t> sphere_begin_;
  std::unordered_map<Elem, std::size_t, ElemHash> ids_;
  std::vector<std::int32_t> left_;
  std::vector<LetterMask> descent_;
};

}  // namespace rahecke
