#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rahecke/coxeter.hpp"
#include "rahecke/rational.hpp"

namespace rahecke {

enum class ParamMode { iwahori, generic };

// Quadratic relation T_s^2 = a_s T_s + b_s for every generator. In Iwahori
// mode r_s = q_s^{1/2} > 0 is stored and a_s = r_s - 1/r_s, b_s = 1.
class ParamContext {
 public:
  static std::shared_ptr<const ParamContext> iwahori(std::shared_ptr<const CoxeterSystem> sys,
                                                     std::vector<Rational> q_sqrt);
  static std::shared_ptr<const ParamContext> iwahori_uniform(std::shared_ptr<const CoxeterSystem> sys,
                                                             const Rational& q_sqrt);
  static std::shared_ptr<const ParamContext> generic(std::shared_ptr<const CoxeterSystem> sys, std::vector<Rational> a,
                                                     std::vector<Rational> b);
  static std::shared_ptr<const ParamContext> generic_uniform(std::shared_ptr<const CoxeterSystem> sys,
                                                             const Rational& a, const Rational& b);

  ParamMode mode() const { return mode_; }
  bool is_iwahori() const { return mode_ == ParamMode::iwahori; }
  const CoxeterSystem& system() const { return *sys_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return sys_; }

  const Rational& a(GeneratorId s) const { return a_.at(s); }
  const Rational& b(GeneratorId s) const { return b_.at(s); }
  // Iwahori mode only.
  const Rational& q_sqrt(GeneratorId s) const;
  Rational q(GeneratorId s) const;
  // p_s = q_s^{1/2} - q_s^{-1/2}, equal to a_s in Iwahori mode.
  const Rational& p(GeneratorId s) const { return a(s); }

 private:
  ParamContext() = default;
  ParamMode mode_ = ParamMode::iwahori;
  std::shared_ptr<const CoxeterSystem> sys_;
  std::vector<Rational> r_, a_, b_;
};

using ContextPtr = std::shared_ptr<const ParamContext>;

class HeckeElem {
 public:
  using Terms = std::unordered_map<Elem, Rational, ElemHash>;

  explicit HeckeElem(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static HeckeElem basis(ContextPtr ctx, const Elem& w, const Rational& c = 1);
  static HeckeElem scalar(ContextPtr ctx, const Rational& c);

  const ParamContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const CoxeterSystem& system() const { return ctx_->system(); }

  const Terms& terms() const { return terms_; }
  Rational coeff(const Elem& w) const;
  void add_term(const Elem& w, const Rational& c);
  // ShortLex order, for deterministic output.
  std::vector<std::pair<Elem, Rational>> sorted_terms() const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  std::size_t support_radius() const;

  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  HeckeElem& operator*=(const Rational& c);

  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(HeckeElem a, const Rational& c) { return a *= c; }
  friend HeckeElem operator*(const Rational& c, HeckeElem a) { return a *= c; }
  friend bool operator==(const HeckeElem& a, const HeckeElem& b);

 private:
  void check_same_context(const HeckeElem& o) const;

  ContextPtr ctx_;
  Terms terms_;
};

HeckeElem t_basis(const ContextPtr& ctx, const Elem& w);
HeckeElem mul_gen_left(GeneratorId s, const HeckeElem& h);
HeckeElem mul_gen_right(const HeckeElem& h, GeneratorId s);
HeckeElem mul(const HeckeElem& x, const HeckeElem& y);
HeckeElem power(const HeckeElem& h, std::size_t n);
// T_w -> T_{w^{-1}}, extended conjugate-linearly (coefficients are real).
HeckeElem star(const HeckeElem& h);

// Support of T_w T_x with structure constants p_{u,w,x}.
std::map<Elem, Rational> prod_set(const ContextPtr& ctx, const Elem& w, const Elem& x);

// u = w1 * (t_1 ... t_k) * x2 arises from w * x by skipping the pairwise
// commuting letters t_j of x, with w = w1 t_1..t_k x1^{-1} and
// x = x1 t_1..t_k x2 both reduced.
struct ProductWitness {
  Elem w1;
  Elem x1;
  Elem x2;
  std::vector<GeneratorId> skipped;
};

// One way of multiplying the letters of x onto w: each letter either extends
// the running element, cancels against it, or (when it could cancel) is
// skipped, which contributes a_t to the coefficient.
struct SkipPath {
  Elem result;
  std::vector<std::size_t> skipped_positions;
  std::vector<GeneratorId> skipped_letters;
  std::vector<GeneratorId> cancelled_letters;
};

std::vector<SkipPath> skip_paths(const CoxeterSystem& sys, const Elem& w, const Elem& x);

ProductWitness product_witness(const ContextPtr& ctx, const Elem& w, const Elem& x, const Elem& u);
// Checks every reducedness and commutation claim carried by a witness.
bool witness_is_valid(const CoxeterSystem& sys, const Elem& w, const Elem& x, const Elem& u,
                      const ProductWitness& pw);

struct ProdBoundsReport {
  std::size_t prod_size = 0;
  Rational size_bound;
  bool size_ok = true;
  // Number of u in Prod(w, x) with |u| = n, indexed by n.
  std::vector<std::size_t> level_counts;
  Rational max_coeff;
  Rational coeff_bound;          // prod over all generators of p_s
  bool coeff_bound_applies = false;  // every p_s >= 1
  bool coeff_ok = true;
};

ProdBoundsReport check_prod_bounds(const ContextPtr& ctx, const Elem& w, const Elem& x);

// Image of the group-algebra generator u_s: c_s T_s + d_s with
// c_s = (b_s + a_s^2/4)^{-1/2}, d_s = -c_s a_s / 2. Needs an exact rational
// square root.
HeckeElem group_algebra_iso_image(const ContextPtr& ctx, GeneratorId s);
// Product of the generator images along the canonical word of w.
HeckeElem group_algebra_iso_image(const ContextPtr& ctx, const Elem& w);

}  // namespace rahecke
