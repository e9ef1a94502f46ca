#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rahecke/coxeter.hpp"
#include "rahecke/hecke.hpp"

namespace rahecke {

inline constexpr double kRelTol = 1e-9;
inline constexpr double kInequalitySlack = 1e-8;

// ---------------------------------------------------------------- spectra

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

struct SparseMatrixD {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;
};

struct SpectralNorm {
  double value = 0.0;
  // True when every connected block was decomposed densely; otherwise the
  // value is a Rayleigh-quotient lower bound from power iteration.
  bool exact = true;
  std::size_t components = 0;
  std::size_t largest_component = 0;
};

// Largest singular value. The matrix is split into connected row/column
// blocks first; blocks whose smaller side is at most dense_limit are
// decomposed exactly.
SpectralNorm spectral_norm(const SparseMatrixD& m, std::size_t dense_limit = 400);

// ---------------------------------------------------------------- norms

// (sum |a_w|^2 (1+|w|)^{2s})^{1/2}
double sobolev_norm(const HeckeElem& h, double s);
// sum |a_w| (1+|w|)^s
double weighted_l1(const HeckeElem& h, double s);

// Compression P_N h P_N of left multiplication on l^2(W) to ball(N).
struct TruncatedOp {
  std::size_t radius = 0;
  std::vector<Elem> basis;
  // (u, x) entry = coefficient of T_u in h T_x.
  SparseMatrixD matrix;
  std::vector<std::vector<double>> dense() const;
};

// One pair of off-diagonal blocks (1-P_n) a P_m and P_m a (1-P_n) with
// m = floor(n - n^alpha). The second is measured as the first block of a*.
struct PropagationBlock {
  std::size_t n = 0;
  std::size_t m = 0;
  double lower = 0.0;  // ||(1-P_n) a P_m||
  double upper = 0.0;  // ||P_m a (1-P_n)||
  bool exact = true;
};

struct PropagationProfile {
  double alpha = 0.0;
  std::size_t support_radius = 0;
  // Blocks vanish for n > scan_limit; the scan covers twice that range and
  // checks emptiness there.
  std::size_t scan_limit = 0;
  std::vector<PropagationBlock> blocks;  // nonzero blocks only

  // sup_n n^r (lower + upper)
  double seminorm(double r) const;
};

struct TensorKey {
  Elem left;
  Elem right;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
  friend auto operator<=>(const TensorKey& a, const TensorKey& b) = default;
};

struct TensorKeyHash {
  std::size_t operator()(const TensorKey& k) const noexcept {
    ElemHash h;
    return h(k.left) * 1000003ULL ^ h(k.right);
  }
};

// Element of H (x) H in the basis T_a (x) T_b.
class TensorElem {
 public:
  using Terms = std::unordered_map<TensorKey, Rational, TensorKeyHash>;
  explicit TensorElem(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& context_ptr() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(const Elem& a, const Elem& b) const;
  void add_term(const Elem& a, const Elem& b, const Rational& c);
  std::vector<std::pair<TensorKey, Rational>> sorted_terms() const;
  Rational mass() const;
  std::size_t size() const { return terms_.size(); }

  TensorElem& operator+=(const TensorElem& o);
  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  ContextPtr ctx_;
  Terms terms_;
};

// T_w -> sum over reduced splittings w = w1 w2 of T_{w1} (x) T_{w2}.
TensorElem delta(const HeckeElem& h);
// t (1 (x) x) and (w (x) 1) t.
TensorElem tensor_mul_right(const TensorElem& t, const HeckeElem& x);
TensorElem tensor_mul_left(const HeckeElem& w, const TensorElem& t);
// sum over a, b in ball(r) of T_w T_a (x) T_b T_x per term, in absolute value.
TensorElem smear(const TensorElem& t, std::size_t r);
// Delta(T_w)(1 (x) T_x) + (T_w (x) 1) Delta(T_x).
TensorElem qd_source(const ContextPtr& ctx, const Elem& w, const Elem& x);

// Largest distance from a vertex of any geodesic e -> u to the geodesic
// spelled by the canonical word of u, over all u in ball(radius).
std::size_t geodesic_stability_constant(const CoxeterSystem& sys, std::size_t radius);

// ---------------------------------------------------------------- reports

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
  bool pass = false;
  // True when the direction of every approximation used makes a pass a
  // proof (lower bounds only on the larger side).
  bool certified = false;
};

bool inequality_holds(double lhs, double rhs);

struct SobolevPropagationReport {
  std::size_t sobolev_index = 0;  // n in item one
  double r = 0.0;
  double alpha = 0.0;
  // ||a||_{2,n} <= C (nu_{n+1,1/2}(a) + ||a||)
  InequalityCheck sobolev_by_propagation;
  // nu_{r,alpha}(a) <= C ||a||_{2, 2 + r/alpha}
  InequalityCheck propagation_by_sobolev;
};

struct SubmultProbe {
  InequalityCheck check;
  double minimal_t = 0.0;  // least t >= 0 for which the inequality holds
};

struct QdEntry {
  Elem left;
  Elem right;
  Rational lhs;
  Rational rhs;
};

struct QdReport {
  std::size_t radius = 0;  // D'
  std::size_t smear_radius = 0;  // k = |S|
  bool dominated = true;
  std::size_t lhs_terms = 0;
  std::optional<QdEntry> violation;
};

struct PowerSumReport {
  std::vector<std::size_t> starts;
  std::size_t end = 0;
  std::size_t compare_end = 0;
  std::size_t s_index = 0;
  double denominator = 0.0;
  std::vector<double> ratios;
  std::vector<double> compare_ratios;
  double max_relative_change = 0.0;
  bool non_increasing_after_max = false;
  bool strictly_decreasing_after_first = false;
};

// Numeric analysis over an Iwahori-Hecke algebra. Caches indexed balls and
// smearing sums; thread-safe.
class AnalysisEngine {
 public:
  explicit AnalysisEngine(ContextPtr ctx, std::size_t ball_cap = kDefaultBallCap);

  const ContextPtr& context() const { return ctx_; }
  const CoxeterSystem& system() const { return ctx_->system(); }

  TruncatedOp truncated_operator(const HeckeElem& h, std::size_t n) const;
  SpectralNorm op_norm_lower(const HeckeElem& h, std::size_t n) const;

  PropagationProfile propagation_profile(const HeckeElem& h, double alpha) const;
  double propagation_seminorm(const HeckeElem& h, double r, double alpha) const {
    return propagation_profile(h, alpha).seminorm(r);
  }

  // 2 |Cliq|^3 prod p_s; needs every p_s > 0.
  double haagerup_constant() const;
  // op_norm_lower(h, n) <= C ||h||_{2,2}. Only a necessary-condition probe,
  // since the operator norm is estimated from below.
  InequalityCheck haagerup_check(const HeckeElem& h, std::size_t n) const;

  SobolevPropagationReport sobolev_propagation_check(const HeckeElem& h, std::size_t n, double r, double alpha,
                                                     std::optional<double> op_norm = std::nullopt,
                                                     std::size_t op_radius = 8) const;

  // ||ab||_{2,s} <= ||a||_{2,s} ||b||_{2,s+t}
  SubmultProbe sobolev_submult_probe(const HeckeElem& a, const HeckeElem& b, double s, double t) const;

  QdReport qd_domination_check(const Elem& w, const Elem& x, std::size_t radius) const;
  // Least D' <= max_radius for which domination holds.
  std::optional<std::size_t> minimal_qd_radius(const Elem& w, const Elem& x, std::size_t max_radius) const;

  PowerSumReport power_sum_decay_check(const HeckeElem& h, double r, double alpha,
                                       const std::vector<std::size_t>& starts, std::size_t end,
                                       std::size_t compare_end, std::size_t op_radius = 8) const;

 private:
  std::shared_ptr<const BallIndex> ball_index(std::size_t radius) const;
  // Columns h T_x for x in [first, last) of the index, coefficients in double.
  std::vector<std::vector<std::pair<std::int32_t, double>>> columns(const HeckeElem& h, const BallIndex& idx,
                                                                   std::size_t first, std::size_t last) const;
  const HeckeElem& smear_sum(std::size_t radius, bool on_left) const;
  void require_iwahori() const;

  ContextPtr ctx_;
  std::size_t ball_cap_;
  std::vector<double> a_, b_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::shared_ptr<const BallIndex>> balls_;
  mutable std::map<std::pair<std::size_t, bool>, std::unique_ptr<HeckeElem>> smear_sums_;
};

// Constant of the Sobolev-by-propagation inequality at index n.
double sobolev_by_propagation_constant(std::size_t n);
// sup_{n >= 1} (1 + n^alpha)^{r/alpha} / (1 + n)^r.
double propagation_weight_sup(double r, double alpha);

}  // namespace rahecke
