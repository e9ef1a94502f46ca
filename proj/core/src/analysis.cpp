#include "rahecke/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "rahecke/errors.hpp"
#include "rahecke/ktheory.hpp"

namespace rahecke {

// ---------------------------------------------------------------- norms

double sobolev_norm(const HeckeElem& h, double s) {
  double total = 0.0;
  for (const auto& [w, c] : h.terms()) {
    double a = to_double(c);
    total += a * a * std::pow(1.0 + static_cast<double>(w.length()), 2.0 * s);
  }
  return std::sqrt(total);
}

double weighted_l1(const HeckeElem& h, double s) {
  double total = 0.0;
  for (const auto& [w, c] : h.terms()) {
    total += std::abs(to_double(c)) * std::pow(1.0 + static_cast<double>(w.length()), s);
  }
  return total;
}

std::vector<std::vector<double>> TruncatedOp::dense() const {
  std::vector<std::vector<double>> out(matrix.rows, std::vector<double>(matrix.cols, 0.0));
  for (const auto& e : matrix.entries) out[e.row][e.col] += e.value;
  return out;
}

double PropagationProfile::seminorm(double r) const {
  double best = 0.0;
  for (const auto& b : blocks) {
    best = std::max(best, std::pow(static_cast<double>(b.n), r) * (b.lower + b.upper));
  }
  return best;
}

bool inequality_holds(double lhs, double rhs) {
  return lhs <= rhs + kInequalitySlack * std::abs(rhs);
}

double sobolev_by_propagation_constant(std::size_t n) {
  if (n == 0) throw InputError("the Sobolev index must be positive");
  const double nn = static_cast<double>(n);
  // sum_{k>=1} (1+k)^{2n-1} / k^{2(n+1)}: explicit partial sum plus the tail
  // bound (1+1/K)^{2n-1} / (2K^2) on the terms beyond K.
  const std::size_t K = 200000;
  double series = 0.0;
  for (std::size_t k = K; k >= 1; --k) {
    double kk = static_cast<double>(k);
    series += std::pow(1.0 + kk, 2.0 * nn - 1.0) / std::pow(kk, 2.0 * (nn + 1.0));
  }
  const double Kd = static_cast<double>(K);
  series += std::pow(1.0 + 1.0 / Kd, 2.0 * nn - 1.0) / (2.0 * Kd * Kd);
  double squared = std::max(std::pow(2.0, 2.0 * nn), std::pow(4.0 * nn, 2.0 * nn + 1.0) * series);
  return std::sqrt(squared);
}

double propagation_weight_sup(double r, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
  // log of the ratio has derivative r (n^{alpha-1} - 1) / ((1+n^alpha)(1+n))
  // <= 0 for n >= 1, so the sup sits at n = 1.
  return std::pow(2.0, r / alpha - r);
}

// ---------------------------------------------------------------- tensors

Rational TensorElem::coeff(const Elem& a, const Elem& b) const {
  auto it = terms_.find(TensorKey{a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElem::add_term(const Elem& a, const Elem& b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(TensorKey{a, b}, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<std::pair<TensorKey, Rational>> TensorElem::sorted_terms() const {
  std::vector<std::pair<TensorKey, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

Rational TensorElem::mass() const {
  Rational m = 0;
  for (const auto& [k, c] : terms_) m += c;
  return m;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (ctx_ != o.ctx_) throw InputError("tensor elements belong to different parameter contexts");
  for (const auto& [k, c] : o.terms_) add_term(k.left, k.right, c);
  return *this;
}

TensorElem delta(const HeckeElem& h) {
  const CoxeterSystem& sys = h.system();
  TensorElem out(h.context_ptr());
  for (const auto& [w, c] : h.terms()) {
    for (const Elem& w1 : sys.left_prefixes(w)) out.add_term(w1, sys.multiply(sys.inverse(w1), w), c);
  }
  return out;
}

TensorElem tensor_mul_right(const TensorElem& t, const HeckeElem& x) {
  TensorElem out(t.context_ptr());
  for (const auto& [k, c] : t.terms()) {
    HeckeElem right = mul(t_basis(t.context_ptr(), k.right), x);
    for (const auto& [v, d] : right.terms()) out.add_term(k.left, v, c * d);
  }
  return out;
}

TensorElem tensor_mul_left(const HeckeElem& w, const TensorElem& t) {
  TensorElem out(t.context_ptr());
  for (const auto& [k, c] : t.terms()) {
    HeckeElem left = mul(w, t_basis(t.context_ptr(), k.left));
    for (const auto& [v, d] : left.terms()) out.add_term(v, k.right, c * d);
  }
  return out;
}

TensorElem smear(const TensorElem& t, std::size_t r) {
  const ContextPtr& ctx = t.context_ptr();
  HeckeElem s(ctx);
  for (const Elem& a : ctx->system().ball(r)) s.add_term(a, 1);
  TensorElem out(ctx);
  for (const auto& [k, c] : t.terms()) {
    HeckeElem left = mul(t_basis(ctx, k.left), s);
    HeckeElem right = mul(s, t_basis(ctx, k.right));
    for (const auto& [u, lc] : left.terms()) {
      for (const auto& [v, rc] : right.terms()) out.add_term(u, v, abs(c) * abs(lc) * abs(rc));
    }
  }
  return out;
}

TensorElem qd_source(const ContextPtr& ctx, const Elem& w, const Elem& x) {
  TensorElem out = tensor_mul_right(delta(t_basis(ctx, w)), t_basis(ctx, x));
  out += tensor_mul_left(t_basis(ctx, w), delta(t_basis(ctx, x)));
  return out;
}

std::size_t geodesic_stability_constant(const CoxeterSystem& sys, std::size_t radius) {
  std::size_t worst = 0;
  for (const Elem& u : sys.ball(radius)) {
    std::vector<Elem> path{sys.identity()};
    for (GeneratorId s : u.word()) path.push_back(sys.right_multiply(path.back(), s));
    for (const Elem& p : sys.left_prefixes(u)) {
      Elem pinv = sys.inverse(p);
      std::size_t d = std::numeric_limits<std::size_t>::max();
      for (const Elem& c : path) d = std::min(d, sys.multiply(pinv, c).length());
      worst = std::max(worst, d);
    }
  }
  return worst;
}

// ---------------------------------------------------------------- engine

AnalysisEngine::AnalysisEngine(ContextPtr ctx, std::size_t ball_cap) : ctx_(std::move(ctx)), ball_cap_(ball_cap) {
  require_iwahori();
  for (std::size_t s = 0; s < system().rank(); ++s) {
    a_.push_back(to_double(ctx_->a(static_cast<GeneratorId>(s))));
    b_.push_back(to_double(ctx_->b(static_cast<GeneratorId>(s))));
  }
}

void AnalysisEngine::require_iwahori() const {
  if (!ctx_->is_iwahori()) throw UnsupportedParameter("this analysis needs Iwahori parameters");
}

std::shared_ptr<const BallIndex> AnalysisEngine::ball_index(std::size_t radius) const {
  std::lock_guard lock(mu_);
  auto it = balls_.lower_bound(radius);
  if (it != balls_.end()) return it->second;
  auto idx = std::make_shared<const BallIndex>(system(), radius, ball_cap_);
  balls_.emplace(radius, idx);
  return idx;
}

std::vector<std::vector<std::pair<std::int32_t, double>>> AnalysisEngine::columns(const HeckeElem& h,
                                                                                 const BallIndex& idx,
                                                                                 std::size_t first,
                                                                                 std::size_t last) const {
  using Sparse = std::vector<std::pair<std::int32_t, double>>;
  auto merge = [](Sparse& v) {
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (k > 0 && v[k - 1].first == v[i].first) {
        v[k - 1].second += v[i].second;
      } else {
        v[k++] = v[i];
      }
    }
    v.resize(k);
  };
  std::vector<std::pair<const Word*, double>> terms;
  for (const auto& [w, c] : h.terms()) terms.emplace_back(&w.word(), to_double(c));

  std::vector<Sparse> out(last - first);
  Sparse cur, nxt;
  for (std::size_t x = first; x < last; ++x) {
    Sparse& col = out[x - first];
    for (const auto& [word, coeff] : terms) {
      cur.assign(1, {static_cast<std::int32_t>(x), coeff});
      for (std::size_t j = word->size(); j-- > 0;) {
        GeneratorId s = (*word)[j];
        nxt.clear();
        for (const auto& [id, c] : cur) {
          std::int32_t sx = idx.left(s, static_cast<std::size_t>(id));
          if (sx < 0) throw std::logic_error("indexed ball too small for the requested product");
          if (idx.left_descent(s, static_cast<std::size_t>(id))) {
            if (a_[s] != 0.0) nxt.emplace_back(id, a_[s] * c);
            nxt.emplace_back(sx, b_[s] * c);
          } else {
            nxt.emplace_back(sx, c);
          }
        }
        merge(nxt);
        std::swap(cur, nxt);
      }
      col.insert(col.end(), cur.begin(), cur.end());
    }
    merge(col);
    col.erase(std::remove_if(col.begin(), col.end(), [](const auto& e) { return e.second == 0.0; }), col.end());
  }
  return out;
}

TruncatedOp AnalysisEngine::truncated_operator(const HeckeElem& h, std::size_t n) const {
  if (h.context_ptr() != ctx_) throw InputError("element belongs to a different parameter context");
  auto idx = ball_index(n + h.support_radius());
  std::size_t dim = idx->sphere_begin(n + 1);
  TruncatedOp op;
  op.radius = n;
  op.basis.assign(idx->elements().begin(), idx->elements().begin() + static_cast<std::ptrdiff_t>(dim));
  op.matrix.rows = op.matrix.cols = dim;
  auto cols = columns(h, *idx, 0, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (const auto& [u, v] : cols[x]) {
      if (static_cast<std::size_t>(u) < dim) op.matrix.entries.push_back({static_cast<std::size_t>(u), x, v});
    }
  }
  return op;
}

SpectralNorm AnalysisEngine::op_norm_lower(const HeckeElem& h, std::size_t n) const {
  return spectral_norm(truncated_operator(h, n).matrix);
}

PropagationProfile AnalysisEngine::propagation_profile(const HeckeElem& h, double alpha) const {
  require_iwahori();
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
  PropagationProfile prof;
  prof.alpha = alpha;
  const std::size_t R = h.support_radius();
  prof.support_radius = R;
  prof.scan_limit = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(R), 1.0 / alpha))) + 1;
  if (h.is_zero() || R == 0) return prof;

  // The block at n only sees columns x with n - R < |x| <= m, since h T_x is
  // supported in lengths <= |x| + R.
  struct Window {
    std::size_t n, lo, m;
  };
  std::vector<Window> windows;
  for (std::size_t n = 1; n <= 2 * prof.scan_limit; ++n) {
    double nd = static_cast<double>(n);
    double t = std::floor(nd - std::pow(nd, alpha) + 1e-9);
    if (t < 0.0) continue;
    auto m = static_cast<std::size_t>(t);
    std::size_t lo = n + 1 > R ? n + 1 - R : 0;
    if (m < lo) continue;
    if (n > prof.scan_limit) {
      throw TheoremCheckFailure("propagation block nonzero beyond the scan bound at n = " + std::to_string(n));
    }
    windows.push_back({n, lo, m});
  }
  if (windows.empty()) return prof;

  std::size_t m_max = 0;
  for (const auto& w : windows) m_max = std::max(m_max, w.m);
  auto idx = ball_index(m_max + R);
  std::size_t ncols = idx->sphere_begin(m_max + 1);
  HeckeElem hs = star(h);
  auto cols_a = columns(h, *idx, 0, ncols);
  auto cols_s = columns(hs, *idx, 0, ncols);

  auto block_norm = [&](const std::vector<std::vector<std::pair<std::int32_t, double>>>& cols, const Window& w,
                        bool& exact) {
    SparseMatrixD b;
    b.rows = idx->size();
    b.cols = ncols;
    for (std::size_t x = idx->sphere_begin(w.lo); x < idx->sphere_begin(w.m + 1); ++x) {
      for (const auto& [u, v] : cols[x]) {
        if (idx->length(static_cast<std::size_t>(u)) > w.n) b.entries.push_back({static_cast<std::size_t>(u), x, v});
      }
    }
    SpectralNorm sn = spectral_norm(b);
    exact = exact && sn.exact;
    return sn.value;
  };

  for (const auto& w : windows) {
    PropagationBlock blk;
    blk.n = w.n;
    blk.m = w.m;
    blk.lower = block_norm(cols_a, w, blk.exact);
    blk.upper = block_norm(cols_s, w, blk.exact);
    if (blk.lower != 0.0 || blk.upper != 0.0) prof.blocks.push_back(blk);
  }
  return prof;
}

double AnalysisEngine::haagerup_constant() const {
  double prod = 1.0;
  for (std::size_t s = 0; s < system().rank(); ++s) {
    const Rational& p = ctx_->p(static_cast<GeneratorId>(s));
    if (sgn(p) <= 0) throw UnsupportedParameter("the Haagerup constant needs p_s > 0 for every generator");
    prod *= to_double(p);
  }
  double cliques = static_cast<double>(enumerate_cliques(system()).size());
  return 2.0 * cliques * cliques * cliques * prod;
}

InequalityCheck AnalysisEngine::haagerup_check(const HeckeElem& h, std::size_t n) const {
  InequalityCheck c;
  c.constant = haagerup_constant();
  c.lhs = op_norm_lower(h, n).value;
  c.rhs = c.constant * sobolev_norm(h, 2.0);
  c.pass = inequality_holds(c.lhs, c.rhs);
  c.certified = false;
  return c;
}

SobolevPropagationReport AnalysisEngine::sobolev_propagation_check(const HeckeElem& h, std::size_t n, double r,
                                                                   double alpha, std::optional<double> op_norm,
                                                                   std::size_t op_radius) const {
  require_iwahori();
  SobolevPropagationReport rep;
  rep.sobolev_index = n;
  rep.r = r;
  rep.alpha = alpha;
  double norm = op_norm ? *op_norm : op_norm_lower(h, op_radius).value;

  auto& one = rep.sobolev_by_propagation;
  one.constant = sobolev_by_propagation_constant(n);
  one.lhs = sobolev_norm(h, static_cast<double>(n));
  PropagationProfile half = propagation_profile(h, 0.5);
  one.rhs = one.constant * (half.seminorm(static_cast<double>(n + 1)) + norm);
  one.pass = inequality_holds(one.lhs, one.rhs);
  // The operator norm enters from below on the larger side.
  one.certified = one.pass;

  auto& two = rep.propagation_by_sobolev;
  two.constant = haagerup_constant() * propagation_weight_sup(r, alpha);
  PropagationProfile prof = alpha == 0.5 ? half : propagation_profile(h, alpha);
  two.lhs = prof.seminorm(r);
  two.rhs = two.constant * sobolev_norm(h, 2.0 + r / alpha);
  two.pass = inequality_holds(two.lhs, two.rhs);
  bool exact = std::all_of(prof.blocks.begin(), prof.blocks.end(), [](const auto& b) { return b.exact; });
  two.certified = two.pass && exact;
  return rep;
}

SubmultProbe AnalysisEngine::sobolev_submult_probe(const HeckeElem& a, const HeckeElem& b, double s,
                                                   double t) const {
  SubmultProbe out;
  double lhs = sobolev_norm(mul(a, b), s);
  double na = sobolev_norm(a, s);
  auto holds = [&](double tt) { return inequality_holds(lhs, na * sobolev_norm(b, s + tt)); };
  out.check.lhs = lhs;
  out.check.rhs = na * sobolev_norm(b, s + t);
  out.check.constant = 1.0;
  out.check.pass = holds(t);
  out.check.certified = true;
  if (holds(0.0)) {
    out.minimal_t = 0.0;
  } else {
    double lo = 0.0, hi = 1.0;
    while (!holds(hi) && hi < 1024.0) hi *= 2.0;
    if (!holds(hi)) {
      out.minimal_t = std::numeric_limits<double>::infinity();
    } else {
      for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        (holds(mid) ? hi : lo) = mid;
      }
      out.minimal_t = hi;
    }
  }
  return out;
}

const HeckeElem& AnalysisEngine::smear_sum(std::size_t radius, bool on_left) const {
  {
    std::lock_guard lock(mu_);
    auto it = smear_sums_.find({radius, on_left});
    if (it != smear_sums_.end()) return *it->second;
  }
  auto ball_sum = [&](std::size_t r) {
    HeckeElem s(ctx_);
    for (const Elem& a : system().ball(r, ball_cap_)) s.add_term(a, 1);
    return s;
  };
  HeckeElem k = ball_sum(system().rank());
  HeckeElem d = ball_sum(radius);
  auto value = std::make_unique<HeckeElem>(on_left ? mul(k, d) : mul(d, k));
  std::lock_guard lock(mu_);
  auto [it, fresh] = smear_sums_.try_emplace({radius, on_left}, std::move(value));
  return *it->second;
}

QdReport AnalysisEngine::qd_domination_check(const Elem& w, const Elem& x, std::size_t radius) const {
  require_iwahori();
  for (std::size_t s = 0; s < system().rank(); ++s) {
    if (sgn(ctx_->p(static_cast<GeneratorId>(s))) < 0) {
      throw UnsupportedParameter("coefficientwise domination needs q_s >= 1");
    }
  }
  const CoxeterSystem& sys = system();
  QdReport rep;
  rep.radius = radius;
  rep.smear_radius = sys.rank();

  // With non-negative structure constants the composite smear factorises:
  // phi_D(phi_k(T_a (x) T_b)) = T_a S_k S_D (x) S_D S_k T_b, S_r = sum of T_g
  // over ball(r). Its coefficient at (u1, u2) is <L, T_{a^-1} T_{u1}> times
  // <R, T_{u2} T_{b^-1}> by self-adjointness of T_s.
  const HeckeElem& L = smear_sum(radius, true);
  const HeckeElem& R = smear_sum(radius, false);

  struct YTerm {
    Elem left, right, left_inv, right_inv;
    Rational c;
  };
  std::vector<YTerm> ys;
  const TensorElem source = qd_source(ctx_, w, x);
  for (const auto& [k, c] : source.terms()) {
    ys.push_back({k.left, k.right, sys.inverse(k.left), sys.inverse(k.right), c});
  }
  std::unordered_map<Elem, std::vector<std::size_t>, ElemHash> by_left, by_right;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    by_left[ys[i].left].push_back(i);
    by_right[ys[i].right].push_back(i);
  }

  auto pair_value = [&](const HeckeElem& smear_elem, const HeckeElem& prod) {
    Rational v = 0;
    for (const auto& [g, c] : prod.terms()) {
      auto it = smear_elem.terms().find(g);
      if (it != smear_elem.terms().end()) v += c * it->second;
    }
    return v;
  };

  for (const auto& [u, p] : prod_set(ctx_, w, x)) {
    for (const Elem& u1 : sys.left_prefixes(u)) {
      Elem u2 = sys.multiply(sys.inverse(u1), u);
      ++rep.lhs_terms;
      // Try likely-dominant terms first, using the group-product term of each
      // structure constant (coefficient >= 1) as a cheap lower bound.
      std::vector<std::size_t> order;
      if (auto it = by_left.find(u1); it != by_left.end()) order = it->second;
      if (auto it = by_right.find(u2); it != by_right.end()) order.insert(order.end(), it->second.begin(), it->second.end());
      for (std::size_t i = 0; i < ys.size(); ++i) order.push_back(i);
      std::vector<char> used(ys.size(), 0);
      Rational acc = 0;
      bool done = false;
      for (std::size_t i : order) {
        if (used[i]) continue;
        used[i] = 1;
        const YTerm& y = ys[i];
        Rational l = L.coeff(sys.multiply(y.left_inv, u1));
        if (sgn(l) == 0) continue;
        Rational r = R.coeff(sys.multiply(u2, y.right_inv));
        if (sgn(r) == 0) continue;
        acc += y.c * l * r;
        if (acc >= p) {
          done = true;
          break;
        }
      }
      if (done) continue;
      // Exact coefficient.
      acc = 0;
      for (const YTerm& y : ys) {
        Rational l =
            pair_value(L, mul(t_basis(ctx_, y.left_inv), t_basis(ctx_, u1)));
        if (sgn(l) == 0) continue;
        Rational r = pair_value(R, mul(t_basis(ctx_, u2), t_basis(ctx_, y.right_inv)));
        acc += y.c * l * r;
      }
      if (acc < p) {
        rep.dominated = false;
        if (!rep.violation) rep.violation = QdEntry{u1, u2, p, acc};
      }
    }
  }
  return rep;
}

std::optional<std::size_t> AnalysisEngine::minimal_qd_radius(const Elem& w, const Elem& x,
                                                             std::size_t max_radius) const {
  for (std::size_t d = 0; d <= max_radius; ++d) {
    if (qd_domination_check(w, x, d).dominated) return d;
  }
  return std::nullopt;
}

PowerSumReport AnalysisEngine::power_sum_decay_check(const HeckeElem& h, double r, double alpha,
                                                     const std::vector<std::size_t>& starts, std::size_t end,
                                                     std::size_t compare_end, std::size_t op_radius) const {
  require_iwahori();
  PowerSumReport rep;
  rep.starts = starts;
  rep.end = end;
  rep.compare_end = compare_end;
  rep.s_index = static_cast<std::size_t>(std::ceil(2.0 * (r + alpha) / alpha - 1e-12)) + 1;
  double norm = op_norm_lower(h, op_radius).value;
  if (norm > 0.5 + kInequalitySlack) {
    throw PreconditionError("power sums need ||h|| <= 1/2; rescale the element");
  }
  rep.denominator = propagation_profile(h, alpha / 2.0).seminorm(static_cast<double>(rep.s_index)) + norm;
  if (h.is_zero()) {
    // Every power sum with M >= 1 vanishes; report zero ratios.
    rep.ratios.assign(starts.size(), 0.0);
    rep.compare_ratios = rep.ratios;
    rep.non_increasing_after_max = true;
    rep.strictly_decreasing_after_first = starts.size() < 2;
    return rep;
  }

  std::size_t top = std::max(end, compare_end);
  std::vector<HeckeElem> powers{HeckeElem::scalar(ctx_, 1)};
  for (std::size_t l = 1; l <= top; ++l) powers.push_back(mul(powers.back(), h));
  auto ratio = [&](std::size_t from, std::size_t to) {
    HeckeElem s(ctx_);
    for (std::size_t l = from; l <= to; ++l) s += powers[l];
    return propagation_profile(s, alpha).seminorm(r) / rep.denominator;
  };
  for (std::size_t m : starts) {
    rep.ratios.push_back(ratio(m, end));
    rep.compare_ratios.push_back(ratio(m, compare_end));
  }
  for (std::size_t i = 0; i < rep.ratios.size(); ++i) {
    double a = rep.ratios[i], b = rep.compare_ratios[i];
    double scale = std::max(std::abs(a), std::abs(b));
    rep.max_relative_change = std::max(rep.max_relative_change, scale == 0.0 ? 0.0 : std::abs(a - b) / scale);
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < rep.ratios.size(); ++i) {
    if (rep.ratios[i] > rep.ratios[arg]) arg = i;
  }
  rep.non_increasing_after_max = true;
  for (std::size_t i = arg + 1; i < rep.ratios.size(); ++i) {
    if (rep.ratios[i] > rep.ratios[i - 1] * (1.0 + kRelTol)) rep.non_increasing_after_max = false;
  }
  rep.strictly_decreasing_after_first = rep.ratios.size() >= 2;
  for (std::size_t i = 2; i < rep.ratios.size(); ++i) {
    if (!(rep.ratios[i] < rep.ratios[i - 1])) rep.strictly_decreasing_after_first = false;
  }
  return rep;
}

}  // namespace rahecke
