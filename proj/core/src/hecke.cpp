#include "rahecke/hecke.hpp"

#include <algorithm>

#include "rahecke/errors.hpp"

namespace rahecke {

// ---------------------------------------------------------------- params

std::shared_ptr<const ParamContext> ParamContext::iwahori(std::shared_ptr<const CoxeterSystem> sys,
                                                          std::vector<Rational> q_sqrt) {
  if (!sys) throw InputError("missing Coxeter system");
  if (q_sqrt.size() != sys->rank()) throw InputError("every generator needs a parameter q_s^{1/2}");
  auto ctx = std::shared_ptr<ParamContext>(new ParamContext());
  ctx->mode_ = ParamMode::iwahori;
  ctx->sys_ = std::move(sys);
  for (std::size_t s = 0; s < q_sqrt.size(); ++s) {
    Rational r = q_sqrt[s];
    r.canonicalize();
    if (sgn(r) <= 0) throw InputError("q_s^{1/2} must be positive for generator " + ctx->sys_->name(s));
    ctx->a_.push_back(r - 1 / r);
    ctx->b_.emplace_back(1);
    ctx->r_.push_back(std::move(r));
  }
  return ctx;
}

std::shared_ptr<const ParamContext> ParamContext::iwahori_uniform(std::shared_ptr<const CoxeterSystem> sys,
                                                                  const Rational& q_sqrt) {
  std::size_t n = sys ? sys->rank() : 0;
  return iwahori(std::move(sys), std::vector<Rational>(n, q_sqrt));
}

std::shared_ptr<const ParamContext> ParamContext::generic(std::shared_ptr<const CoxeterSystem> sys,
                                                          std::vector<Rational> a, std::vector<Rational> b) {
  if (!sys) throw InputError("missing Coxeter system");
  if (a.size() != sys->rank() || b.size() != sys->rank()) {
    throw InputError("every generator needs parameters (a_s, b_s)");
  }
  auto ctx = std::shared_ptr<ParamContext>(new ParamContext());
  ctx->mode_ = ParamMode::generic;
  ctx->sys_ = std::move(sys);
  ctx->a_ = std::move(a);
  ctx->b_ = std::move(b);
  for (auto& v : ctx->a_) v.canonicalize();
  for (auto& v : ctx->b_) v.canonicalize();
  return ctx;
}

std::shared_ptr<const ParamContext> ParamContext::generic_uniform(std::shared_ptr<const CoxeterSystem> sys,
                                                                  const Rational& a, const Rational& b) {
  std::size_t n = sys ? sys->rank() : 0;
  return generic(std::move(sys), std::vector<Rational>(n, a), std::vector<Rational>(n, b));
}

const Rational& ParamContext::q_sqrt(GeneratorId s) const {
  if (mode_ != ParamMode::iwahori) throw UnsupportedParameter("q_s^{1/2} is only defined in Iwahori mode");
  return r_.at(s);
}

Rational ParamContext::q(GeneratorId s) const {
  const Rational& r = q_sqrt(s);
  return r * r;
}

// ---------------------------------------------------------------- elements

HeckeElem HeckeElem::basis(ContextPtr ctx, const Elem& w, const Rational& c) {
  HeckeElem h(std::move(ctx));
  h.add_term(w, c);
  return h;
}

HeckeElem HeckeElem::scalar(ContextPtr ctx, const Rational& c) { return basis(std::move(ctx), Elem{}, c); }

Rational HeckeElem::coeff(const Elem& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HeckeElem::add_term(const Elem& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Elem, Rational>> HeckeElem::sorted_terms() const {
  std::vector<std::pair<Elem, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

std::size_t HeckeElem::support_radius() const {
  std::size_t r = 0;
  for (const auto& [w, c] : terms_) r = std::max(r, w.length());
  return r;
}

void HeckeElem::check_same_context(const HeckeElem& o) const {
  if (ctx_ != o.ctx_) throw InputError("Hecke elements belong to different parameter contexts");
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  check_same_context(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  check_same_context(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElem& HeckeElem::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool operator==(const HeckeElem& a, const HeckeElem& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- products

HeckeElem t_basis(const ContextPtr& ctx, const Elem& w) { return HeckeElem::basis(ctx, w); }

HeckeElem mul_gen_left(GeneratorId s, const HeckeElem& h) {
  const ParamContext& ctx = h.context();
  const CoxeterSystem& sys = ctx.system();
  HeckeElem out(h.context_ptr());
  for (const auto& [x, c] : h.terms()) {
    Elem sx = sys.left_multiply(s, x);
    if (sx.length() > x.length()) {
      out.add_term(sx, c);
    } else {
      out.add_term(x, ctx.a(s) * c);
      out.add_term(sx, ctx.b(s) * c);
    }
  }
  return out;
}

HeckeElem mul_gen_right(const HeckeElem& h, GeneratorId s) {
  const ParamContext& ctx = h.context();
  const CoxeterSystem& sys = ctx.system();
  HeckeElem out(h.context_ptr());
  for (const auto& [x, c] : h.terms()) {
    Elem xs = sys.right_multiply(x, s);
    if (xs.length() > x.length()) {
      out.add_term(xs, c);
    } else {
      out.add_term(x, ctx.a(s) * c);
      out.add_term(xs, ctx.b(s) * c);
    }
  }
  return out;
}

HeckeElem mul(const HeckeElem& x, const HeckeElem& y) {
  if (x.context_ptr() != y.context_ptr()) throw InputError("Hecke elements belong to different parameter contexts");
  HeckeElem out(x.context_ptr());
  for (const auto& [w, c] : x.terms()) {
    HeckeElem acc = y * c;
    const Word& word = w.word();
    for (std::size_t j = word.size(); j-- > 0;) acc = mul_gen_left(word[j], acc);
    out += acc;
  }
  return out;
}

HeckeElem power(const HeckeElem& h, std::size_t n) {
  HeckeElem out = HeckeElem::scalar(h.context_ptr(), 1);
  for (std::size_t i = 0; i < n; ++i) out = mul(out, h);
  return out;
}

HeckeElem star(const HeckeElem& h) {
  const ParamContext& ctx = h.context();
  if (ctx.mode() == ParamMode::generic) {
    for (std::size_t s = 0; s < ctx.system().rank(); ++s) {
      if (sgn(ctx.b(static_cast<GeneratorId>(s))) <= 0) {
        throw UnsupportedParameter("the involution T_w -> T_{w^-1} needs b_s > 0 in generic mode");
      }
    }
  }
  HeckeElem out(h.context_ptr());
  for (const auto& [w, c] : h.terms()) out.add_term(ctx.system().inverse(w), c);
  return out;
}

std::map<Elem, Rational> prod_set(const ContextPtr& ctx, const Elem& w, const Elem& x) {
  HeckeElem p = mul(t_basis(ctx, w), t_basis(ctx, x));
  return std::map<Elem, Rational>(p.terms().begin(), p.terms().end());
}

// ---------------------------------------------------------------- witnesses

std::vector<SkipPath> skip_paths(const CoxeterSystem& sys, const Elem& w, const Elem& x) {
  const Word& letters = x.word();
  const std::size_t n = letters.size();
  if (n >= 24) throw ResourceError("skip-path enumeration is limited to factors of length < 24");
  std::vector<SkipPath> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    SkipPath path;
    Elem cur = w;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      GeneratorId t = letters[j];
      bool ends_with_t = sys.is_terminal(t, cur);
      if ((mask >> j) & 1U) {
        if (!ends_with_t) {
          ok = false;
          break;
        }
        path.skipped_positions.push_back(j);
        path.skipped_letters.push_back(t);
        continue;
      }
      if (ends_with_t) path.cancelled_letters.push_back(t);
      cur = sys.right_multiply(cur, t);
    }
    if (!ok) continue;
    path.result = std::move(cur);
    out.push_back(std::move(path));
  }
  return out;
}

namespace {

bool pairwise_commuting_distinct(const CoxeterSystem& sys, const std::vector<GeneratorId>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j] || !sys.commute(t[i], t[j])) return false;
    }
  }
  return true;
}

}  // namespace

bool witness_is_valid(const CoxeterSystem& sys, const Elem& w, const Elem& x, const Elem& u,
                      const ProductWitness& pw) {
  if (!pairwise_commuting_distinct(sys, pw.skipped)) return false;
  const std::size_t k = pw.skipped.size();
  Elem tau = sys.normalize(pw.skipped);
  if (tau.length() != k) return false;
  Elem lhs_w = sys.multiply(sys.multiply(pw.w1, tau), sys.inverse(pw.x1));
  Elem lhs_x = sys.multiply(sys.multiply(pw.x1, tau), pw.x2);
  Elem lhs_u = sys.multiply(sys.multiply(pw.w1, tau), pw.x2);
  return lhs_w == w && w.length() == pw.w1.length() + k + pw.x1.length() && lhs_x == x &&
         x.length() == pw.x1.length() + k + pw.x2.length() && lhs_u == u &&
         u.length() == pw.w1.length() + k + pw.x2.length();
}

ProductWitness product_witness(const ContextPtr& ctx, const Elem& w, const Elem& x, const Elem& u) {
  const CoxeterSystem& sys = ctx->system();
  auto paths = skip_paths(sys, w, x);
  bool reachable = false;
  auto prefixes = sys.left_prefixes(x);
  for (const SkipPath& path : paths) {
    if (path.result != u) continue;
    reachable = true;
    if (!pairwise_commuting_distinct(sys, path.skipped_letters)) continue;
    Elem tau = sys.normalize(path.skipped_letters);
    for (const Elem& x1 : prefixes) {
      ProductWitness pw;
      pw.skipped = path.skipped_letters;
      pw.x1 = x1;
      pw.x2 = sys.multiply(sys.inverse(sys.multiply(x1, tau)), x);
      pw.w1 = sys.multiply(sys.multiply(w, x1), tau);
      if (witness_is_valid(sys, w, x, u, pw)) return pw;
    }
  }
  if (!reachable) {
    throw PreconditionError(sys.format(u) + " does not occur in T_" + sys.format(w) + " T_" + sys.format(x));
  }
  throw TheoremCheckFailure("no product witness for " + sys.format(u) + " in T_" + sys.format(w) + " T_" +
                            sys.format(x));
}

ProdBoundsReport check_prod_bounds(const ContextPtr& ctx, const Elem& w, const Elem& x) {
  const CoxeterSystem& sys = ctx->system();
  auto prod = prod_set(ctx, w, x);
  ProdBoundsReport rep;
  rep.prod_size = prod.size();
  mpz_class base = static_cast<unsigned long>(1 + std::min(w.length(), x.length()));
  mpz_class bound;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), sys.rank());
  rep.size_bound = Rational(bound);
  rep.size_ok = Rational(static_cast<unsigned long>(rep.prod_size)) <= rep.size_bound;
  rep.level_counts.assign(w.length() + x.length() + 1, 0);
  rep.max_coeff = 0;
  for (const auto& [u, c] : prod) {
    ++rep.level_counts[u.length()];
    if (abs(c) > rep.max_coeff) rep.max_coeff = abs(c);
  }
  rep.coeff_bound = 1;
  rep.coeff_bound_applies = true;
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    const Rational& p = ctx->p(static_cast<GeneratorId>(s));
    rep.coeff_bound *= p;
    if (p < 1) rep.coeff_bound_applies = false;
  }
  rep.coeff_ok = !rep.coeff_bound_applies || rep.max_coeff <= rep.coeff_bound;
  return rep;
}

HeckeElem group_algebra_iso_image(const ContextPtr& ctx, GeneratorId s) {
  const Rational& a = ctx->a(s);
  const Rational& b = ctx->b(s);
  Rational radicand = b + a * a / 4;
  if (sgn(radicand) <= 0) throw UnsupportedParameter("b_s + a_s^2/4 must be positive");
  auto root = exact_sqrt(radicand);
  if (!root) {
    throw UnsupportedParameter("b_s + a_s^2/4 = " + to_string(radicand) + " has no rational square root");
  }
  Rational c = 1 / *root;
  Rational d = -c * a / 2;
  HeckeElem out = HeckeElem::basis(ctx, ctx->system().generator(s), c);
  out.add_term(Elem{}, d);
  return out;
}

HeckeElem group_algebra_iso_image(const ContextPtr& ctx, const Elem& w) {
  HeckeElem out = HeckeElem::scalar(ctx, 1);
  for (GeneratorId s : w.word()) out = mul(out, group_algebra_iso_image(ctx, s));
  return out;
}

}  // namespace rahecke
