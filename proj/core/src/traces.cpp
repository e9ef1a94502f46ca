#include "rahecke/traces.hpp"

#include "rahecke/errors.hpp"

namespace rahecke {

TraceEngine::TraceEngine(ContextPtr ctx) : ctx_(std::move(ctx)), classes_(ctx_->system()) {}

namespace {

// Least generator s with |sws| < |w|, if any.
std::optional<GeneratorId> shortening_letter(const CoxeterSystem& sys, const Elem& w) {
  LetterMask both = sys.initial_letters(w) & sys.terminal_letters(w);
  for (GeneratorId s : letters_of(both)) {
    if (sys.conjugate(s, w).length() < w.length()) return s;
  }
  return std::nullopt;
}

}  // namespace

HeckeElem TraceEngine::phi0(const HeckeElem& h) const {
  const CoxeterSystem& sys = system();
  HeckeElem out(ctx_);
  for (const auto& [w, c] : h.terms()) {
    auto s = shortening_letter(sys, w);
    if (!s) {
      out.add_term(w, c);
      continue;
    }
    // w = s w' s reduced, so T_{w'} T_s^2 = a_s T_{w's} + b_s T_{w'}.
    Elem wp = sys.conjugate(*s, w);
    out.add_term(sys.right_multiply(wp, *s), ctx_->a(*s) * c);
    out.add_term(wp, ctx_->b(*s) * c);
  }
  return out;
}

HeckeElem TraceEngine::phi(const HeckeElem& h) const {
  // Each step lowers the length of every non-minimal term, so |h| steps
  // suffice.
  HeckeElem cur = h;
  std::size_t budget = h.support_radius() + 1;
  for (std::size_t i = 0; i <= budget; ++i) {
    HeckeElem next = phi0(cur);
    if (next == cur) return next;
    cur = std::move(next);
  }
  throw TheoremCheckFailure("phi did not reach a fixed point within the length bound");
}

HeckeElem TraceEngine::phi_via_gamma_rho(const HeckeElem& h) const {
  const CoxeterSystem& sys = system();
  HeckeElem out(ctx_);
  for (const auto& [w, c] : h.terms()) {
    auto cr = sys.cyclic_reduce(w);
    HeckeElem t = mul(mul(t_basis(ctx_, sys.inverse(cr.gamma)), t_basis(ctx_, cr.gamma)), t_basis(ctx_, cr.rho));
    out += t * c;
  }
  return out;
}

Rational TraceEngine::sigma(const HeckeElem& h, const ConjClassId& cls) const {
  Rational total = 0;
  for (const auto& [w, c] : h.terms()) {
    if (w.length() != cls.rep.length()) continue;
    if (!system().is_min_length_in_class(w)) continue;
    if (class_id(w) == cls) total += c;
  }
  return total;
}

CocentreVector TraceEngine::sigma_vector(const HeckeElem& h) const {
  CocentreVector out;
  for (const auto& [w, c] : h.terms()) {
    if (!system().is_min_length_in_class(w)) continue;
    out[class_id(w)] += c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

Rational TraceEngine::trace(const HeckeElem& h, const ConjClassId& cls) const { return sigma(phi(h), cls); }

CocentreVector TraceEngine::cocentre_image(const HeckeElem& h) const { return sigma_vector(phi(h)); }

std::pair<Elem, Elem> TraceEngine::delta_prime(const Elem& w) const {
  const CoxeterSystem& sys = system();
  auto cr = sys.cyclic_reduce(w);
  return {sys.multiply(cr.gamma, cr.rho), sys.inverse(cr.gamma)};
}

CocentreVector TraceEngine::delta_prime_image(const Elem& w) const {
  auto [left, right] = delta_prime(w);
  return sigma_vector(mul(t_basis(ctx_, right), t_basis(ctx_, left)));
}

bool TraceEngine::min_conjugation_support_check(const Elem& x, const Elem& w_prime) const {
  const CoxeterSystem& sys = system();
  Elem xw = sys.multiply(x, w_prime);
  Elem full = sys.multiply(xw, sys.inverse(x));
  if (full.length() != 2 * x.length() + w_prime.length()) {
    throw PreconditionError("x w' x^{-1} is not reduced");
  }
  if (!sys.is_min_length_in_class(w_prime)) throw PreconditionError("w' is not of minimal length in its class");
  for (const auto& [u, c] : prod_set(ctx_, sys.inverse(x), xw)) {
    if (!sys.is_min_length_in_class(u)) return false;
  }
  return true;
}

bool TraceEngine::class_leq(const ConjClassId& lower, const ConjClassId& upper) const {
  const CoxeterSystem& sys = system();
  for (const Elem& k : sys.cyclic_shifts(upper.rep)) {
    for (const Elem& g : sys.bruhat_interval(k)) {
      if (class_id(g) == lower) return true;
    }
  }
  return false;
}

}  // namespace rahecke
