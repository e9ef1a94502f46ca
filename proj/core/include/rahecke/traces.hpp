#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rahecke/coxeter.hpp"
#include "rahecke/hecke.hpp"

namespace rahecke {

// Class id -> value of the trace attached to that class.
using CocentreVector = std::map<ConjClassId, Rational>;

// Traces on the Hecke algebra indexed by conjugacy classes. The engine owns a
// class-id memo; all methods are safe to call concurrently.
class TraceEngine {
 public:
  explicit TraceEngine(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const CoxeterSystem& system() const { return ctx_->system(); }
  const ConjugacyCache& classes() const { return classes_; }
  ConjClassId class_id(const Elem& g) const { return classes_.class_id(g); }

  // One step: T_w stays if w is minimal in its class, otherwise
  // T_w -> T_{sws} T_s^2 for the least s shortening w by conjugation.
  HeckeElem phi0(const HeckeElem& h) const;
  // phi0 iterated to its fixed point; the result is supported on minimal
  // elements.
  HeckeElem phi(const HeckeElem& h) const;
  // T_w -> T_{gamma^{-1}} T_gamma T_rho from the cyclic reduction of w.
  HeckeElem phi_via_gamma_rho(const HeckeElem& h) const;

  // Sum of the coefficients of h at minimal-length members of the class.
  Rational sigma(const HeckeElem& h, const ConjClassId& cls) const;
  CocentreVector sigma_vector(const HeckeElem& h) const;
  Rational trace(const HeckeElem& h, const ConjClassId& cls) const;
  CocentreVector cocentre_image(const HeckeElem& h) const;

  // (gamma*rho, gamma^{-1}).
  std::pair<Elem, Elem> delta_prime(const Elem& w) const;
  // Sigma of T_{gamma^{-1}} T_{gamma rho}: the flipped product of the two
  // legs of delta_prime.
  CocentreVector delta_prime_image(const Elem& w) const;

  // For x w' x^{-1} reduced with w' minimal: every element of
  // Prod(x^{-1}, x w') is minimal in its class.
  bool min_conjugation_support_check(const Elem& x, const Elem& w_prime) const;

  // O <= K iff some g in O is Bruhat-below a minimal-length k in K.
  bool class_leq(const ConjClassId& lower, const ConjClassId& upper) const;

 private:
  ContextPtr ctx_;
  ConjugacyCache classes_;
};

}  // namespace rahecke
