#pragma once

#include <vector>

#include "rahecke/coxeter.hpp"
#include "rahecke/hecke.hpp"
#include "rahecke/traces.hpp"

namespace rahecke {

using Clique = LetterMask;
using RationalMatrix = std::vector<std::vector<Rational>>;

// All cliques of the commutation graph including the empty one, ordered by
// size and then lexicographically on sorted generator ids.
std::vector<Clique> enumerate_cliques(const CoxeterSystem& sys);

// chi_1(s) = (r + 1/r)^{-1} T_s + (1 + r^2)^{-1} with r = q_s^{1/2}; an
// idempotent. Iwahori mode only.
HeckeElem chi_one(const ContextPtr& ctx, GeneratorId s);
// Product of chi_1(s) over the clique (the letters commute).
HeckeElem projection_p(const ContextPtr& ctx, Clique c);
// Class of the product of the clique's generators.
ConjClassId clique_to_class(const CoxeterSystem& sys, Clique c);

// trace_C(p_D) without expanding the product: zero unless C is inside D.
Rational pairing_closed_form(const ContextPtr& ctx, Clique c, Clique d);

struct PairingMatrix {
  std::vector<Clique> cliques;
  // entries[i][j] = trace attached to cliques[i], evaluated at p_{cliques[j]}.
  RationalMatrix entries;
};

// Computes every entry as a trace of the product p_D and compares it with
// the closed form; throws TheoremCheckFailure on any disagreement.
PairingMatrix pairing_matrix(const ContextPtr& ctx);

struct NondegeneracyReport {
  bool inclusion_triangular = false;
  bool diagonal_nonzero = false;
  Rational determinant;
  bool nondegenerate = false;
};

NondegeneracyReport pairing_nondegeneracy(const PairingMatrix& m);

// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational exact_determinant(const RationalMatrix& m);

}  // namespace rahecke
