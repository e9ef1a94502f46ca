#pragma once

#include <cstddef>

#include "rahecke/coxeter.hpp"

namespace rahecke::presentations {

// Commutation graph is the n-cycle on generators a, b, c, d, f, ... ("e" is
// reserved for the identity).
CoxeterSystem cycle(std::size_t n);
// The 5-cycle; the standard hyperbolic test case.
CoxeterSystem pentagon();
// No commuting pairs: free product of n copies of Z/2.
CoxeterSystem free_product(std::size_t n);
// Every pair commutes: (Z/2)^n.
CoxeterSystem complete(std::size_t n);
// Path a - b - c - ... .
CoxeterSystem path(std::size_t n);

}  // namespace rahecke::presentations
