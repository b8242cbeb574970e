#pragma once

#include <utility>
#include <vector>

#include "concordia/poly.hpp"

namespace concordia {

struct Factorization {
  Rational unit;
  // Irreducible, primitive over Z, positive leading coefficient.
  std::vector<std::pair<RatPoly, unsigned>> factors;

  RatPoly expand() const;
};

// Complete factorization over Q: squarefree decomposition, then Zassenhaus
// (Cantor-Zassenhaus mod p, quadratic Hensel lifting, subset recombination).
Factorization factor_poly(const RatPoly& f);

// Irreducible factors of a primitive squarefree integer polynomial of positive degree.
std::vector<RatPoly> factor_squarefree(const RatPoly& f);

bool is_irreducible(const RatPoly& f);

}  // namespace concordia
