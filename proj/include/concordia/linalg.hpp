#pragma once

#include "concordia/matrix.hpp"

namespace concordia {

Rational det(const MatQ& m);
size_t rank(const MatQ& m);
// Throws DomainError when m is singular.
MatQ inverse(const MatQ& m);

// Fraction-free Bareiss elimination over Q[t]; the empty matrix has determinant 1.
RatPoly poly_det(const PolyMatrix& m);
// Transposed cofactor matrix, so that m * adjugate(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

struct Diagonalization {
  MatQ D;  // diagonal
  MatQ T;  // invertible, T * Q * T^T = D
};

// Congruence diagonalization of a symmetric rational matrix.
Diagonalization diagonalize_sym(const MatQ& q);

struct Inertia {
  long positive = 0;
  long negative = 0;
  long zero = 0;
  long signature() const { return positive - negative; }
};

Inertia inertia(const MatQ& symmetric);

}  // namespace concordia
