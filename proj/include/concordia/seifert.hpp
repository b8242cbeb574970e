#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concordia/laurent.hpp"
#include "concordia/matrix.hpp"
#include "concordia/ratfunc.hpp"

namespace concordia {

struct SeifertMatrix {
  MatQ A;
  int epsilon = 1;
  long complexity = 1;

  size_t dim() const { return A.rows(); }
};

// Checks shape and parameters only; use validate() for the lattice condition.
SeifertMatrix make_seifert(MatQ A, int epsilon, long complexity = 1);

struct ValidityReport {
  bool nonsingular = false;
  bool even_unimodular_congruent = false;
  long signature = 0;
  int signature_mod8 = 0;
  bool det_class_ok = false;
  std::vector<Integer> hasse_mismatch_primes;
  std::optional<bool> q2_signature_mod16_ok;
  std::string reason;  // empty when valid

  bool valid() const { return nonsingular && even_unimodular_congruent; }
};

ValidityReport validate(const MatQ& A, int epsilon, bool check_q2_condition = false);
inline ValidityReport validate(const SeifertMatrix& S, bool check_q2_condition = false) {
  return validate(S.A, S.epsilon, check_q2_condition);
}

// det(tA - eps A^T) with trailing powers of t removed; the sign is kept so that
// the value at t = 1 is det(A - eps A^T).
LaurentPoly alexander(const SeifertMatrix& S);
PolyMatrix presentation_matrix(const SeifertMatrix& S);

SeifertMatrix cable(const SeifertMatrix& S, long r);
SeifertMatrix block_sum(const SeifertMatrix& S1, const SeifertMatrix& S2);
SeifertMatrix negate(const SeifertMatrix& S);

// (1 - t)(tA - eps A^T)^{-1}
FuncMatrix blanchfield_pairing(const SeifertMatrix& S);

LaurentPoly presentation_order(const PolyMatrix& M);

struct AlexanderConditions {
  long genus = 0;
  int sign = 0;  // unit sign that makes the conditions hold, 0 if none
  bool reciprocal = false;
  bool value_at_eps_square = false;
  bool value_at_one_ok = false;  // eps^g D(1) nonzero square, or D(1) = eps^g when integral
  bool integer_coefficients = true;
  bool integral = false;
  std::vector<std::string> failures;

  bool passes() const { return sign != 0; }
};

AlexanderConditions alexander_conditions(const LaurentPoly& delta, int epsilon, bool integral = false);

// Inductive construction of a 2g x 2g matrix with the given Alexander polynomial.
SeifertMatrix realize(const LaurentPoly& delta, int epsilon);

bool verify_metabolizer(const SeifertMatrix& S, const MatQ& T);

// B integral with B - eps B^T = Q; entries below the diagonal are zero.
MatQ integral_part(const MatQ& Q, int epsilon);

// lk0 - x^T L^{-1} y
Rational linking_after_surgery(const Rational& lk0, const MatQ& x, const MatQ& y, const MatQ& L);

struct SurgeryCorrection {
  size_t i = 0, j = 0;  // i <= j
  Integer m, n;         // a_ij - b_ij = m / n, n > 0
  size_t plus = 0, minus = 0;  // indices of the two spheres in L
};

struct SurgeryData {
  MatQ B;
  std::vector<SurgeryCorrection> corrections;
  MatQ L;
  std::vector<MatQ> linking_vectors;  // one column per basis element of A
  bool reconstructs = false;          // b_ij - v_i^T L^{-1} v_j = a_ij for all i, j
};

SurgeryData surgery_data(const SeifertMatrix& S);

}  // namespace concordia
