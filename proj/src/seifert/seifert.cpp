#include <set>

#include "concordia/error.hpp"
#include "concordia/linalg.hpp"
#include "concordia/numtheory.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

SeifertMatrix make_seifert(MatQ A, int epsilon, long complexity) {
  if (!A.square()) throw InvalidArgument("Seifert matrix must be square");
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
  if (complexity < 1) throw InvalidArgument("complexity must be positive");
  return {std::move(A), epsilon, complexity};
}

namespace {

MatQ e8_gram() {
  // Cartan matrix: chain 0-1-2-3-4-5-6 with node 7 attached to node 4
  MatQ g(8, 8);
  for (size_t i = 0; i < 8; ++i) g(i, i) = 2;
  auto edge = [&](size_t i, size_t j) { g(i, j) = g(j, i) = -1; };
  for (size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return g;
}

std::vector<Rational> diagonal_of(const MatQ& q) {
  Diagonalization d = diagonalize_sym(q);
  std::vector<Rational> out;
  for (size_t i = 0; i < q.rows(); ++i) out.push_back(d.D(i, i));
  return out;
}

int hasse(const std::vector<Rational>& d, const Integer& p) {
  int c = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) c *= hilbert_q(d[i], d[j], p);
  return c;
}

}  // namespace

ValidityReport validate(const MatQ& A, int epsilon, bool check_q2_condition) {
  if (!A.square()) throw InvalidArgument("validate: matrix must be square");
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
  ValidityReport r;
  const size_t n = A.rows();
  MatQ At = A.transpose();
  MatQ S = A + At;
  Inertia in = inertia(S);
  r.signature = in.signature();
  r.signature_mod8 = static_cast<int>(((r.signature % 8) + 8) % 8);
  if (check_q2_condition) r.q2_signature_mod16_ok = (r.signature % 16) == 0;

  if (epsilon == 1) {
    r.nonsingular = det(A - At) != 0;
    if (!r.nonsingular) r.reason = "A - A^T is singular";
    // nonsingular skew forms are congruent to sums of hyperbolic blocks
    r.even_unimodular_congruent = r.nonsingular;
    r.det_class_ok = r.nonsingular;
    return r;
  }

  Rational d = det(S);
  r.nonsingular = d != 0;
  if (!r.nonsingular) {
    r.reason = "A + A^T is singular";
    return r;
  }
  if (r.signature_mod8 != 0) {
    r.reason = "signature of A + A^T is " + std::to_string(r.signature) + ", not divisible by 8";
    return r;
  }
  long a = std::labs(r.signature) / 8;
  long b = (static_cast<long>(n) - std::labs(r.signature)) / 2;
  MatQ target(0, 0);
  MatQ e8 = e8_gram();
  if (r.signature < 0) e8 = -e8;
  for (long k = 0; k < a; ++k) target = direct_sum(target, e8);
  MatQ H{{0, 1}, {1, 0}};
  for (long k = 0; k < b; ++k) target = direct_sum(target, H);

  r.det_class_ok = is_square_rat(d * det(target));
  std::vector<Rational> ds = diagonal_of(S), dt = diagonal_of(target);
  std::vector<Rational> all = ds;
  all.insert(all.end(), dt.begin(), dt.end());
  std::set<Integer> primes{2};
  for (const auto& p : prime_support(all)) primes.insert(p);
  for (const auto& p : primes)
    if (hasse(ds, p) != hasse(dt, p)) r.hasse_mismatch_primes.push_back(p);

  r.even_unimodular_congruent = r.det_class_ok && r.hasse_mismatch_primes.empty();
  if (!r.det_class_ok) r.reason = "determinant class " + to_string(d) + " differs from that of an even unimodular form";
  else if (!r.hasse_mismatch_primes.empty()) r.reason = "Hasse invariant mismatch at " + to_string(r.hasse_mismatch_primes[0]);
  return r;
}

PolyMatrix presentation_matrix(const SeifertMatrix& S) {
  const size_t n = S.dim();
  PolyMatrix M(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      M(i, j) = RatPoly({Rational(-S.epsilon) * S.A(j, i), S.A(i, j)});
  return M;
}

// det(tA - eps A^T) has degree <= n: evaluate at t = 0..n and interpolate
// (Newton form). Much faster than fraction-free elimination over Q[t] for cables.
LaurentPoly alexander(const SeifertMatrix& S) {
  const size_t n = S.dim();
  const MatQ At = Rational(S.epsilon) * S.A.transpose();
  std::vector<Rational> c(n + 1);
  for (size_t x = 0; x <= n; ++x) c[x] = det(Rational(static_cast<long>(x)) * S.A - At);
  for (size_t k = 1; k <= n; ++k)
    for (size_t i = n; i >= k; --i) c[i] = (c[i] - c[i - 1]) / Rational(static_cast<long>(k));
  RatPoly d = RatPoly(c[n]);
  for (size_t i = n; i-- > 0;) d = d * (RatPoly::t() - RatPoly(Rational(static_cast<long>(i)))) + RatPoly(c[i]);
  if (d.is_zero() || d.eval(1) == 0) throw DomainError("A - eps A^T is singular");
  return LaurentPoly(d);
}

SeifertMatrix cable(const SeifertMatrix& S, long r) {
  if (r < 1) throw InvalidArgument("cable: r must be positive");
  const size_t n = S.dim();
  const size_t R = static_cast<size_t>(r);
  MatQ below = Rational(S.epsilon) * S.A.transpose();
  MatQ M(n * R, n * R);
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < R; ++j) M.set_block(i * n, j * n, j >= i ? S.A : below);
  return {M, S.epsilon, S.complexity * r};
}

SeifertMatrix block_sum(const SeifertMatrix& S1, const SeifertMatrix& S2) {
  if (S1.epsilon != S2.epsilon) throw InvalidArgument("block_sum: epsilon mismatch");
  if (S1.complexity != S2.complexity) throw InvalidArgument("block_sum: complexity mismatch; cable to a common complexity first");
  return {direct_sum(S1.A, S2.A), S1.epsilon, S1.complexity};
}

SeifertMatrix negate(const SeifertMatrix& S) { return {-S.A, S.epsilon, S.complexity}; }

FuncMatrix blanchfield_pairing(const SeifertMatrix& S) {
  PolyMatrix M = presentation_matrix(S);
  RatPoly d = poly_det(M);
  if (d.is_zero()) throw DomainError("presentation matrix is singular");
  PolyMatrix adj = adjugate(M);
  const RatPoly one_minus_t = RatPoly(1) - RatPoly::t();
  return adj.map([&](const RatPoly& e) { return RatFunc(one_minus_t * e, d); });
}

LaurentPoly presentation_order(const PolyMatrix& M) {
  if (!M.square()) throw InvalidArgument("presentation matrix must be square");
  RatPoly d = poly_det(M);
  if (d.is_zero()) throw DomainError("presentation matrix has zero determinant");
  return LaurentPoly(d);
}

bool verify_metabolizer(const SeifertMatrix& S, const MatQ& T) {
  const size_t n = S.dim();
  if (n % 2) throw InvalidArgument("verify_metabolizer: odd dimension");
  if (T.rows() != n || T.cols() != n) throw InvalidArgument("verify_metabolizer: change of basis has the wrong size");
  if (det(T) == 0) throw DomainError("verify_metabolizer: change of basis is singular");
  MatQ C = T * S.A * T.transpose();
  for (size_t i = 0; i < n / 2; ++i)
    for (size_t j = 0; j < n / 2; ++j)
      if (C(i, j) != 0) return false;
  return true;
}

}  // namespace concordia
