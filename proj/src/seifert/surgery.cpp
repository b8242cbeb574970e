#include "concordia/error.hpp"
#include "concordia/linalg.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

MatQ integral_part(const MatQ& Q, int epsilon) {
  if (!Q.square()) throw InvalidArgument("integral_part: matrix must be square");
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
  if (!is_integral(Q)) throw DomainError("integral_part: Q is not integral");
  if (Q.transpose() != Rational(-epsilon) * Q) throw DomainError("integral_part: Q^T != -eps Q");
  const size_t n = Q.rows();
  MatQ B(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (!mpz_divisible_ui_p(Q(i, i).get_num_mpz_t(), 2))
      throw DomainError("integral_part: odd diagonal entry at " + std::to_string(i));
    B(i, i) = Q(i, i) / 2;
    for (size_t j = i + 1; j < n; ++j) B(i, j) = Q(i, j);
  }
  return B;
}

Rational linking_after_surgery(const Rational& lk0, const MatQ& x, const MatQ& y, const MatQ& L) {
  if (!L.square()) throw InvalidArgument("linking matrix must be square");
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != L.rows() || y.rows() != L.rows())
    throw InvalidArgument("linking vectors must be columns matching L");
  if (det(L) == 0) throw DomainError("linking matrix is singular; surgery does not give a rational homology sphere");
  MatQ v = x.transpose() * inverse(L) * y;
  return lk0 - v(0, 0);
}

SurgeryData surgery_data(const SeifertMatrix& S) {
  const int eps = S.epsilon;
  const Rational E(eps);
  const MatQ& A = S.A;
  const size_t n = S.dim();
  MatQ Q = A - E * A.transpose();
  if (!is_integral(Q)) throw DomainError("surgery_data: A - eps A^T is not integral");
  if (n && det(Q) * det(Q) != 1) throw DomainError("surgery_data: A - eps A^T is not unimodular");

  SurgeryData sd;
  sd.B = integral_part(Q, eps);
  // keep integral entries of A so that only the fractional ones need surgery
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (is_integer(A(i, j))) {
        sd.B(i, j) = A(i, j);
        sd.B(j, i) = E * (A(i, j) - Q(i, j));
      }
  if (eps == 1)
    for (size_t i = 0; i < n; ++i)
      if (is_integer(A(i, i))) sd.B(i, i) = A(i, i);

  size_t spheres = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      if (i == j && eps == -1) continue;
      Rational c = A(i, j) - sd.B(i, j);
      if (c == 0) continue;
      sd.corrections.push_back({i, j, c.get_num(), c.get_den(), spheres, spheres + 1});
      spheres += 2;
    }

  sd.L = MatQ(spheres, spheres);
  sd.linking_vectors.assign(n, MatQ(spheres, 1));
  for (const auto& c : sd.corrections) {
    Rational nn(c.n);
    if (c.i == c.j) nn *= 2;
    if (eps == 1) {
      sd.L(c.plus, c.minus) = -nn;
      sd.L(c.minus, c.plus) = -nn;
    } else {
      sd.L(c.plus, c.minus) = nn;
      sd.L(c.minus, c.plus) = -nn;
    }
    sd.linking_vectors[c.i](c.plus, 0) += 1;
    sd.linking_vectors[c.j](c.minus, 0) += Rational(c.m);
  }

  sd.reconstructs = true;
  for (size_t i = 0; i < n && sd.reconstructs; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational lk = spheres ? linking_after_surgery(sd.B(i, j), sd.linking_vectors[i], sd.linking_vectors[j], sd.L)
                            : sd.B(i, j);
      if (lk != A(i, j)) {
        sd.reconstructs = false;
        break;
      }
    }
  return sd;
}

}  // namespace concordia
