#pragma once

#include <random>

#include "concordia/matrix.hpp"
#include "concordia/ratfunc.hpp"
#include "concordia/poly.hpp"
#include "concordia/seifert.hpp"

namespace testsupport {

using concordia::MatQ;
using concordia::PolyMatrix;
using concordia::RatPoly;
using concordia::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rat(long range, long max_den) {
  long d = rand_int(1, max_den);
  return concordia::make_rational(rand_int(-range, range), d);
}

inline RatPoly rand_poly(long degree, long range) {
  std::vector<Rational> c;
  for (long i = 0; i <= degree; ++i) c.emplace_back(rand_int(-range, range));
  if (c.back() == 0) c.back() = 1;
  return RatPoly(c);
}

inline MatQ rand_mat(size_t n, long range, long max_den = 1) {
  MatQ m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = rand_rat(range, max_den);
  return m;
}

// Laplace expansion along the first row.
inline RatPoly cofactor_det(const PolyMatrix& m) {
  const size_t n = m.rows();
  if (n == 0) return RatPoly(1);
  if (n == 1) return m(0, 0);
  RatPoly acc;
  for (size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1);
    for (size_t r = 1; r < n; ++r)
      for (size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    RatPoly term = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Plain Gaussian elimination with first-nonzero pivoting.
inline Rational gauss_det(MatQ m) {
  const size_t n = m.rows();
  Rational d = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      d = -d;
    }
    d *= m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = m(i, k) / m(k, k);
      if (f == 0) continue;
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

inline RatPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  RatPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    RatPoly term(ys[i]);
    for (size_t j = 0; j < xs.size(); ++j)
      if (j != i) term = term * RatPoly(std::vector<Rational>{-xs[j] / (xs[i] - xs[j]), 1 / (xs[i] - xs[j])});
    acc = acc + term;
  }
  return acc;
}

// det(tA - eps A^T) rebuilt from point evaluations.
inline RatPoly interpolated_alexander(const MatQ& a, int eps) {
  const size_t n = a.rows();
  std::vector<Rational> xs, ys;
  for (size_t k = 0; k <= n; ++k) {
    Rational t(static_cast<long>(k) + 1);
    MatQ m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = t * a(i, j) - Rational(eps) * a(j, i);
    xs.push_back(t);
    ys.push_back(gauss_det(m));
  }
  return lagrange(xs, ys);
}

inline PolyMatrix seifert_presentation(const MatQ& a, int eps) {
  const RatPoly t = RatPoly::t();
  PolyMatrix m(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = t * a(i, j) - RatPoly(Rational(eps) * a(j, i));
  return m;
}

// Random matrices satisfying the validity condition for the given epsilon.
inline MatQ rand_invertible(size_t n) {
  for (;;) {
    MatQ m = rand_mat(n, 3, 2);
    if (gauss_det(m) != 0) return m;
  }
}

inline concordia::SeifertMatrix rand_valid(size_t n, int eps) {
  if (eps == 1) {
    for (;;) {
      MatQ A = rand_mat(n, 5, 3);
      if (gauss_det(A - A.transpose()) != 0) return {A, 1, 1};
    }
  }
  // blocks [[0,1],[0,b]] give A + A^T a sum of even unimodular planes; a
  // rational skew perturbation and a congruence keep A + A^T in that class
  MatQ K(n, n);
  for (size_t k = 0; k + 1 < n; k += 2) {
    K(k, k + 1) = 1;
    K(k + 1, k + 1) = rand_int(-3, 3);
  }
  MatQ X(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      X(i, j) = rand_rat(4, 3);
      X(j, i) = -X(i, j);
    }
  MatQ T = rand_invertible(n);
  return {T * (K + X) * T.transpose(), -1, 1};
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace testsupport
