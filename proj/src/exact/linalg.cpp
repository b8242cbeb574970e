#include "concordia/linalg.hpp"

#include <sstream>

namespace concordia {

bool is_symmetric(const MatQ& m) {
  if (!m.square()) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_integral(const MatQ& m) {
  for (const auto& x : m.entries())
    if (!is_integer(x)) return false;
  return true;
}

std::string to_string(const MatQ& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void require_square(const MatQ& m, const char* what) {
  if (!m.square()) throw InvalidArgument(std::string(what) + ": matrix is not square");
}

}  // namespace

Rational det(const MatQ& m0) {
  require_square(m0, "det");
  MatQ m = m0;
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
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

size_t rank(const MatQ& m0) {
  MatQ m = m0;
  size_t r = 0;
  for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(r, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

MatQ inverse(const MatQ& m0) {
  require_square(m0, "inverse");
  const size_t n = m0.rows();
  MatQ m = m0;
  MatQ inv = MatQ::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Rational s = 1 / m(k, k);
    for (size_t j = 0; j < n; ++j) {
      m(k, j) *= s;
      inv(k, j) *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational f = m(i, k);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatPoly poly_det(const PolyMatrix& m0) {
  if (!m0.square()) throw InvalidArgument("poly_det: matrix is not square");
  const size_t n = m0.rows();
  if (n == 0) return RatPoly(1);
  PolyMatrix m = m0;
  RatPoly prev(1);
  int sgn = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return RatPoly();
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sgn = -sgn;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        RatPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = v.exact_div(prev);
      }
      m(i, k) = RatPoly();
    }
    prev = m(k, k);
  }
  RatPoly d = m(n - 1, n - 1);
  return sgn > 0 ? d : -d;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.square()) throw InvalidArgument("adjugate: matrix is not square");
  const size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = RatPoly(1);
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      RatPoly cof = poly_det(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

Diagonalization diagonalize_sym(const MatQ& q) {
  if (!is_symmetric(q)) throw InvalidArgument("diagonalize_sym: matrix is not symmetric");
  const size_t n = q.rows();
  MatQ d = q;
  MatQ t = MatQ::identity(n);
  // Row op r_i += f r_k paired with the same column op keeps d = t q t^T.
  auto add_multiple = [&](size_t i, size_t k, const Rational& f) {
    for (size_t j = 0; j < n; ++j) {
      d(i, j) += f * d(k, j);
      t(i, j) += f * t(k, j);
    }
    for (size_t j = 0; j < n; ++j) d(j, i) += f * d(j, k);
  };
  auto swap_index = [&](size_t a, size_t b) {
    for (size_t j = 0; j < n; ++j) {
      std::swap(d(a, j), d(b, j));
      std::swap(t(a, j), t(b, j));
    }
    for (size_t j = 0; j < n; ++j) std::swap(d(j, a), d(j, b));
  };
  for (size_t k = 0; k < n; ++k) {
    if (d(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && d(piv, piv) == 0) ++piv;
      if (piv < n) {
        swap_index(k, piv);
      } else {
        size_t j = k + 1;
        while (j < n && d(k, j) == 0) ++j;
        if (j == n) continue;  // row k already zero
        // d(k,k) = d(j,j) = 0 and d(k,j) != 0, so adding row j gives 2 d(k,j) != 0
        add_multiple(k, j, 1);
      }
    }
    for (size_t i = k + 1; i < n; ++i) {
      if (d(i, k) == 0) continue;
      add_multiple(i, k, -d(i, k) / d(k, k));
    }
  }
  return {d, t};
}

Inertia inertia(const MatQ& s) {
  Diagonalization dg = diagonalize_sym(s);
  Inertia in;
  for (size_t i = 0; i < s.rows(); ++i) {
    int sg = sign(dg.D(i, i));
    if (sg > 0) ++in.positive;
    else if (sg < 0) ++in.negative;
    else ++in.zero;
  }
  return in;
}

}  // namespace concordia
