#include "concordia/ratfunc.hpp"

#include "concordia/error.hpp"

namespace concordia {

RatFunc::RatFunc(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RatPoly(1);
    return;
  }
  RatPoly g = gcd(num, den);
  num_ = num.exact_div(g);
  den_ = den.exact_div(g);
  Rational l = den_.lead();
  num_ *= Rational(1) / l;
  den_ *= Rational(1) / l;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFunc RatFunc::inverted() const {
  if (is_zero()) return {};
  // num(1/t)/den(1/t) = t^(dd - dn) rev(num) / rev(den)
  long k = den_.degree() - num_.degree();
  RatPoly n = num_.reversed(), d = den_.reversed();
  if (k >= 0) {
    n = n.shift_up(k);
  } else {
    d = d.shift_up(-k);
  }
  return {n, d};
}

std::string RatFunc::to_string() const {
  if (den_ == RatPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

FuncMatrix inverse(const FuncMatrix& m0) {
  if (!m0.square()) throw InvalidArgument("inverse: matrix is not square");
  const size_t n = m0.rows();
  FuncMatrix m = m0;
  FuncMatrix inv = FuncMatrix::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m(piv, k).is_zero()) ++piv;
    if (piv == n) throw DomainError("singular matrix over Q(t)");
    if (piv != k)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    RatFunc s = RatFunc(1) / m(k, k);
    for (size_t j = 0; j < n; ++j) {
      m(k, j) = m(k, j) * s;
      inv(k, j) = inv(k, j) * s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      RatFunc f = m(i, k);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace concordia
