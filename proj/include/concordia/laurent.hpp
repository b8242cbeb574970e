#pragma once

#include <string>

#include "concordia/poly.hpp"

namespace concordia {

// t^shift * core, kept canonical: core(0) != 0 unless the value is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(RatPoly core, long shift = 0);  // NOLINT
  LaurentPoly(long c) : LaurentPoly(RatPoly(c)) {}  // NOLINT

  const RatPoly& core() const { return core_; }
  long shift() const { return shift_; }
  bool is_zero() const { return core_.is_zero(); }
  long span() const { return core_.degree(); }  // degree of the core
  long low_degree() const { return shift_; }
  long high_degree() const { return shift_ + core_.degree(); }
  Rational coeff(long k) const { return core_.coeff(k - shift_); }
  Rational eval(const Rational& x) const;  // x != 0 unless shift >= 0

  // Polynomial obtained by multiplying with t^(-shift).
  RatPoly normalized() const { return core_; }
  RatPoly to_poly() const;  // requires shift >= 0

  LaurentPoly operator-() const { return {-core_, shift_}; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return {a.core_ * b.core_, a.shift_ + b.shift_};
  }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.core_ == b.core_;
  }

  // f(t) -> f(t^-1)
  LaurentPoly inverted() const;
  // f(t) -> f(t^r)
  LaurentPoly compose_power(long r) const { return {core_.compose_power(r), shift_ * r}; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void canonicalize();
  RatPoly core_;
  long shift_ = 0;
};

// Equality in Q[t, t^-1] modulo multiplication by c * t^k with c in Q^x.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);
// Equality modulo +-t^k only.
bool equal_up_to_signed_units(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace concordia
