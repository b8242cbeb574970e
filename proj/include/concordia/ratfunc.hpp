#pragma once

#include <string>

#include "concordia/matrix.hpp"
#include "concordia/poly.hpp"

namespace concordia {

// Element of Q(t) in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const RatPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const RatPoly& num, const RatPoly& den);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // f(t) -> f(1/t)
  RatFunc inverted() const;

  std::string to_string() const;

 private:
  RatPoly num_, den_;
};

using FuncMatrix = Matrix<RatFunc>;

// Gauss-Jordan inverse over Q(t); throws DomainError when singular.
FuncMatrix inverse(const FuncMatrix& m);

}  // namespace concordia
