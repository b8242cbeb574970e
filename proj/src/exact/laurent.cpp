#include "concordia/laurent.hpp"

#include "concordia/error.hpp"

namespace concordia {

LaurentPoly::LaurentPoly(RatPoly core, long shift) : core_(std::move(core)), shift_(shift) { canonicalize(); }

void LaurentPoly::canonicalize() {
  if (core_.is_zero()) {
    shift_ = 0;
    return;
  }
  long k = core_.low_order();
  core_ = core_.shift_down(k);
  shift_ += k;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (shift_ > 0) return 0;
    if (shift_ == 0) return core_.coeff(0);
    throw DomainError("Laurent polynomial with negative powers evaluated at 0");
  }
  return core_.eval(x) * pow_rat(x, shift_);
}

RatPoly LaurentPoly::to_poly() const {
  if (shift_ < 0) throw DomainError("Laurent polynomial has negative powers: " + to_string());
  return core_.shift_up(shift_);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long base = std::min(a.shift_, b.shift_);
  return {a.core_.shift_up(a.shift_ - base) + b.core_.shift_up(b.shift_ - base), base};
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  return {core_.reversed(), -(shift_ + core_.degree())};
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (shift_ == 0) return core_.to_string(var);
  std::string s = "(" + core_.to_string(var) + ")";
  return s + "*" + var + "^" + std::to_string(shift_);
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.core().primitive() == b.core().primitive();
}

bool equal_up_to_signed_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.core() == b.core() || a.core() == -b.core();
}

}  // namespace concordia
