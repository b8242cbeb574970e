#pragma once

#include <string>
#include <utility>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(const Rational& c);  // NOLINT: constants convert implicitly
  RatPoly(long c) : RatPoly(Rational(c)) {}  // NOLINT

  static RatPoly monomial(const Rational& c, long degree);
  static RatPoly t() { return monomial(1, 1); }
  static RatPoly from_ints(std::initializer_list<long> coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(long i) const;
  Rational lead() const;
  Rational eval(const Rational& x) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  // Euclidean division; divisor nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  // Exact quotient; throws DomainError if d does not divide *this.
  RatPoly exact_div(const RatPoly& d) const;
  RatPoly operator%(const RatPoly& d) const { return divmod(d).second; }

  RatPoly derivative() const;
  RatPoly monic() const;
  // f(t) -> f(t^r)
  RatPoly compose_power(long r) const;
  // f(t) -> f(c*t)
  RatPoly scale_var(const Rational& c) const;
  // t^deg f(1/t)
  RatPoly reversed() const;
  RatPoly pow(unsigned long e) const;
  // Largest k with t^k | f (f nonzero).
  long low_order() const;
  RatPoly shift_down(long k) const;  // divide by t^k, exact
  RatPoly shift_up(long k) const;    // multiply by t^k

  // Positive rational c with f/c primitive integral; sign follows lead.
  Rational content() const;
  // f / content(f): integer coefficients, gcd 1, positive leading coefficient.
  RatPoly primitive() const;
  std::vector<Integer> integer_coeffs() const;  // requires integral coefficients

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RatPoly gcd(RatPoly a, RatPoly b);  // monic, gcd(0,0) = 0
RatPoly from_integer_coeffs(const std::vector<Integer>& c);

// Yun's algorithm: f = lead * prod_i s_i^i with s_i monic, squarefree, pairwise coprime.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);
RatPoly squarefree_part(const RatPoly& f);

}  // namespace concordia
