#include <set>

#include "concordia/error.hpp"
#include "concordia/numtheory.hpp"

namespace concordia {

std::string Place::to_string() const { return infinite ? std::string("inf") : concordia::to_string(p); }

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(mod_floor(a, p).get_mpz_t(), p.get_mpz_t()); }

namespace {

// a = p^v * u with u a p-adic unit.
Rational unit_part(const Rational& a, const Integer& p, long& v) {
  v = valuation(a, p);
  return a / pow_rat(Rational(p), v);
}

int two_adic_e(const Integer& u8) { return ((u8 - 1) / 2) % 2 == 0 ? 0 : 1; }
int two_adic_w(const Integer& u8) { return ((u8 * u8 - 1) / 8) % 2 == 0 ? 0 : 1; }

}  // namespace

int hilbert_q(const Rational& a, const Rational& b, const Integer& p) {
  if (a == 0 || b == 0) throw DomainError("hilbert symbol of zero");
  if (!is_prime(p)) throw InvalidArgument("hilbert symbol place " + to_string(p) + " is not prime");
  long va, vb;
  Rational u = unit_part(a, p, va);
  Rational w = unit_part(b, p, vb);
  if (p == 2) {
    Integer u8 = rational_mod(u, 8), w8 = rational_mod(w, 8);
    long exp = two_adic_e(u8) * two_adic_e(w8) + va * two_adic_w(w8) + vb * two_adic_w(u8);
    return exp % 2 == 0 ? 1 : -1;
  }
  // ((-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)}) is a unit; its class mod p is a
  // square iff the symbol is +1.
  Rational c = pow_rat(a, vb) / pow_rat(b, va);
  if ((va * vb) % 2 != 0) c = -c;
  return legendre(rational_mod(c, p), p);
}

int hilbert_q(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw DomainError("hilbert symbol of zero");
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
  return hilbert_q(a, b, v.p);
}

HilbertProductReport hilbert_product_check(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw DomainError("hilbert symbol of zero");
  HilbertProductReport r;
  std::vector<Place> places{Place::real(), Place::prime(2)};
  for (const auto& p : prime_support({a, b}))
    if (p != 2) places.push_back(Place::prime(p));
  int prod = 1;
  for (const auto& v : places) {
    int s = hilbert_q(a, b, v);
    r.symbols.push_back({v, s});
    prod *= s;
  }
  r.product_is_one = (prod == 1);
  return r;
}

}  // namespace concordia
