#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace concordia {

using Integer = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every construction goes through canonicalize().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q"; whitespace is not allowed.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);

// True iff q = y^2 for some rational y.
bool is_square_rat(const Rational& q);
// Positive square root; requires is_square_rat(q).
Rational sqrt_rat(const Rational& q);

// p-adic valuation of a nonzero rational.
long valuation(const Rational& q, const Integer& p);
long valuation(const Integer& z, const Integer& p);

// Symmetric and non-negative residues.
Integer mod_floor(const Integer& a, const Integer& m);
Integer mod_symmetric(const Integer& a, const Integer& m);

// Image of a p-integral rational in Z/m; the denominator must be a unit mod m.
Integer rational_mod(const Rational& q, const Integer& m);

Integer pow_int(const Integer& base, unsigned long exp);
Rational pow_rat(const Rational& base, long exp);

// Trial-division factorization into (prime, exponent) pairs, |n| >= 1.
std::vector<std::pair<Integer, unsigned long>> factor_integer(Integer n);
bool is_prime(const Integer& n);
// Primes dividing a numerator or denominator of any of the given values.
std::vector<Integer> prime_support(const std::vector<Rational>& values);
// Largest squarefree divisor d of |n| with n = d * s^2, keeping the sign of n.
Integer squarefree_part(const Integer& n);

}  // namespace concordia
