#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// A place of Q: a rational prime, or the real place when infinite is set.
struct Place {
  bool infinite = false;
  Integer p = 0;

  static Place real() { return {true, 0}; }
  static Place prime(const Integer& q) { return {false, q}; }
  std::string to_string() const;
};

// Quadratic norm residue symbol (a, b)_v of Q.
int hilbert_q(const Rational& a, const Rational& b, const Place& v);
int hilbert_q(const Rational& a, const Rational& b, const Integer& p);

int legendre(const Integer& a, const Integer& p);

struct PlaceSymbol {
  Place place;
  int symbol;
};

struct HilbertProductReport {
  std::vector<PlaceSymbol> symbols;  // real place, 2, then odd primes in the support
  bool product_is_one = false;
};

HilbertProductReport hilbert_product_check(const Rational& a, const Rational& b);

// ---- real quadratic fields ----

// K = Q(sqrt(m)); m = 1 stands for K = Q itself.
struct QuadField {
  Integer m;
  explicit QuadField(const Integer& m);
  bool degenerate() const { return m == 1; }
};

struct QuadElt {
  Rational x = 0;
  Rational y = 0;  // x + y sqrt(m)
};

QuadElt quad_mul(const QuadField& K, const QuadElt& u, const QuadElt& v);
QuadElt quad_inv(const QuadField& K, const QuadElt& u);
QuadElt quad_pow(const QuadField& K, QuadElt u, long e);
Rational quad_norm(const QuadField& K, const QuadElt& u);
bool is_square_in(const QuadField& K, const Rational& a);

enum class SplitType { Ramified, Inert, Split };
std::string to_string(SplitType s);

struct QuadPrime {
  Integer p;
  SplitType type;
  Integer branch;  // Split: r with r^2 = m mod p; 0 otherwise
  int e;
  int f;
  std::string to_string() const;
};

// Primes of K above an odd rational prime p.
std::vector<QuadPrime> quad_prime_data(const QuadField& K, const Integer& p);

long quad_valuation(const QuadField& K, const QuadElt& x, const QuadPrime& P);

// (a, b)_P in K at a prime over an odd rational prime.
int hilbert_quadfield_odd(const QuadField& K, const QuadElt& a, const QuadElt& b, const QuadPrime& P);

enum class NormVerdict { Norm, NotNorm, Unknown };
std::string to_string(NormVerdict v);

struct PlaceCheck {
  std::string place;  // "real#1", "P(5,ramified)", "2-adic", ...
  int symbol;         // 0 when undecided
  std::string note;
};

struct NormTestResult {
  NormVerdict verdict = NormVerdict::Unknown;
  std::vector<PlaceCheck> places;
  std::optional<std::string> witness;  // first failing place for NotNorm / Unknown
};

// Is -1 a norm from K(sqrt(a)) to K?
NormTestResult minus_one_norm_test(const QuadField& K, const Integer& a);

// ---- p-adic square roots and the order-4 tower ----

struct PadicInt {
  Integer p;
  unsigned precision = 1;
  Integer residue;  // in [0, p^precision)
  Integer modulus() const;
};

PadicInt padic_sqrt(const Integer& u, const Integer& p, unsigned precision, const Integer& branch_residue);

struct StableFamilyCertificate {
  bool holds = false;
  bool a_prime = false;
  bool p_nonzero_mod_a = false;
  bool p_avoids_minus_2a_pm_1 = false;
  bool mirrored_holds = false;  // (a, -4a-p), i.e. the polynomial lambda(-t)
  std::string reason;
};

// lambda(t) = a t^2 - (2a+p) t + a has lambda(t^r) irreducible for every r >= 1.
StableFamilyCertificate stable_irreducible_family(const Integer& a, const Integer& p);

struct TowerState {
  unsigned level = 0;
  PadicInt m;
  PadicInt sigma;
  PadicInt sqrt_branch;
  std::optional<Integer> m_exact;
  std::optional<Integer> sigma_exact;
  long v_sigma = 0;
  int f = 1;
  Integer sigma_mod_p2;
  Integer expected_mod_p2;  // 4^(1-i) a p mod p^2
  int local_symbol = 0;     // (-1, sigma_i) at the prime over p
  bool ok = false;
};

struct TowerReport {
  Integer a, p;
  unsigned depth = 0;
  unsigned precision = 2;
  std::vector<TowerState> levels;
  bool nontrivial_discriminant = false;
  std::string verdict;  // "NontrivialDiscriminant" or "Failed"
};

TowerReport order4_tower(const Integer& a, const Integer& p, unsigned depth, unsigned precision = 2);

struct Order2Report {
  Integer a;
  Integer m;  // K = Q(sqrt(m)), m the squarefree part of a(4a+1)
  std::vector<PlaceCheck> places;
  long ramified_valuation = 0;  // v_P(a) at the ramified prime over a
  NormTestResult norm_test;
  bool discriminant_vanishes = false;
  std::string verdict;  // "DiscriminantVanishes" or "Failed"
};

Order2Report order2_certificate(const Integer& a);

}  // namespace concordia
