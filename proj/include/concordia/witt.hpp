#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concordia/laurent.hpp"
#include "concordia/roots.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

// Points of the unit circle are parametrized by s in R u {inf}:
//   w(s) = (1 + i s) / (1 - i s) = ((1 - s^2) + 2 s i) / (1 + s^2),
// so s = 0 is w = 1, s = inf is w = -1 and s increases counterclockwise.
// The upper half circle is s > 0; w(-s) is the conjugate of w(s).
struct CirclePoint {
  bool at_infinity = false;
  Rational s;

  static CirclePoint param(const Rational& s) { return {false, s}; }
  static CirclePoint minus_one() { return {true, 0}; }
};

struct ReciprocalFactor {
  RatPoly poly;  // irreducible, primitive, positive leading coefficient
  unsigned multiplicity = 0;
  bool reciprocal = false;
  bool is_t_minus_1 = false;
  bool is_t_plus_1 = false;
  // For even-degree reciprocal factors: lambda(t) = t^k delta(t + 1/t).
  RatPoly trace_poly;
  // Trace roots x in (-2, 2), increasing in x, and the parameters s > 0 of the
  // upper half circle roots, increasing in s. x = 2(1 - s^2)/(1 + s^2).
  std::vector<RootInterval> trace_roots;
  std::vector<RootInterval> circle_roots;
};

// Irreducible factors of delta with reciprocity flags and circle roots.
std::vector<ReciprocalFactor> reciprocal_split(const LaurentPoly& delta);

bool is_reciprocal(const RatPoly& f);

// Trace polynomial delta with f(t) = t^k delta(t + 1/t), deg f = 2k, f palindromic.
RatPoly trace_polynomial(const RatPoly& f);
// (1 + s^2)^k delta(2 (1 - s^2) / (1 + s^2)): its real roots are the parameters
// of the circle roots of f.
RatPoly circle_parameter_poly(const RatPoly& f);

int exponent_mod2(const SeifertMatrix& S, const RatPoly& lambda);
unsigned multiplicity_in(const RatPoly& f, const RatPoly& lambda);

// Exact signature of the hermitian form of S at w.
long circle_signature(const SeifertMatrix& S, const CirclePoint& w);

struct SignatureJump {
  RatPoly factor;
  RootInterval s;     // parameter interval; the root itself is w(s)
  bool upper = true;  // false: the conjugate root w(-s)
  long before = 0;
  long after = 0;
  long jump = 0;  // after - before, counterclockwise
  Rational sample_before;
  Rational sample_after;
};

// All circle roots counterclockwise from w = 1 (upper arc first, then the
// conjugates). Roots at w = -1 are never listed: their jump is zero by
// conjugation symmetry.
std::vector<SignatureJump> signature_jumps(const SeifertMatrix& S);

struct RhoInterval {
  long double lo = 0;
  long double hi = 0;
  bool exact = false;  // no circle roots: lo == hi == the constant signature
};

// Normalized integral of the signature function.
RhoInterval rho_abelian(const SeifertMatrix& S, const Rational& tol);

struct StableCertificate {
  enum class Kind { StablyIrreducible, TriviallySplit, Undetermined, CircleRoots };
  Kind kind = Kind::Undetermined;
  long r = 0;  // TriviallySplit(r), or the searched bound for Undetermined
  Integer a, p;  // StablyIrreducible(a, p)
  RatPoly factor;  // the factor blocking the search, if any
};

std::string to_string(StableCertificate::Kind k);

// Matches f = c (a t^2 - (2a + p) t + a) with a > 0; returns (a, p).
std::optional<std::pair<Integer, Integer>> quadratic_family_params(const RatPoly& f);

// Smallest r <= r_max such that delta(t^r) has no reciprocal irreducible factor.
std::optional<long> stably_nonreciprocal_search(const LaurentPoly& delta, long r_max);
// Same search with the certificate explaining a failure.
StableCertificate stable_certificate(const LaurentPoly& delta, long r_max);

struct OrderClassification {
  enum class Verdict { Infinite, Trivial, Order2, Order4, TorsionUnknown, Unknown };
  Verdict verdict = Verdict::Unknown;
  long r = 0;        // Trivial(r)
  long decabled = 1; // S was recognised as i_r of a smaller matrix
  std::optional<SignatureJump> witness_jump;
  std::optional<RatPoly> witness_factor;  // TorsionUnknown: odd exponent factor
  StableCertificate stable;
  Integer a, p;        // family parameters for Order2 / Order4
  unsigned depth = 0;  // Order4: verified tower depth
  std::string note;
};

std::string to_string(OrderClassification::Verdict v);

long default_r_max();        // CONCORDIA_RMAX, else 12
unsigned default_padic_depth();  // CONCORDIA_PADIC_DEPTH, else 8

// If S = i_r(B) for some r > 1, returns the pair (B, r) with r maximal.
std::optional<std::pair<SeifertMatrix, long>> decable(const SeifertMatrix& S);

OrderClassification order_classify(const SeifertMatrix& S, long r_max, unsigned tower_depth);
inline OrderClassification order_classify(const SeifertMatrix& S, long r_max) {
  return order_classify(S, r_max, default_padic_depth());
}

struct FactorInvariants {
  ReciprocalFactor factor;
  int e_mod2 = 0;
  bool trivial_by_convention = false;  // eps = -1 and z = +-1
};

struct WittReport {
  int epsilon = 1;
  LaurentPoly alexander;
  std::vector<FactorInvariants> factors;
  std::vector<SignatureJump> jumps;
  std::string epsilon_convention_note;
};

WittReport witt_invariants(const SeifertMatrix& S);

}  // namespace concordia
