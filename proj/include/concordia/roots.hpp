#pragma once

#include <vector>

#include "concordia/poly.hpp"

namespace concordia {

// Closed interval [lo, hi] containing exactly one real root; lo == hi marks an
// exact rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& f);
  // Sign variations of the sequence at x.
  long variations(const Rational& x) const;
  // Number of distinct roots in the half-open interval (a, b].
  long count(const Rational& a, const Rational& b) const;
  const RatPoly& poly() const { return seq_.front(); }

 private:
  std::vector<RatPoly> seq_;
};

// Isolating intervals, in increasing order, for the distinct real roots of f
// in [lo, hi]. The squarefree part of f is used.
std::vector<RootInterval> isolate_real_roots(const RatPoly& f, const Rational& lo, const Rational& hi);

// Bisect until hi - lo <= width; f must be the squarefree polynomial the
// interval was isolated for.
void refine(const RatPoly& f, RootInterval& iv, const Rational& width);

// Cauchy bound: every complex root z of f satisfies |z| < bound.
Rational root_bound(const RatPoly& f);

}  // namespace concordia
