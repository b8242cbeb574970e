#include "concordia/roots.hpp"

#include "concordia/error.hpp"

namespace concordia {

SturmSequence::SturmSequence(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("Sturm sequence of zero polynomial");
  seq_.push_back(f);
  if (f.degree() < 1) return;
  seq_.push_back(f.derivative());
  while (true) {
    RatPoly r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    // normalize by a positive scalar to keep coefficients small
    seq_.push_back(-r * (Rational(1) / abs(r.content())));
  }
}

long SturmSequence::variations(const Rational& x) const {
  long v = 0;
  int prev = 0;
  for (const auto& p : seq_) {
    int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

Rational root_bound(const RatPoly& f) {
  if (f.degree() < 1) return 1;
  Rational m = 0;
  for (long i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(i) / f.lead())));
  return m + 1;
}

namespace {

void isolate_into(const SturmSequence& s, const Rational& a, const Rational& b, long n,
                  std::vector<RootInterval>& out) {
  // invariant: exactly n roots in (a, b]
  if (n == 0) return;
  if (n == 1) {
    if (s.poly().eval(b) == 0) {
      out.push_back({b, b});
      return;
    }
    // a closed interval needs a root-free left endpoint
    if (s.poly().eval(a) != 0) {
      out.push_back({a, b});
      return;
    }
  }
  Rational mid = (a + b) / 2;
  long left = s.count(a, mid);
  isolate_into(s, a, mid, left, out);
  isolate_into(s, mid, b, n - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const RatPoly& f, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw InvalidArgument("isolate_real_roots: lo > hi");
  std::vector<RootInterval> out;
  if (f.degree() < 1) return out;
  RatPoly g = squarefree_part(f);
  SturmSequence s(g);
  if (g.eval(lo) == 0) out.push_back({lo, lo});
  if (lo == hi) return out;
  isolate_into(s, lo, hi, s.count(lo, hi), out);
  return out;
}

void refine(const RatPoly& f, RootInterval& iv, const Rational& width) {
  if (iv.exact()) return;
  int slo = sign(f.eval(iv.lo));
  if (slo == 0) {
    iv.hi = iv.lo;
    return;
  }
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sign(f.eval(mid));
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
}

}  // namespace concordia
