#include <algorithm>
#include <cmath>

#include "concordia/error.hpp"
#include "concordia/factor.hpp"
#include "concordia/linalg.hpp"
#include "concordia/witt.hpp"

namespace concordia {

bool is_reciprocal(const RatPoly& f) {
  if (f.is_zero()) return false;
  RatPoly g = f.shift_down(f.low_order());
  RatPoly r = g.reversed();
  return r == g || r == -g;
}

RatPoly trace_polynomial(const RatPoly& f) {
  if (f.degree() % 2 || f.reversed() != f) throw DomainError("trace_polynomial: f is not palindromic of even degree");
  const long k = f.degree() / 2;
  // t^j + t^-j as a polynomial in x = t + 1/t
  RatPoly prev(2), cur = RatPoly::t();
  RatPoly delta = RatPoly(f.coeff(k));
  for (long j = 1; j <= k; ++j) {
    delta += f.coeff(k + j) * cur;
    RatPoly next = RatPoly::t() * cur - prev;
    prev = cur;
    cur = next;
  }
  return delta;
}

RatPoly circle_parameter_poly(const RatPoly& f) {
  RatPoly delta = trace_polynomial(f);
  const long k = f.degree() / 2;
  const RatPoly s2 = RatPoly::monomial(1, 2);
  const RatPoly u = RatPoly(2) * (RatPoly(1) - s2), v = RatPoly(1) + s2;
  RatPoly h;
  for (long j = 0; j <= delta.degree(); ++j)
    h += delta.coeff(j) * u.pow(static_cast<unsigned long>(j)) * v.pow(static_cast<unsigned long>(k - j));
  return h;
}

namespace {

// Positive real roots of h with lo > 0, in increasing order.
std::vector<RootInterval> positive_roots(const RatPoly& h) {
  if (h.degree() < 1) return {};
  std::vector<RootInterval> out = isolate_real_roots(h, 0, root_bound(h));
  RatPoly g = squarefree_part(h);
  for (auto& iv : out) {
    if (iv.exact() && iv.lo == 0) throw DomainError("circle root at w = 1");
    while (iv.lo <= 0) refine(g, iv, (iv.hi - iv.lo) / 2);
  }
  return out;
}

}  // namespace

std::vector<ReciprocalFactor> reciprocal_split(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("reciprocal_split: zero polynomial");
  std::vector<ReciprocalFactor> out;
  const RatPoly tm1 = RatPoly::t() - RatPoly(1), tp1 = RatPoly::t() + RatPoly(1);
  for (const auto& [f, mult] : factor_poly(delta.core()).factors) {
    ReciprocalFactor rf;
    rf.poly = f;
    rf.multiplicity = mult;
    rf.reciprocal = is_reciprocal(f);
    rf.is_t_minus_1 = f == tm1;
    rf.is_t_plus_1 = f == tp1;
    if (rf.reciprocal && f.degree() % 2 == 0) {
      rf.trace_poly = trace_polynomial(f);
      rf.trace_roots = isolate_real_roots(rf.trace_poly, -2, 2);
      rf.circle_roots = positive_roots(circle_parameter_poly(f));
      if (rf.trace_roots.size() != rf.circle_roots.size())
        throw DomainError("reciprocal_split: trace and circle root counts disagree");
    }
    out.push_back(std::move(rf));
  }
  return out;
}

unsigned multiplicity_in(const RatPoly& f, const RatPoly& lambda) {
  if (lambda.degree() < 1) throw DomainError("multiplicity_in: constant lambda");
  if (f.is_zero()) throw DomainError("multiplicity_in: zero polynomial");
  unsigned m = 0;
  RatPoly g = f;
  for (;;) {
    auto [q, r] = g.divmod(lambda);
    if (!r.is_zero()) return m;
    g = q;
    ++m;
  }
}

int exponent_mod2(const SeifertMatrix& S, const RatPoly& lambda) {
  if (lambda.degree() < 1 || !is_irreducible(lambda)) throw DomainError("exponent_mod2: lambda is not irreducible");
  if (S.epsilon == -1 && lambda.degree() == 1) {
    RatPoly m = lambda.monic();
    if (m == RatPoly::t() - RatPoly(1) || m == RatPoly::t() + RatPoly(1)) return 0;
  }
  if (S.dim() == 0) return 0;
  return static_cast<int>(multiplicity_in(alexander(S).core(), lambda) % 2);
}

long circle_signature(const SeifertMatrix& S, const CirclePoint& w) {
  const size_t n = S.dim();
  if (n == 0) return 0;
  const MatQ& A = S.A;
  const MatQ At = A.transpose();
  if (w.at_infinity) {
    if (S.epsilon == -1) return 0;
    Inertia in = inertia(A + At);
    if (in.zero) throw DomainError("circle_signature: w = -1 is a root of the Alexander polynomial");
    return in.signature();
  }
  if (w.s == 0) throw DomainError("circle_signature: w = 1");
  // H = X + iY, rescaled by positive factors of (1 + s^2) and s:
  //   eps = +1: (1 - w) A + (1 - conj w) A^T
  //   eps = -1: (w - conj w)((1 - w) A - (1 - conj w) A^T)
  MatQ X, Y;
  if (S.epsilon == 1) {
    X = Rational(abs(w.s)) * (A + At);
    Y = Rational(-sign(w.s)) * (A - At);
  } else {
    X = A + At;
    Y = w.s * (A - At);
  }
  MatQ R(2 * n, 2 * n);
  R.set_block(0, 0, X);
  R.set_block(0, n, -Y);
  R.set_block(n, 0, Y);
  R.set_block(n, n, X);
  Inertia in = inertia(R);
  if (in.zero) throw DomainError("circle_signature: w is a root of the Alexander polynomial");
  return in.signature() / 2;
}

namespace {

struct UpperRoot {
  RootInterval iv;
  RatPoly h;  // squarefree parameter polynomial the interval isolates a root of
  RatPoly factor;
};

struct UpperArc {
  std::vector<UpperRoot> roots;
  std::vector<Rational> samples;  // samples[j] lies before roots[j], samples[m] after the last
  std::vector<long> sigma;
};

bool by_lo(const UpperRoot& x, const UpperRoot& y) { return x.iv.lo < y.iv.lo; }

void separate(std::vector<UpperRoot>& roots) {
  std::sort(roots.begin(), roots.end(), by_lo);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t j = 0; j + 1 < roots.size(); ++j) {
      auto& l = roots[j].iv;
      auto& r = roots[j + 1].iv;
      if (l.hi < r.lo) continue;
      refine(roots[j].h, l, (l.hi - l.lo) / 2);
      refine(roots[j + 1].h, r, (r.hi - r.lo) / 2);
      changed = true;
    }
    if (changed) std::sort(roots.begin(), roots.end(), by_lo);
  }
}

UpperArc upper_arc(const SeifertMatrix& S) {
  UpperArc arc;
  if (S.dim() == 0) return arc;
  for (const auto& f : reciprocal_split(alexander(S))) {
    if (f.circle_roots.empty()) continue;
    RatPoly h = squarefree_part(circle_parameter_poly(f.poly));
    for (const auto& iv : f.circle_roots) arc.roots.push_back({iv, h, f.poly});
  }
  separate(arc.roots);
  const size_t m = arc.roots.size();
  if (m == 0) {
    arc.samples.push_back(1);
  } else {
    arc.samples.push_back(arc.roots[0].iv.lo / 2);
    for (size_t j = 0; j + 1 < m; ++j) arc.samples.push_back((arc.roots[j].iv.hi + arc.roots[j + 1].iv.lo) / 2);
    arc.samples.push_back(arc.roots[m - 1].iv.hi + 1);
  }
  for (const auto& s : arc.samples) arc.sigma.push_back(circle_signature(S, CirclePoint::param(s)));
  return arc;
}

}  // namespace

std::vector<SignatureJump> signature_jumps(const SeifertMatrix& S) {
  UpperArc arc = upper_arc(S);
  std::vector<SignatureJump> out;
  const size_t m = arc.roots.size();
  for (size_t j = 0; j < m; ++j) {
    SignatureJump J;
    J.factor = arc.roots[j].factor;
    J.s = arc.roots[j].iv;
    J.sample_before = arc.samples[j];
    J.sample_after = arc.samples[j + 1];
    J.before = arc.sigma[j];
    J.after = arc.sigma[j + 1];
    J.jump = J.after - J.before;
    out.push_back(J);
  }
  // lower arc, counterclockwise: the conjugate of the last upper root comes first
  for (size_t j = m; j-- > 0;) {
    SignatureJump J;
    J.factor = arc.roots[j].factor;
    J.s = arc.roots[j].iv;
    J.upper = false;
    J.sample_before = -arc.samples[j + 1];
    J.sample_after = -arc.samples[j];
    J.before = circle_signature(S, CirclePoint::param(J.sample_before));
    J.after = circle_signature(S, CirclePoint::param(J.sample_after));
    J.jump = J.after - J.before;
    out.push_back(J);
  }
  return out;
}

namespace {

struct Interval {
  long double lo, hi;
};

long double down(long double x) { return std::nextafter(x, -HUGE_VALL); }
long double up(long double x) { return std::nextafter(x, HUGE_VALL); }

Interval enclose(const Rational& q) {
  double x = q.get_d();
  return {std::nextafter(x, -HUGE_VAL), std::nextafter(x, HUGE_VAL)};
}

Interval add(Interval x, Interval y) { return {down(x.lo + y.lo), up(x.hi + y.hi)}; }

Interval scale(Interval x, long c) {
  if (c < 0) return {down(x.hi * c), up(x.lo * c)};
  return {down(x.lo * c), up(x.hi * c)};
}

Interval divide_by_pi(Interval x) {
  const Interval pi{down(3.141592653589793238462643383279502884L), up(3.141592653589793238462643383279502884L)};
  long double c[] = {x.lo / pi.lo, x.lo / pi.hi, x.hi / pi.lo, x.hi / pi.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

// 2 atan(s) for s in [lo, hi], lo > 0; atanl is taken as accurate to a few ulps.
Interval theta(const RootInterval& iv) {
  Interval lo = enclose(iv.lo), hi = enclose(iv.hi);
  long double a = std::atan(lo.lo), b = std::atan(hi.hi);
  for (int k = 0; k < 4; ++k) a = down(a), b = up(b);
  return {2 * a, 2 * b};
}

}  // namespace

RhoInterval rho_abelian(const SeifertMatrix& S, const Rational& tol) {
  if (tol <= 0) throw InvalidArgument("rho_abelian: tolerance must be positive");
  if (tol < Rational(1, 1000000000000L)) throw InvalidArgument("rho_abelian: tolerance below 1e-12 is not certified");
  RhoInterval out;
  if (S.dim() == 0) {
    out.exact = true;
    return out;
  }
  UpperArc arc = upper_arc(S);
  const size_t m = arc.roots.size();
  if (m == 0) {
    out.lo = out.hi = static_cast<long double>(arc.sigma[0]);
    out.exact = true;
    return out;
  }
  // rho = sigma_m + (1/pi) sum theta_j (sigma_{j-1} - sigma_j)
  long total = 0;
  for (size_t j = 0; j < m; ++j) total += std::labs(arc.sigma[j] - arc.sigma[j + 1]);
  Rational width = tol / (4 * (total + 1));
  for (;;) {
    for (auto& r : arc.roots) refine(r.h, r.iv, width);
    Interval sum{0, 0};
    for (size_t j = 0; j < m; ++j) sum = add(sum, scale(theta(arc.roots[j].iv), arc.sigma[j] - arc.sigma[j + 1]));
    Interval rho = add(divide_by_pi(sum), Interval{static_cast<long double>(arc.sigma[m]), static_cast<long double>(arc.sigma[m])});
    if (rho.hi - rho.lo <= tol.get_d()) {
      out.lo = rho.lo;
      out.hi = rho.hi;
      return out;
    }
    width /= 4;
  }
}

}  // namespace concordia
