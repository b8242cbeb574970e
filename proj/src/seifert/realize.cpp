#include "concordia/error.hpp"
#include "concordia/linalg.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

namespace {

bool is_integral_poly(const RatPoly& f) {
  for (const auto& c : f.coeffs())
    if (!is_integer(c)) return false;
  return true;
}

bool square_or_zero(const Rational& x) { return x == 0 || is_square_rat(x); }

RatPoly power(const RatPoly& f, long e) { return f.pow(static_cast<unsigned>(e)); }

// D has formal degree 2g; its constant term may vanish at inner levels.
MatQ realize_poly(const RatPoly& D, long g, int eps) {
  const Rational E(eps);
  if (g == 1) {
    Rational d0 = D.coeff(0);
    if (eps == 1) {
      Rational u = sqrt_rat(D.eval(1));
      return MatQ{{d0, u}, {0, 1}};
    }
    Rational u = sqrt_rat(D.eval(-1));
    Rational v = sqrt_rat(-D.eval(1));
    return MatQ{{(u * u - v * v) / 4, u}, {0, 1}};
  }
  const Rational s = (g - 1) % 2 == 0 ? Rational(1) : -E;  // (-eps)^(g-1)
  const RatPoly t_minus_1 = RatPoly::t() - RatPoly(1), t_minus_eps = RatPoly::t() - RatPoly(E);
  Rational a = -s * D.coeff(0);
  RatPoly corr = power(t_minus_1, 2 * g - 2) * t_minus_eps * t_minus_eps;
  RatPoly num = D + RatPoly(a * s) * corr;
  if (num.coeff(0) != 0) throw DomainError("realize: malformed Delta_0, division by t fails");
  RatPoly D0 = RatPoly(E) * num.shift_down(1);
  if (D0.degree() > 2 * g - 2) throw DomainError("realize: malformed Delta_0, degree too large");
  MatQ A0 = realize_poly(D0, g - 1, eps);

  const size_t n = static_cast<size_t>(2 * g);
  MatQ A(n, n);
  A(0, 1) = 1;
  A(0, 2) = a;
  A(1, 2) = 1;
  A(2, 0) = E * a;
  A(2, 1) = E;
  A.set_block(2, 2, A0);

  SeifertMatrix S{A, eps, 1};
  PolyMatrix M = presentation_matrix(S);
  PolyMatrix minor = M.block(1, 1, n - 1, n - 1);
  RatPoly expect_minor = RatPoly(s) * power(t_minus_1, 2 * g - 2) * t_minus_eps;
  if (poly_det(minor) != expect_minor) throw DomainError("realize: cofactor condition fails at genus " + std::to_string(g));
  if (poly_det(M) != D) throw DomainError("realize: determinant check fails at genus " + std::to_string(g));
  return A;
}

}  // namespace

AlexanderConditions alexander_conditions(const LaurentPoly& delta, int epsilon, bool integral) {
  if (delta.is_zero()) throw DomainError("alexander_conditions: zero polynomial");
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
  AlexanderConditions c;
  c.integral = integral;
  const RatPoly& D = delta.core();
  long deg = D.degree();
  if (deg % 2) {
    c.failures.push_back("odd degree span " + std::to_string(deg));
    return c;
  }
  c.genus = deg / 2;
  c.reciprocal = D.reversed() == D;
  if (!c.reciprocal) c.failures.push_back("Delta(t) != t^2g Delta(1/t)");
  c.integer_coefficients = is_integral_poly(D);
  if (integral && !c.integer_coefficients) c.failures.push_back("non-integer coefficients");
  const Rational E(epsilon);
  const Rational eg = c.genus % 2 == 0 ? Rational(1) : E;
  int chosen = 0;
  for (int sgn : {1, -1}) {
    Rational d1 = Rational(sgn) * D.eval(1);
    bool one_ok = integral ? d1 == eg : (d1 != 0 && is_square_rat(d1 * eg));
    bool eps_ok = square_or_zero(Rational(sgn) * D.eval(E));
    c.value_at_one_ok = c.value_at_one_ok || one_ok;
    c.value_at_eps_square = c.value_at_eps_square || eps_ok;
    if (one_ok && eps_ok) {
      chosen = sgn;
      break;
    }
  }
  if (!c.value_at_one_ok)
    c.failures.push_back(integral ? "Delta(1) != eps^g for either sign" : "eps^g Delta(1) is not a nonzero square for either sign");
  if (!c.value_at_eps_square) c.failures.push_back("Delta(eps) is not a square for either sign");
  if (!chosen && c.value_at_one_ok && c.value_at_eps_square) c.failures.push_back("no single sign satisfies both value conditions");
  if (chosen && c.failures.empty()) c.sign = chosen;
  return c;
}

SeifertMatrix realize(const LaurentPoly& delta, int epsilon) {
  AlexanderConditions c = alexander_conditions(delta, epsilon, false);
  if (!c.passes()) throw DomainError("realize: " + (c.failures.empty() ? std::string("conditions fail") : c.failures[0]));
  if (c.genus == 0) return {MatQ(0, 0), epsilon, 1};
  RatPoly D = RatPoly(Rational(c.sign)) * delta.core();
  SeifertMatrix S{realize_poly(D, c.genus, epsilon), epsilon, 1};
  if (poly_det(presentation_matrix(S)) != D) throw DomainError("realize: determinant check fails");
  return S;
}

}  // namespace concordia
