#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "concordia/error.hpp"
#include "concordia/factor.hpp"
#include "concordia/witt.hpp"

using namespace concordia;
using namespace testsupport;

namespace {

using cd = std::complex<double>;
using V = OrderClassification::Verdict;

const MatQ kFig8{{1, 1}, {0, -1}};
const MatQ kTrefoil{{-1, 1}, {0, -1}};

RatPoly P(std::vector<long> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return RatPoly(q);
}

// Complex roots of f from the companion matrix.
std::vector<cd> float_roots(const RatPoly& f) {
  const long d = f.degree();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  for (long i = 1; i < d; ++i) C(i, i - 1) = 1;
  for (long i = 0; i < d; ++i) C(i, d - 1) = -to_double(f.coeff(i) / f.lead());
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  std::vector<cd> out;
  for (long i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

}  // namespace

TEST_CASE("trace polynomial rebuilds the reciprocal polynomial") {
  for (int i = 0; i < 40; ++i) {
    long k = rand_int(1, 4);
    RatPoly delta = rand_poly(k, 6);
    // t^k delta(t + 1/t) = sum_j d_j (t^2 + 1)^j t^(k-j)
    RatPoly f;
    for (long j = 0; j <= k; ++j)
      f += delta.coeff(j) * (RatPoly::monomial(1, 2) + RatPoly(1)).pow(static_cast<unsigned long>(j)) *
           RatPoly::monomial(1, k - j);
    CHECK(trace_polynomial(f) == delta);
  }
  CHECK_THROWS_AS(trace_polynomial(P({1, 2, 3})), DomainError);
}

TEST_CASE("reciprocal_split examples") {
  auto fig8_sq = reciprocal_split(LaurentPoly(P({-1, 3, -1}).compose_power(2)));
  REQUIRE(fig8_sq.size() == 2);
  for (const auto& f : fig8_sq) CHECK_FALSE(f.reciprocal);

  auto golden = reciprocal_split(LaurentPoly(P({1, -3, 1})));
  REQUIRE(golden.size() == 1);
  CHECK(golden[0].reciprocal);
  CHECK(golden[0].circle_roots.empty());

  auto tref = reciprocal_split(LaurentPoly(P({1, -1, 1})));
  REQUIRE(tref.size() == 1);
  CHECK(tref[0].reciprocal);
  REQUIRE(tref[0].trace_roots.size() == 1);
  RootInterval x = tref[0].trace_roots[0];
  refine(tref[0].trace_poly, x, Rational(1, 1000));
  CHECK(x.lo <= 1);
  CHECK(1 <= x.hi);
  REQUIRE(tref[0].circle_roots.size() == 1);
  CHECK(tref[0].circle_roots[0].lo > 0);

  auto with_units = reciprocal_split(LaurentPoly(P({1, 1}) * P({-1, 1}) * P({-1, 1})));
  REQUIRE(with_units.size() == 2);
  CHECK_THROWS_AS(reciprocal_split(LaurentPoly()), DomainError);
}

TEST_CASE("circle roots agree with companion-matrix roots") {
  std::vector<RatPoly> polys{P({1, -1, 1}), P({1, 1, 1}), P({1, 0, 1}), P({1, -1, 1, -1, 1}), P({1, 3, 1}),
                             P({2, -1, 3, -1, 2}), P({1, -3, 5, -3, 1}), P({5, -11, 5})};
  for (int i = 0; i < 20; ++i) {
    RatPoly h = rand_poly(3, 5);
    polys.push_back(h * h.reversed());
  }
  for (const auto& poly : polys) {
    for (const auto& f : reciprocal_split(LaurentPoly(poly))) {
      if (!f.reciprocal || f.poly.degree() % 2) continue;
      std::vector<double> expected;
      for (cd z : float_roots(f.poly))
        if (std::abs(std::abs(z) - 1) < 1e-7 && z.imag() > 1e-9) expected.push_back(std::tan(std::arg(z) / 2));
      std::sort(expected.begin(), expected.end());
      REQUIRE(f.circle_roots.size() == expected.size());
      RatPoly h = squarefree_part(circle_parameter_poly(f.poly));
      for (size_t k = 0; k < expected.size(); ++k) {
        RootInterval iv = f.circle_roots[k];
        refine(h, iv, Rational(1, 1000000));
        CHECK(to_double(iv.lo) - 1e-6 <= expected[k]);
        CHECK(expected[k] <= to_double(iv.hi) + 1e-6);
      }
    }
  }
}

TEST_CASE("exponent_mod2") {
  SeifertMatrix o2{MatQ{{-5, 1}, {0, 1}}, 1, 1};
  CHECK(exponent_mod2(o2, P({-5, 11, -5})) == 1);
  CHECK(exponent_mod2(o2, P({5, -11, 5})) == 1);
  CHECK(exponent_mod2(o2, P({1, -3, 1})) == 0);
  CHECK(exponent_mod2(block_sum(o2, o2), P({-5, 11, -5})) == 0);
  CHECK_THROWS_AS(exponent_mod2(o2, P({1, -3, 1}) * P({1, 1})), DomainError);
  for (int i = 0; i < 20; ++i) {
    int eps = i % 2 ? 1 : -1;
    SeifertMatrix S1 = rand_valid(2, eps), S2 = rand_valid(2, eps);
    for (const auto& [f, m] : factor_poly(alexander(S1).core()).factors) {
      int sum = exponent_mod2(block_sum(S1, S2), f);
      CHECK(sum == (exponent_mod2(S1, f) + exponent_mod2(S2, f)) % 2);
      CHECK(exponent_mod2(block_sum(S1, S1), f) == 0);
    }
  }
  // eps = -1 convention at z = +-1
  SeifertMatrix e{realize(LaurentPoly(P({1, 1}) * P({1, 1}) * P({-5, 11, -5})), -1)};
  CHECK(exponent_mod2(e, P({1, 1})) == 0);
  CHECK(exponent_mod2(e, P({-5, 11, -5})) == 1);
}

TEST_CASE("circle_signature examples") {
  SeifertMatrix tref{kTrefoil, 1, 1};
  CHECK(circle_signature(tref, CirclePoint::param(1)) == -2);
  CHECK(circle_signature(tref, CirclePoint::param(Rational(1, 10))) == 0);
  CHECK(circle_signature(tref, CirclePoint::minus_one()) == -2);
  SeifertMatrix fig8{kFig8, 1, 1};
  CHECK(circle_signature(fig8, CirclePoint::minus_one()) == 0);
  CHECK(circle_signature({MatQ(0, 0), 1, 1}, CirclePoint::param(1)) == 0);
  CHECK_THROWS_AS(circle_signature(tref, CirclePoint::param(0)), DomainError);
  // a root at a rational circle point: 2(t^2 + 1) vanishes at w = i, s = 1
  SeifertMatrix S = realize(LaurentPoly(P({2, 0, 2})), 1);
  CHECK_THROWS_AS(circle_signature(S, CirclePoint::param(1)), DomainError);
}

TEST_CASE("circle_signature agrees with a floating-point eigenvalue oracle") {
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    int eps = i % 2 ? 1 : -1;
    SeifertMatrix S = rand_valid(2 * static_cast<size_t>(rand_int(1, 3)), eps);
    for (int k = 0; k < 4; ++k) {
      Rational s = rand_rat(6, 5);
      if (s == 0) continue;
      auto f = float_signature(S.A, eps, theta_of(s));
      if (!f) continue;
      CHECK(circle_signature(S, CirclePoint::param(s)) == *f);
      ++compared;
    }
  }
  CHECK(compared > 150);
}

TEST_CASE("signature is symmetric under conjugation") {
  for (int i = 0; i < 30; ++i) {
    int eps = i % 2 ? 1 : -1;
    SeifertMatrix S = rand_valid(2 * static_cast<size_t>(rand_int(1, 2)), eps);
    Rational s = rand_rat(5, 4);
    if (s == 0) continue;
    try {
      CHECK(circle_signature(S, CirclePoint::param(s)) == circle_signature(S, CirclePoint::param(-s)));
    } catch (const DomainError&) {
      CHECK_THROWS_AS(circle_signature(S, CirclePoint::param(-s)), DomainError);
    }
  }
}

TEST_CASE("signature_jumps examples") {
  CHECK(signature_jumps({kFig8, 1, 1}).empty());
  auto j = signature_jumps({kTrefoil, 1, 1});
  REQUIRE(j.size() == 2);
  CHECK(j[0].upper);
  CHECK_FALSE(j[1].upper);
  CHECK(j[0].jump == -2);
  CHECK(j[1].jump == 2);
  for (const auto& x : j) CHECK(x.factor == P({1, -1, 1}));
  // numeric sampling around e^{i pi/3}
  auto before = float_signature(kTrefoil, 1, M_PI / 3 - 1e-3), after = float_signature(kTrefoil, 1, M_PI / 3 + 1e-3);
  REQUIRE(before);
  REQUIRE(after);
  CHECK(*after - *before == j[0].jump);
}

TEST_CASE("signature jumps are additive") {
  for (int i = 0; i < 15; ++i) {
    int eps = i % 2 ? 1 : -1;
    SeifertMatrix S = rand_valid(2, eps);
    auto js = signature_jumps(S);
    auto jss = signature_jumps(block_sum(S, S));
    REQUIRE(js.size() == jss.size());
    for (size_t k = 0; k < js.size(); ++k) CHECK(jss[k].jump == 2 * js[k].jump);
    for (const auto& x : signature_jumps(block_sum(S, negate(S)))) CHECK(x.jump == 0);
  }
  SeifertMatrix T{kTrefoil, 1, 1};
  auto jt = signature_jumps(block_sum(T, T));
  REQUIRE(jt.size() == 2);
  CHECK(jt[0].jump == -4);
}

TEST_CASE("rho_abelian against dense sampling") {
  const Rational tol(1, 1000000);
  RhoInterval t = rho_abelian({kTrefoil, 1, 1}, tol);
  CHECK(t.hi - t.lo <= 1e-6L);
  CHECK(t.lo <= -4.0L / 3);
  CHECK(-4.0L / 3 <= t.hi);
  CHECK(std::abs(sampled_rho(kTrefoil, 1, 100000) - static_cast<double>(t.lo)) < 1e-3);

  RhoInterval f = rho_abelian({kFig8, 1, 1}, tol);
  CHECK(f.exact);
  CHECK(f.lo == 0);
  CHECK(rho_abelian({MatQ(0, 0), 1, 1}, tol).lo == 0);
  CHECK_THROWS_AS(rho_abelian({kTrefoil, 1, 1}, 0), InvalidArgument);

  for (int i = 0; i < 8; ++i) {
    int eps = i % 2 ? 1 : -1;
    SeifertMatrix S = rand_valid(2 * static_cast<size_t>(rand_int(1, 2)), eps);
    RhoInterval r = rho_abelian(S, tol);
    CHECK(std::abs(sampled_rho(S.A, eps, 20000) - static_cast<double>(r.lo)) < 2e-2);
  }
}

TEST_CASE("rho_abelian is additive") {
  const Rational tol(1, 100000000);
  for (int i = 0; i < 10; ++i) {
    int eps = i % 2 ? 1 : -1;
    SeifertMatrix S1 = rand_valid(2, eps), S2 = rand_valid(2, eps);
    RhoInterval a = rho_abelian(S1, tol), b = rho_abelian(S2, tol), ab = rho_abelian(block_sum(S1, S2), tol);
    CHECK(ab.lo <= a.hi + b.hi);
    CHECK(a.lo + b.lo <= ab.hi);
    RhoInterval z = rho_abelian(block_sum(S1, negate(S1)), tol);
    CHECK(z.lo <= 0);
    CHECK(0 <= z.hi);
  }
}

TEST_CASE("stably_nonreciprocal_search examples") {
  CHECK(stably_nonreciprocal_search(LaurentPoly(P({-1, 3, -1})), 12) == 2);
  CHECK(stably_nonreciprocal_search(LaurentPoly(P({-25, 51, -25})), 12) == 2);
  CHECK_FALSE(stably_nonreciprocal_search(LaurentPoly(P({-5, 11, -5})), 12).has_value());
  StableCertificate c = stable_certificate(LaurentPoly(P({-5, 11, -5})), 12);
  CHECK(c.kind == StableCertificate::Kind::StablyIrreducible);
  CHECK(c.a == 5);
  CHECK(c.p == 1);
  CHECK(stable_certificate(LaurentPoly(P({1, -1, 1})), 12).kind == StableCertificate::Kind::CircleRoots);
  CHECK(stably_nonreciprocal_search(LaurentPoly(P({-3, 1})), 3) == 1);
  CHECK_THROWS_AS(stably_nonreciprocal_search(LaurentPoly(), 3), DomainError);
}

TEST_CASE("stable search agrees with brute force factoring") {
  // brute force: factor all of delta(t^r), no shortcuts
  auto brute = [](const RatPoly& d, long rmax) -> std::optional<long> {
    for (long r = 1; r <= rmax; ++r) {
      bool any = false;
      for (const auto& [g, m] : factor_poly(d.compose_power(r)).factors) {
        RatPoly rev = g.reversed();
        any = any || rev == g || rev == -g;
      }
      if (!any) return r;
    }
    return std::nullopt;
  };
  std::vector<RatPoly> ds{P({-1, 3, -1}), P({-4, 9, -4}), P({2, -5, 2}) * P({1, -3, 1}), P({-5, 11, -5}),
                          P({3, -7, 3}), P({6, -13, 6}), P({1, -4, 1})};
  for (const auto& d : ds) CHECK(stably_nonreciprocal_search(LaurentPoly(d), 6) == brute(d, 6));
}

TEST_CASE("order_classify examples") {
  auto fig8 = order_classify({kFig8, 1, 1}, 12);
  CHECK(fig8.verdict == V::Trivial);
  CHECK(fig8.r == 2);
  auto tref = order_classify({kTrefoil, 1, 1}, 12);
  CHECK(tref.verdict == V::Infinite);
  REQUIRE(tref.witness_jump);
  CHECK(tref.witness_jump->jump != 0);

  auto o2 = order_classify({MatQ{{-5, 1}, {0, 1}}, 1, 1}, 12);
  CHECK(o2.verdict == V::Order2);
  CHECK(o2.a == 5);
  auto o4 = order_classify({MatQ{{Rational(-5, 3), 1}, {0, 1}}, 1, 1}, 12, 8);
  CHECK(o4.verdict == V::Order4);
  CHECK(o4.depth == 8);
  for (long a : {1L, 2L, 3L}) {
    auto k = order_classify({MatQ{{a, 1}, {0, -a}}, 1, 1}, 12);
    CHECK(k.verdict == V::Trivial);
    CHECK(k.r == 2);
  }
  CHECK(order_classify({MatQ(0, 0), 1, 1}, 12).verdict == V::Trivial);
}

TEST_CASE("order_classify on eps = -1 families") {
  const RatPoly tp1sq = P({1, 1}) * P({1, 1});
  CHECK(order_classify(realize(LaurentPoly(tp1sq * P({-5, 11, -5})), -1), 12).verdict == V::Order2);
  CHECK(order_classify(realize(LaurentPoly(tp1sq * P({-5, 13, -5}) * Rational(1, 3)), -1), 12, 4).verdict == V::Order4);
  // Pell family, a = 1
  auto pell = order_classify(realize(LaurentPoly(P({1, -3, 1}) * P({1, -3, 1})), -1), 12);
  CHECK(pell.verdict == V::Trivial);
  CHECK(pell.r == 2);
}

TEST_CASE("order_classify is compatible with cabling") {
  std::vector<SeifertMatrix> fam{{kFig8, 1, 1},
                                 {kTrefoil, 1, 1},
                                 {MatQ{{-5, 1}, {0, 1}}, 1, 1},
                                 {MatQ{{Rational(-5, 3), 1}, {0, 1}}, 1, 1},
                                 {MatQ{{2, 1}, {0, -2}}, 1, 1},
                                 {MatQ{{-13, 1}, {0, 1}}, 1, 1}};
  for (const auto& S : fam)
    for (long r : {2L, 3L}) {
      auto a = order_classify(cable(S, r), 6, 4);
      auto b = order_classify(S, 6 * r, 4);
      CHECK(a.verdict == b.verdict);
      if (a.verdict == V::Order2 || a.verdict == V::Order4) CHECK(a.decabled == r);
    }
}

TEST_CASE("decable recognises cables") {
  SeifertMatrix S{MatQ{{-5, 1}, {0, 1}}, 1, 1};
  auto d = decable(cable(S, 3));
  REQUIRE(d);
  CHECK(d->second == 3);
  CHECK(d->first.A == S.A);
  CHECK(d->first.complexity == 1);
  CHECK_FALSE(decable(S).has_value());
}

TEST_CASE("TorsionUnknown and Unknown outcomes") {
  // stably irreducible reciprocal factor outside the order-2 / order-4 hypotheses:
  // (a, p) = (7, 1) has a = 7 = 3 mod 4
  auto t = order_classify(realize(LaurentPoly(P({-7, 15, -7})), 1), 12);
  CHECK(t.verdict == V::TorsionUnknown);
  REQUIRE(t.witness_factor);
  // even exponent: A + A for the order-2 family is order 1 or 2 in the limit, not decided
  SeifertMatrix o2{MatQ{{-5, 1}, {0, 1}}, 1, 1};
  CHECK(order_classify(block_sum(o2, o2), 12).verdict == V::Unknown);
}

TEST_CASE("witt_invariants report") {
  const RatPoly tp1sq = P({1, 1}) * P({1, 1});
  WittReport r = witt_invariants(realize(LaurentPoly(tp1sq * P({-5, 11, -5})), -1));
  CHECK_FALSE(r.epsilon_convention_note.empty());
  REQUIRE(r.factors.size() == 2);
  for (const auto& f : r.factors) {
    if (f.factor.is_t_plus_1) {
      CHECK(f.trivial_by_convention);
      CHECK(f.e_mod2 == 0);
    } else {
      CHECK(f.e_mod2 == 1);
    }
  }
  CHECK(r.jumps.empty());
}

TEST_CASE("environment defaults") {
  CHECK(default_r_max() >= 1);
  CHECK(default_padic_depth() >= 1);
}
