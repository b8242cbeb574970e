#include <cstdlib>

#include "concordia/error.hpp"
#include "concordia/factor.hpp"
#include "concordia/numtheory.hpp"
#include "concordia/witt.hpp"

namespace concordia {

std::string to_string(StableCertificate::Kind k) {
  switch (k) {
    case StableCertificate::Kind::StablyIrreducible: return "StablyIrreducible";
    case StableCertificate::Kind::TriviallySplit: return "TriviallySplit";
    case StableCertificate::Kind::Undetermined: return "Undetermined";
    case StableCertificate::Kind::CircleRoots: return "CircleRoots";
  }
  return "?";
}

std::string to_string(OrderClassification::Verdict v) {
  using V = OrderClassification::Verdict;
  switch (v) {
    case V::Infinite: return "Infinite";
    case V::Trivial: return "Trivial";
    case V::Order2: return "Order2";
    case V::Order4: return "Order4";
    case V::TorsionUnknown: return "TorsionUnknown";
    case V::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

long env_positive(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end || x < 1) throw InvalidArgument(std::string(name) + " must be a positive integer, got '" + v + "'");
  return x;
}

// Some irreducible factor of f(t^r) is reciprocal.
bool has_reciprocal_factor(const RatPoly& f, long r) {
  for (const auto& [g, m] : factor_poly(f.compose_power(r)).factors)
    if (is_reciprocal(g)) return true;
  return false;
}

bool has_circle_roots(const RatPoly& f) {
  if (f.degree() == 1) return f == RatPoly::t() - RatPoly(1) || f == RatPoly::t() + RatPoly(1);
  if (f.degree() % 2 || f.reversed() != f) return false;
  return !isolate_real_roots(trace_polynomial(f), -2, 2).empty();
}

std::optional<StableCertificate> stable_family(const RatPoly& f) {
  auto ap = quadratic_family_params(f);
  if (!ap) return std::nullopt;
  if (!stable_irreducible_family(ap->first, ap->second).holds) return std::nullopt;
  StableCertificate c;
  c.kind = StableCertificate::Kind::StablyIrreducible;
  c.a = ap->first;
  c.p = ap->second;
  c.factor = f;
  return c;
}

std::vector<RatPoly> reciprocal_factors(const RatPoly& f) {
  std::vector<RatPoly> out;
  for (const auto& [g, m] : factor_poly(f).factors)
    if (is_reciprocal(g)) out.push_back(g);
  return out;
}

// Delta with the factors t - 1 and t + 1 removed (trivial by convention when eps = -1).
RatPoly strip_plus_minus_one(const RatPoly& f) {
  RatPoly g = f;
  for (const RatPoly& l : {RatPoly::t() - RatPoly(1), RatPoly::t() + RatPoly(1)})
    for (unsigned m = multiplicity_in(g, l); m; --m) g = g.exact_div(l);
  return g;
}

}  // namespace

long default_r_max() { return env_positive("CONCORDIA_RMAX", 12); }
unsigned default_padic_depth() { return static_cast<unsigned>(env_positive("CONCORDIA_PADIC_DEPTH", 8)); }

std::optional<std::pair<Integer, Integer>> quadratic_family_params(const RatPoly& f) {
  if (f.degree() != 2) return std::nullopt;
  RatPoly g = f.primitive();
  Integer a = g.coeff(2).get_num();
  if (g.coeff(0) != g.coeff(2)) return std::nullopt;
  Integer p = -g.coeff(1).get_num() - 2 * a;
  return std::make_pair(a, p);
}

StableCertificate stable_certificate(const LaurentPoly& delta, long r_max) {
  if (delta.is_zero()) throw DomainError("stably_nonreciprocal_search: zero polynomial");
  if (r_max < 1) throw InvalidArgument("r_max must be positive");
  StableCertificate c;
  std::vector<RatPoly> rec = reciprocal_factors(delta.core());
  if (rec.empty()) {
    c.kind = StableCertificate::Kind::TriviallySplit;
    c.r = 1;
    return c;
  }
  // Roots of unit length keep a reciprocal factor at every level; so does a
  // stably irreducible reciprocal factor. Neither can be searched away.
  for (const auto& f : rec) {
    if (has_circle_roots(f)) {
      c.kind = StableCertificate::Kind::CircleRoots;
      c.factor = f;
      return c;
    }
    if (auto s = stable_family(f)) return *s;
  }
  // A non-reciprocal factor never produces reciprocal factors after t -> t^r,
  // so only the reciprocal ones are refactored.
  for (long r = 2; r <= r_max; ++r) {
    const RatPoly* blocking = nullptr;
    for (const auto& f : rec)
      if (has_reciprocal_factor(f, r)) {
        blocking = &f;
        break;
      }
    if (!blocking) {
      c.kind = StableCertificate::Kind::TriviallySplit;
      c.r = r;
      return c;
    }
    c.factor = *blocking;
  }
  c.kind = StableCertificate::Kind::Undetermined;
  c.r = r_max;
  if (r_max == 1) c.factor = rec.front();
  return c;
}

std::optional<long> stably_nonreciprocal_search(const LaurentPoly& delta, long r_max) {
  StableCertificate c = stable_certificate(delta, r_max);
  if (c.kind == StableCertificate::Kind::TriviallySplit) return c.r;
  return std::nullopt;
}

std::optional<std::pair<SeifertMatrix, long>> decable(const SeifertMatrix& S) {
  const size_t n = S.dim();
  for (size_t r = n; r >= 2; --r) {
    if (n % r) continue;
    const size_t m = n / r;
    SeifertMatrix B{S.A.block(0, 0, m, m), S.epsilon, S.complexity % static_cast<long>(r) ? S.complexity : S.complexity / static_cast<long>(r)};
    if (cable(B, static_cast<long>(r)).A == S.A) return std::make_pair(B, static_cast<long>(r));
  }
  return std::nullopt;
}

namespace {

using Verdict = OrderClassification::Verdict;

// Order-2 / order-4 families: Delta = lambda for eps = +1, (t+1)^2 lambda for eps = -1.
std::optional<std::pair<Integer, Integer>> family_of(const SeifertMatrix& B) {
  RatPoly d = alexander(B).core();
  if (B.epsilon == -1) {
    const RatPoly tp1 = RatPoly::t() + RatPoly(1);
    if (multiplicity_in(d, tp1) != 2) return std::nullopt;
    d = d.exact_div(tp1 * tp1);
  }
  return quadratic_family_params(d);
}

bool try_families(const SeifertMatrix& B, unsigned depth, OrderClassification& out) {
  auto ap = family_of(B);
  if (!ap) return false;
  const auto& [a, p] = *ap;
  if (p == 1 && a > 1 && is_prime(a) && mod_floor(a, 4) == 1) {
    Order2Report rep = order2_certificate(a);
    if (rep.discriminant_vanishes) {
      out.verdict = Verdict::Order2;
      out.a = a;
      out.p = p;
      out.note = "order-2 family, a = " + to_string(a) + "; discriminant of 2A vanishes over Q(sqrt(" + to_string(rep.m) + "))";
      return true;
    }
  }
  if (p > 1 && a > 1 && is_prime(a) && is_prime(p) && a != p && mod_floor(p, 4) == 3) {
    try {
      TowerReport rep = order4_tower(a, p, depth);
      if (rep.nontrivial_discriminant) {
        out.verdict = Verdict::Order4;
        out.a = a;
        out.p = p;
        out.depth = depth;
        out.note = "order-4 family (a, p) = (" + to_string(a) + ", " + to_string(p) + "); tower verified to depth " +
                   std::to_string(depth);
        return true;
      }
    } catch (const DomainError&) {
      // hypotheses of the order-4 family fail; fall through
    }
  }
  return false;
}

}  // namespace

OrderClassification order_classify(const SeifertMatrix& S, long r_max, unsigned tower_depth) {
  if (r_max < 1) throw InvalidArgument("r_max must be positive");
  OrderClassification out;
  if (S.dim() == 0) {
    out.verdict = Verdict::Trivial;
    out.r = 1;
    out.stable.kind = StableCertificate::Kind::TriviallySplit;
    out.stable.r = 1;
    return out;
  }
  for (const auto& j : signature_jumps(S))
    if (j.jump != 0) {
      out.verdict = Verdict::Infinite;
      out.witness_jump = j;
      return out;
    }

  RatPoly delta = alexander(S).core();
  if (S.epsilon == -1) delta = strip_plus_minus_one(delta);
  out.stable = stable_certificate(LaurentPoly(delta), r_max);
  if (out.stable.kind == StableCertificate::Kind::TriviallySplit) {
    out.verdict = Verdict::Trivial;
    out.r = out.stable.r;
    return out;
  }

  SeifertMatrix B = S;
  while (auto d = decable(B)) {
    B = d->first;
    out.decabled *= d->second;
  }
  if (try_families(B, tower_depth, out)) return out;

  const RatPoly tp1 = RatPoly::t() + RatPoly(1);
  for (const auto& [f, m] : factor_poly(delta).factors) {
    if (m % 2 == 0 || !is_reciprocal(f) || f == tp1 || has_circle_roots(f)) continue;
    bool certified = stable_family(f).has_value();
    bool stays = certified;
    if (!certified) {
      stays = true;
      for (long r = 2; r <= r_max && stays; ++r) stays = has_reciprocal_factor(f, r);
    }
    if (!stays) continue;
    out.verdict = Verdict::TorsionUnknown;
    out.witness_factor = f;
    out.note = certified ? "odd exponent on a stably irreducible reciprocal factor; order 2 or 4"
                         : "odd exponent on a factor that stays reciprocal up to r = " + std::to_string(r_max);
    return out;
  }
  out.verdict = Verdict::Unknown;
  return out;
}

WittReport witt_invariants(const SeifertMatrix& S) {
  WittReport rep;
  rep.epsilon = S.epsilon;
  if (S.dim() == 0) {
    rep.alexander = LaurentPoly(1);
    return rep;
  }
  rep.alexander = alexander(S);
  for (auto& f : reciprocal_split(rep.alexander)) {
    FactorInvariants fi;
    fi.trivial_by_convention = S.epsilon == -1 && (f.is_t_minus_1 || f.is_t_plus_1);
    fi.e_mod2 = fi.trivial_by_convention ? 0 : static_cast<int>(f.multiplicity % 2);
    fi.factor = std::move(f);
    rep.factors.push_back(std::move(fi));
  }
  rep.jumps = signature_jumps(S);
  if (S.epsilon == -1) rep.epsilon_convention_note = "eps = -1: invariants at z = 1 and z = -1 are trivial by convention";
  return rep;
}

}  // namespace concordia
