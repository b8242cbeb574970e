#include "concordia/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "concordia/error.hpp"

namespace concordia {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---- arithmetic in F_p[x], p < 2^62, lowest degree first ----

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

ModPoly sub(const Fp& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mul(const Fp& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  // accumulate in 128 bits and reduce once per coefficient
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<u128>(a[i]) * b[j];
      if (acc[i + j] >> 126) acc[i + j] %= F.p;
    }
  }
  ModPoly r(acc.size());
  for (size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % F.p);
  trim(r);
  return r;
}

// Remainder and optional quotient of a by nonzero b.
ModPoly divmod(const Fp& F, ModPoly a, const ModPoly& b, ModPoly* quo = nullptr) {
  const long db = deg(b);
  if (deg(a) < db) {
    if (quo) quo->clear();
    return a;
  }
  const u64 il = F.inv(b.back());
  ModPoly q(static_cast<size_t>(deg(a) - db + 1), 0);
  for (long k = deg(a) - db; k >= 0; --k) {
    u64 c = F.mul(a[static_cast<size_t>(k + db)], il);
    q[static_cast<size_t>(k)] = c;
    if (!c) continue;
    for (long j = 0; j <= db; ++j)
      a[static_cast<size_t>(k + j)] = F.sub(a[static_cast<size_t>(k + j)], F.mul(c, b[static_cast<size_t>(j)]));
  }
  trim(a);
  trim(q);
  if (quo) *quo = std::move(q);
  return a;
}

ModPoly make_monic(const Fp& F, ModPoly a) {
  if (a.empty()) return a;
  u64 il = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, il);
  return a;
}

ModPoly gcd(const Fp& F, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = divmod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

ModPoly derivative(const Fp& F, const ModPoly& a) {
  ModPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
  trim(r);
  return r;
}

// base^e mod m, with e an arbitrary-precision exponent.
ModPoly powmod(const Fp& F, ModPoly base, const Integer& e, const ModPoly& m) {
  ModPoly r{1};
  base = divmod(F, std::move(base), m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = divmod(F, mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(F, mul(F, r, base), m);
  }
  return r;
}

// s*a + t*b = 1 for coprime a, b.
void xgcd(const Fp& F, const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q;
    ModPoly r2 = divmod(F, r0, r1, &q);
    ModPoly s2 = sub(F, s0, mul(F, q, s1));
    ModPoly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("xgcd: inputs not coprime");
  u64 il = F.inv(r0[0]);
  s = s0;
  t = t0;
  for (auto& c : s) c = F.mul(c, il);
  for (auto& c : t) c = F.mul(c, il);
}

ModPoly reduce(const std::vector<Integer>& f, u64 p) {
  ModPoly r(f.size());
  Integer P(static_cast<unsigned long>(p));
  for (size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], P).get_ui();
  trim(r);
  return r;
}

struct DdfPart {
  ModPoly g;
  long d;  // every irreducible factor of g has degree d
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<DdfPart> ddf(const Fp& F, ModPoly f) {
  std::vector<DdfPart> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer P(static_cast<unsigned long>(F.p));
  for (long d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(F, h, P, f);
    ModPoly g = gcd(F, f, sub(F, h, x));
    if (deg(g) > 0) {
      out.push_back({g, d});
      ModPoly q;
      divmod(F, f, g, &q);
      f = std::move(q);
      h = divmod(F, h, f);
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

// Cantor-Zassenhaus equal-degree splitting, p odd.
void edf(const Fp& F, const ModPoly& g, long d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  while (true) {
    ModPoly a(static_cast<size_t>(deg(g)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = powmod(F, a, e, g);
    b = sub(F, b, ModPoly{1});
    ModPoly c = gcd(F, g, b);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      ModPoly q;
      divmod(F, g, c, &q);
      edf(F, c, d, rng, out);
      edf(F, make_monic(F, q), d, rng, out);
      return;
    }
  }
}

// ---- arithmetic in (Z/M)[x] with nonnegative residues ----

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& M) {
  for (auto& c : a) c = mod_floor(c, M);
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& M) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zmod(std::move(r), M);
}

ZPoly zadd(ZPoly a, const ZPoly& b, const Integer& M) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zmod(std::move(a), M);
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Integer& M) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zmod(std::move(a), M);
}

// Division by a monic polynomial modulo M.
ZPoly zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& M, ZPoly* quo) {
  const long db = static_cast<long>(b.size()) - 1;
  const long da = static_cast<long>(a.size()) - 1;
  ZPoly q;
  if (da >= db) {
    q.assign(static_cast<size_t>(da - db + 1), Integer(0));
    for (long k = da - db; k >= 0; --k) {
      Integer c = mod_floor(a[static_cast<size_t>(k + db)], M);
      q[static_cast<size_t>(k)] = c;
      if (c == 0) continue;
      for (long j = 0; j <= db; ++j) a[static_cast<size_t>(k + j)] -= c * b[static_cast<size_t>(j)];
    }
  }
  a = zmod(std::move(a), M);
  if (quo) *quo = zmod(std::move(q), M);
  return a;
}

ZPoly lift_modpoly(const ModPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

struct LiftState {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic;
// returns the same data modulo M, where m | M | m^2.
LiftState hensel_step(const ZPoly& f, const LiftState& in, const Integer& M) {
  const ZPoly& g = in.g;
  const ZPoly& h = in.h;
  const ZPoly& s = in.s;
  const ZPoly& t = in.t;
  ZPoly e = zsub(zmod(f, M), zmul(g, h, M), M);
  ZPoly q;
  ZPoly r = zdivmod_monic(zmul(s, e, M), h, M, &q);
  LiftState out;
  out.g = zadd(zadd(g, zmul(t, e, M), M), zmul(q, g, M), M);
  out.h = zadd(h, r, M);
  ZPoly b = zsub(zadd(zmul(s, out.g, M), zmul(t, out.h, M), M), ZPoly{Integer(1)}, M);
  ZPoly c;
  ZPoly d = zdivmod_monic(zmul(s, b, M), out.h, M, &c);
  out.s = zsub(s, d, M);
  out.t = zsub(zsub(t, zmul(t, b, M), M), zmul(c, out.g, M), M);
  return out;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("non-invertible lead");
  return r;
}

// f = lc(f) * prod(u) mod p with u monic; returns monic lifts modulo p^k.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<ModPoly>& u, const Fp& F, unsigned k) {
  const Integer P(static_cast<unsigned long>(F.p));
  const Integer Pk = pow_int(P, k);
  if (u.size() == 1) {
    Integer il = inverse_mod(f.back(), Pk);
    ZPoly m = f;
    for (auto& c : m) c *= il;
    return {zmod(std::move(m), Pk)};
  }
  const size_t half = u.size() / 2;
  ModPoly g0 = reduce(ZPoly{f.back()}, F.p);
  for (size_t i = 0; i < half; ++i) g0 = mul(F, g0, u[i]);
  ModPoly h0{1};
  for (size_t i = half; i < u.size(); ++i) h0 = mul(F, h0, u[i]);
  ModPoly s0, t0;
  xgcd(F, g0, h0, s0, t0);
  LiftState st{lift_modpoly(g0), lift_modpoly(h0), lift_modpoly(s0), lift_modpoly(t0)};
  unsigned have = 1;
  while (have < k) {
    unsigned next = std::min(2 * have, k);
    st = hensel_step(f, st, pow_int(P, next));
    have = next;
  }
  std::vector<ModPoly> left(u.begin(), u.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(u.begin() + static_cast<long>(half), u.end());
  std::vector<ZPoly> out = multi_lift(st.g, left, F, k);
  std::vector<ZPoly> rest = multi_lift(st.h, right, F, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// ---- driver ----

std::vector<u64> candidate_primes() {
  std::vector<u64> out;
  for (u64 n = 3; out.size() < 200; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// Subset sums of the factor-degree multiset described by a DDF.
std::vector<bool> degree_sums(const std::vector<DdfPart>& parts, long n) {
  std::vector<bool> ok(static_cast<size_t>(n) + 1, false);
  ok[0] = true;
  for (const auto& part : parts) {
    long count = deg(part.g) / part.d;
    for (long c = 0; c < count; ++c)
      for (long s = n; s >= part.d; --s)
        if (ok[static_cast<size_t>(s - part.d)]) ok[static_cast<size_t>(s)] = true;
  }
  return ok;
}

Integer coeff_bound(const ZPoly& f) {
  // |lc| * 2^n * ||f||_2 bounds every coefficient of lc(f)/lc(g) * g for g | f.
  Integer norm2sq = 0;
  for (const auto& c : f) norm2sq += c * c;
  Integer norm2 = sqrt(norm2sq) + 1;
  const unsigned long n = f.size() - 1;
  return abs(f.back()) * pow_int(Integer(2), n) * norm2;
}

Integer symmetric(const Integer& a, const Integer& M) { return mod_symmetric(a, M); }

// Exact division test in Z[x]; returns true and sets q when d | a.
bool zdivides(const ZPoly& a, const ZPoly& d, ZPoly& q) {
  const long da = static_cast<long>(a.size()) - 1;
  const long dd = static_cast<long>(d.size()) - 1;
  if (dd > da) return false;
  ZPoly rem = a;
  q.assign(static_cast<size_t>(da - dd + 1), Integer(0));
  for (long k = da - dd; k >= 0; --k) {
    const Integer& top = rem[static_cast<size_t>(k + dd)];
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    q[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= c * d[static_cast<size_t>(j)];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  ztrim(q);
  return true;
}

ZPoly zprimitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

struct PrimeChoice {
  Fp F{0};
  std::vector<DdfPart> parts;
  size_t factor_count = 0;
};

std::vector<RatPoly> zassenhaus(const ZPoly& f0) {
  const long n = static_cast<long>(f0.size()) - 1;
  if (n == 1) return {from_integer_coeffs(f0)};

  // Screen primes by distinct-degree factorization. Intersecting the possible
  // factor-degree sets over several primes prunes recombination and often
  // proves irreducibility outright.
  std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
  PrimeChoice best;
  int screened = 0;
  const int wanted = n > 8 ? 24 : 6;
  for (u64 p : candidate_primes()) {
    if (screened >= wanted) break;
    Fp F{p};
    ModPoly fp = reduce(f0, p);
    if (deg(fp) != n) continue;
    ModPoly fm = make_monic(F, fp);
    if (deg(gcd(F, fm, derivative(F, fm))) != 0) continue;
    ++screened;
    auto parts = ddf(F, fm);
    size_t count = 0;
    for (const auto& part : parts) count += static_cast<size_t>(deg(part.g) / part.d);
    auto sums = degree_sums(parts, n);
    bool nontrivial = false;
    for (long s = 0; s <= n; ++s) {
      allowed[static_cast<size_t>(s)] = allowed[static_cast<size_t>(s)] && sums[static_cast<size_t>(s)];
      if (s > 0 && s < n && allowed[static_cast<size_t>(s)]) nontrivial = true;
    }
    if (!nontrivial || count == 1) return {from_integer_coeffs(f0)};
    if (best.F.p == 0 || count < best.factor_count) best = {F, std::move(parts), count};
  }
  if (best.F.p == 0) throw DomainError("factor: no usable prime found");

  const Fp& F = best.F;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ F.p);
  std::vector<ModPoly> u;
  for (const auto& part : best.parts) edf(F, part.g, part.d, rng, u);

  const Integer P(static_cast<unsigned long>(F.p));
  Integer bound = 2 * coeff_bound(f0) + 1;
  unsigned k = 1;
  Integer Pk = P;
  while (Pk <= bound) {
    Pk *= P;
    ++k;
  }
  std::vector<ZPoly> lifted = multi_lift(f0, u, F, k);

  std::vector<RatPoly> out;
  ZPoly f = f0;
  std::vector<size_t> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  size_t s = 1;
  while (2 * s <= live.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      long dsum = 0;
      for (size_t i : idx) dsum += static_cast<long>(lifted[live[i]].size()) - 1;
      if (allowed[static_cast<size_t>(dsum)]) {
        ZPoly g{f.back()};
        for (size_t i : idx) g = zmul(g, lifted[live[i]], Pk);
        for (auto& c : g) c = symmetric(c, Pk);
        ZPoly cand = zprimitive(g);
        ZPoly q;
        if (zdivides(f, cand, q)) {
          out.push_back(from_integer_coeffs(cand));
          f = zprimitive(q);
          std::vector<size_t> rest;
          for (size_t i = 0, j = 0; i < live.size(); ++i) {
            if (j < s && idx[j] == i) {
              ++j;
              continue;
            }
            rest.push_back(live[i]);
          }
          live = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      long pos = static_cast<long>(s) - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == live.size() - s + static_cast<size_t>(pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (size_t i = static_cast<size_t>(pos) + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(from_integer_coeffs(f));
  return out;
}

}  // namespace

RatPoly Factorization::expand() const {
  RatPoly r(unit);
  for (const auto& [g, m] : factors) r *= g.pow(m);
  return r;
}

std::vector<RatPoly> factor_squarefree(const RatPoly& f) {
  if (f.degree() < 1) throw DomainError("factor_squarefree: constant input");
  std::vector<RatPoly> out;
  RatPoly g = f.primitive();
  // peel off powers of t so the modular screen sees a nonzero constant term
  if (g.coeff(0) == 0) {
    out.push_back(RatPoly::t());
    g = g.shift_down(1);
    if (g.degree() == 0) return out;
  }
  for (auto& h : zassenhaus(g.integer_coeffs())) out.push_back(h.primitive());
  return out;
}

Factorization factor_poly(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("factor_poly: zero polynomial");
  Factorization out;
  for (const auto& [s, m] : squarefree_decomposition(f))
    for (auto& g : factor_squarefree(s)) out.factors.emplace_back(g, m);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (size_t i = ca.size(); i-- > 0;)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.second < b.second;
  });
  RatPoly prod(1);
  for (const auto& [g, m] : out.factors) prod *= g.pow(m);
  out.unit = f.lead() / prod.lead();
  return out;
}

bool is_irreducible(const RatPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto sf = squarefree_decomposition(f);
  if (sf.size() != 1 || sf[0].second != 1) return false;
  return factor_squarefree(f).size() == 1;
}

}  // namespace concordia
