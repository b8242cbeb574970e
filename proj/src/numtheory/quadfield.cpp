#include <climits>

#include "concordia/error.hpp"
#include "concordia/numtheory.hpp"

namespace concordia {

QuadField::QuadField(const Integer& m_) : m(m_) {
  if (m == 0) throw InvalidArgument("quadratic field with m = 0");
  if (m != 1 && squarefree_part(m) != m) throw InvalidArgument("quadratic field parameter " + to_string(m) + " is not squarefree");
}

QuadElt quad_mul(const QuadField& K, const QuadElt& u, const QuadElt& v) {
  return {u.x * v.x + Rational(K.m) * u.y * v.y, u.x * v.y + u.y * v.x};
}

Rational quad_norm(const QuadField& K, const QuadElt& u) { return u.x * u.x - Rational(K.m) * u.y * u.y; }

QuadElt quad_inv(const QuadField& K, const QuadElt& u) {
  Rational n = quad_norm(K, u);
  if (n == 0) throw DomainError("inverse of zero in quadratic field");
  return {u.x / n, -u.y / n};
}

QuadElt quad_pow(const QuadField& K, QuadElt u, long e) {
  if (e < 0) {
    u = quad_inv(K, u);
    e = -e;
  }
  QuadElt r{1, 0};
  while (e) {
    if (e & 1) r = quad_mul(K, r, u);
    u = quad_mul(K, u, u);
    e >>= 1;
  }
  return r;
}

bool is_square_in(const QuadField& K, const Rational& a) {
  if (is_square_rat(a)) return true;
  return !K.degenerate() && is_square_rat(a / Rational(K.m));
}

std::string to_string(SplitType s) {
  switch (s) {
    case SplitType::Ramified: return "ramified";
    case SplitType::Inert: return "inert";
    case SplitType::Split: return "split";
  }
  return "?";
}

std::string QuadPrime::to_string() const {
  std::string s = "P(" + concordia::to_string(p) + "," + concordia::to_string(type);
  if (type == SplitType::Split) s += ",r=" + concordia::to_string(branch);
  return s + ")";
}

namespace {

// Tonelli-Shanks square root of a quadratic residue modulo an odd prime.
Integer sqrt_mod_prime(const Integer& a0, const Integer& p) {
  Integer a = mod_floor(a0, p);
  if (a == 0) return 0;
  if (legendre(a, p) != 1) throw DomainError(to_string(a0) + " is not a square mod " + to_string(p));
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;
  auto powm = [&](const Integer& b, const Integer& e) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  Integer c = powm(z, q);
  Integer x = powm(a, (q + 1) / 2);
  Integer t = powm(a, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = mod_floor(tt * tt, p);
      ++i;
    }
    Integer b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = mod_floor(b * b, p);
    x = mod_floor(x * b, p);
    c = mod_floor(b * b, p);
    t = mod_floor(t * c, p);
    m = i;
  }
  return x;
}

void require_odd_prime(const Integer& p) {
  if (p == 2) throw DomainError("primes over 2 are not supported");
  if (!is_prime(p)) throw InvalidArgument(to_string(p) + " is not prime");
}

// Residue of a P-unit at a degree-1 prime, via the embedding sqrt(m) -> rho in Z_p.
Integer residue_degree_one(const QuadField& K, const QuadElt& w, const QuadPrime& P) {
  const Integer& p = P.p;
  if (P.type == SplitType::Ramified) {
    // units at a ramified prime have p-integral coordinates; sqrt(m) lies in P
    return rational_mod(w.x, p);
  }
  // clear denominators: w = (X + Y sqrt m) / D with X, Y integers
  Integer D;
  mpz_lcm(D.get_mpz_t(), w.x.get_den_mpz_t(), w.y.get_den_mpz_t());
  Integer X = Rational(w.x * Rational(D)).get_num();
  Integer Y = Rational(w.y * Rational(D)).get_num();
  long k = valuation(D, p);
  PadicInt rho = padic_sqrt(K.m, p, static_cast<unsigned>(k + 1), P.branch);
  Integer pk = pow_int(p, static_cast<unsigned long>(k));
  Integer top = mod_floor(X + Y * rho.residue, rho.modulus());
  if (!mpz_divisible_p(top.get_mpz_t(), pk.get_mpz_t())) throw DomainError("residue of a non-unit requested");
  Integer q = top / pk;
  Integer dprime = D / pk;
  return rational_mod(make_rational(q, dprime), p);
}

// Multiplication in F_p[w]/(w^2 - m).
struct Fp2 {
  Integer p, m;
  std::pair<Integer, Integer> mul(const std::pair<Integer, Integer>& u, const std::pair<Integer, Integer>& v) const {
    return {mod_floor(u.first * v.first + m * u.second * v.second, p),
            mod_floor(u.first * v.second + u.second * v.first, p)};
  }
  std::pair<Integer, Integer> pow(std::pair<Integer, Integer> u, Integer e) const {
    std::pair<Integer, Integer> r{1, 0};
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, u);
      u = mul(u, u);
      e /= 2;
    }
    return r;
  }
};

}  // namespace

std::vector<QuadPrime> quad_prime_data(const QuadField& K, const Integer& p) {
  require_odd_prime(p);
  if (K.degenerate()) throw DomainError("quad_prime_data needs a proper quadratic field");
  if (mpz_divisible_p(K.m.get_mpz_t(), p.get_mpz_t())) return {{p, SplitType::Ramified, 0, 2, 1}};
  if (legendre(K.m, p) == -1) return {{p, SplitType::Inert, 0, 1, 2}};
  Integer r = sqrt_mod_prime(K.m, p);
  Integer r2 = p - r;
  if (r2 < r) std::swap(r, r2);
  return {{p, SplitType::Split, r, 1, 1}, {p, SplitType::Split, r2, 1, 1}};
}

long quad_valuation(const QuadField& K, const QuadElt& x, const QuadPrime& P) {
  if (x.x == 0 && x.y == 0) throw DomainError("valuation of zero");
  const Integer& p = P.p;
  switch (P.type) {
    case SplitType::Ramified:
      return valuation(quad_norm(K, x), p);
    case SplitType::Inert: {
      long v = LONG_MAX;
      if (x.x != 0) v = std::min(v, valuation(x.x, p));
      if (x.y != 0) v = std::min(v, valuation(x.y, p));
      return v;
    }
    case SplitType::Split: {
      if (mod_floor(P.branch * P.branch - K.m, p) != 0) throw DomainError("inconsistent split branch");
      long k = LONG_MAX;
      if (x.x != 0) k = std::min(k, valuation(x.x, p));
      if (x.y != 0) k = std::min(k, valuation(x.y, p));
      Rational scale = pow_rat(Rational(p), -k);
      QuadElt s{x.x * scale, x.y * scale};
      if (rational_mod(s.x + s.y * Rational(P.branch), p) != 0) return k;
      // the conjugate branch is then a unit, so the norm carries the valuation
      return k + valuation(quad_norm(K, s), p);
    }
  }
  return 0;
}

int hilbert_quadfield_odd(const QuadField& K, const QuadElt& a, const QuadElt& b, const QuadPrime& P) {
  if (P.p == 2) throw DomainError("even residue characteristic");
  long va = quad_valuation(K, a, P);
  long vb = quad_valuation(K, b, P);
  QuadElt w = quad_mul(K, quad_pow(K, a, vb), quad_pow(K, b, -va));
  if ((va * vb) % 2 != 0) w = {-w.x, -w.y};
  if (P.f == 1) return legendre(residue_degree_one(K, w, P), P.p);
  // inert: w is a unit with p-integral coordinates
  Fp2 F{P.p, mod_floor(K.m, P.p)};
  std::pair<Integer, Integer> r{rational_mod(w.x, P.p), rational_mod(w.y, P.p)};
  auto res = F.pow(r, (P.p * P.p - 1) / 2);
  if (res.second != 0) throw DomainError("residue power not in F_p");
  if (res.first == 1) return 1;
  if (res.first == P.p - 1) return -1;
  throw DomainError("residue power is not +-1");
}

std::string to_string(NormVerdict v) {
  switch (v) {
    case NormVerdict::Norm: return "Norm";
    case NormVerdict::NotNorm: return "NotNorm";
    case NormVerdict::Unknown: return "Unknown";
  }
  return "?";
}

NormTestResult minus_one_norm_test(const QuadField& K, const Integer& a) {
  if (a == 0) throw DomainError("minus_one_norm_test: a = 0");
  NormTestResult r;
  if (is_square_in(K, Rational(a))) {
    r.places.push_back({"all", 1, "a is a square in K; the extension is trivial"});
    r.verdict = NormVerdict::Norm;
    return r;
  }
  auto fail = [&](const std::string& where) {
    if (!r.witness) r.witness = where;
  };
  // archimedean places: (-1, a) = -1 exactly when a < 0 in the embedding
  int real_places = K.degenerate() ? 1 : (K.m > 0 ? 2 : 0);
  for (int i = 1; i <= real_places; ++i) {
    int s = a < 0 ? -1 : 1;
    r.places.push_back({"real#" + std::to_string(i), s, ""});
    if (s < 0) fail("real#" + std::to_string(i));
  }
  if (r.witness) {
    r.verdict = NormVerdict::NotNorm;
    return r;
  }
  // odd finite places where -1 or a can fail to be a unit
  std::vector<Integer> primes = prime_support({Rational(a), Rational(K.m)});
  for (const auto& p : primes) {
    if (p == 2) continue;
    if (K.degenerate()) {
      int s = hilbert_q(-1, Rational(a), p);
      r.places.push_back({to_string(p), s, ""});
      if (s < 0) fail(to_string(p));
      continue;
    }
    for (const auto& P : quad_prime_data(K, p)) {
      int s = hilbert_quadfield_odd(K, {-1, 0}, {Rational(a), 0}, P);
      r.places.push_back({P.to_string(), s, "v_P(a)=" + std::to_string(quad_valuation(K, {Rational(a), 0}, P))});
      if (s < 0) fail(P.to_string());
    }
  }
  if (r.witness) {
    r.verdict = NormVerdict::NotNorm;
    return r;
  }
  int s2 = hilbert_q(-1, Rational(a), Integer(2));
  if (K.degenerate()) {
    r.places.push_back({"2", s2, ""});
    r.verdict = s2 > 0 ? NormVerdict::Norm : NormVerdict::NotNorm;
    if (s2 < 0) r.witness = "2";
    return r;
  }
  if (s2 > 0) {
    r.places.push_back({"2-adic", 1, "-1 is a norm from Q_2(sqrt a), hence from every completion over 2"});
    r.verdict = NormVerdict::Norm;
  } else {
    r.places.push_back({"2-adic", 0, "Q_2 reduction inconclusive"});
    r.witness = "2-adic";
    r.verdict = NormVerdict::Unknown;
  }
  return r;
}

}  // namespace concordia
