#include "concordia/error.hpp"
#include "concordia/numtheory.hpp"

namespace concordia {

Integer PadicInt::modulus() const { return pow_int(p, precision); }

PadicInt padic_sqrt(const Integer& u, const Integer& p, unsigned precision, const Integer& branch_residue) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("padic_sqrt needs an odd prime, got " + to_string(p));
  if (precision < 1) throw InvalidArgument("padic_sqrt precision must be >= 1");
  if (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) throw DomainError("padic_sqrt: p divides " + to_string(u));
  if (legendre(u, p) != 1) throw DomainError("padic_sqrt: " + to_string(u) + " is not a residue mod " + to_string(p));
  Integer x = mod_floor(branch_residue, p);
  if (mod_floor(x * x - u, p) != 0)
    throw DomainError("padic_sqrt: branch " + to_string(branch_residue) + " does not square to " + to_string(u) + " mod " + to_string(p));
  // Newton iteration doubles the number of correct digits
  unsigned have = 1;
  while (have < precision) {
    have = std::min(2 * have, precision);
    Integer M = pow_int(p, have);
    Integer inv;
    Integer two_x = mod_floor(2 * x, M);
    mpz_invert(inv.get_mpz_t(), two_x.get_mpz_t(), M.get_mpz_t());
    x = mod_floor(x - (x * x - u) * inv, M);
  }
  return {p, precision, x};
}

StableFamilyCertificate stable_irreducible_family(const Integer& a, const Integer& p) {
  StableFamilyCertificate c;
  auto check = [](const Integer& a, const Integer& p, StableFamilyCertificate& out) {
    out.a_prime = is_prime(a);
    if (!out.a_prime) {
      out.reason = to_string(a) + " is not prime";
      return false;
    }
    out.p_nonzero_mod_a = mod_floor(p, a) != 0;
    Integer a2 = a * a;
    Integer r = mod_floor(p + 2 * a, a2);  // p = -2a +- 1 mod a^2  <=>  p + 2a = +-1
    out.p_avoids_minus_2a_pm_1 = (r != 1 && r != a2 - 1);
    if (!out.p_nonzero_mod_a) out.reason = "p = 0 mod a";
    else if (!out.p_avoids_minus_2a_pm_1) out.reason = "p = -2a +- 1 mod a^2";
    return out.p_nonzero_mod_a && out.p_avoids_minus_2a_pm_1;
  };
  c.holds = check(a, p, c);
  StableFamilyCertificate mirror;
  c.mirrored_holds = check(a, -4 * a - p, mirror);
  return c;
}

TowerReport order4_tower(const Integer& a, const Integer& p, unsigned depth, unsigned precision) {
  if (precision < 2) throw InvalidArgument("order4_tower needs precision >= 2");
  if (!is_prime(a) || !is_prime(p)) throw DomainError("order4_tower: a and p must be primes");
  if (a == p) throw DomainError("order4_tower: a = p");
  if (mod_floor(p, 4) != 3) throw DomainError("order4_tower: p must be 3 mod 4");
  if (mod_floor(p + 2 * a + 1, a * a) == 0) throw DomainError("order4_tower: p = -(2a+1) mod a^2");
  StableFamilyCertificate fam = stable_irreducible_family(a, p);
  if (!fam.holds) throw DomainError("order4_tower: stable irreducibility hypothesis fails (" + fam.reason + ")");

  TowerReport rep{a, p, depth, precision, {}, false, "Failed"};
  const Integer M = pow_int(p, precision);
  const Integer p2 = p * p;
  const Integer four_a2 = 4 * a * a;
  Integer inv4;
  mpz_invert(inv4.get_mpz_t(), Integer(4).get_mpz_t(), p2.get_mpz_t());

  std::optional<Integer> m_exact = (2 * a + p) * (2 * a + p);
  Integer m_res = mod_floor(*m_exact, M);
  Integer scale = mod_floor(Integer(4), p2);  // 4^(1-i) mod p^2, starting at i = 0
  bool all_ok = true;
  for (unsigned i = 0; i <= depth; ++i) {
    TowerState st;
    st.level = i;
    st.m = {p, precision, m_res};
    st.m_exact = m_exact;
    Integer sigma_res = mod_floor(m_res - four_a2, M);
    st.sigma = {p, precision, sigma_res};
    if (m_exact) st.sigma_exact = *m_exact - four_a2;
    st.v_sigma = sigma_res == 0 ? static_cast<long>(precision) : valuation(sigma_res, p);
    st.sigma_mod_p2 = mod_floor(sigma_res, p2);
    st.expected_mod_p2 = mod_floor(scale * a * p, p2);
    st.local_symbol = (st.v_sigma < static_cast<long>(precision)) ? hilbert_q(-1, Rational(sigma_res), p) : 0;
    st.sqrt_branch = padic_sqrt(m_res, p, precision, 2 * a);
    st.ok = st.v_sigma == 1 && st.sigma_mod_p2 == st.expected_mod_p2 && st.local_symbol == -1;
    all_ok = all_ok && st.ok;

    // exact square root while the level is still a perfect square
    std::optional<Integer> root;
    if (m_exact && *m_exact >= 0 && mpz_perfect_square_p(m_exact->get_mpz_t())) {
      Integer s = sqrt(*m_exact);
      if (mod_floor(s - 2 * a, p) == 0) root = s;
      else if (mod_floor(-s - 2 * a, p) == 0) root = -s;
    }
    m_res = mod_floor(a * (2 * a + st.sqrt_branch.residue), M);
    m_exact = root ? std::optional<Integer>(a * (2 * a + *root)) : std::nullopt;
    scale = mod_floor(scale * inv4, p2);
    rep.levels.push_back(std::move(st));
  }
  rep.nontrivial_discriminant = all_ok;
  rep.verdict = all_ok ? "NontrivialDiscriminant" : "Failed";
  return rep;
}

Order2Report order2_certificate(const Integer& a) {
  if (!is_prime(a)) throw DomainError("order2_certificate: " + to_string(a) + " is not prime");
  if (mod_floor(a, 4) != 1) throw DomainError("order2_certificate: a must be 1 mod 4");
  Order2Report rep;
  rep.a = a;
  rep.m = squarefree_part(a * (4 * a + 1));
  QuadField K(rep.m);
  const QuadElt minus_one{-1, 0}, aa{Rational(a), 0};

  // Case 1: K is real, a > 0 in both embeddings
  rep.places.push_back({"real#1", 1, "a > 0"});
  rep.places.push_back({"real#2", 1, "a > 0"});
  // Case 2: the Q_2 reduction
  int s2 = hilbert_q(-1, Rational(a), Integer(2));
  rep.places.push_back({"2-adic", s2, "(-1, a)_2 over Q_2"});
  // Case 3: odd primes with v_P(a) != 0 lie over a
  bool case3 = true;
  for (const auto& P : quad_prime_data(K, a)) {
    long v = quad_valuation(K, aa, P);
    int s = hilbert_quadfield_odd(K, minus_one, aa, P);
    if (P.type == SplitType::Ramified) rep.ramified_valuation = v;
    rep.places.push_back({P.to_string(), s, "v_P(a)=" + std::to_string(v)});
    case3 = case3 && (v % 2 == 0) && s == 1;
  }
  rep.norm_test = minus_one_norm_test(K, a);
  rep.discriminant_vanishes = s2 == 1 && case3 && rep.norm_test.verdict == NormVerdict::Norm;
  rep.verdict = rep.discriminant_vanishes ? "DiscriminantVanishes" : "Failed";
  return rep;
}

}  // namespace concordia
