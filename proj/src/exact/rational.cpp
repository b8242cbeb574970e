#include "concordia/rational.hpp"

#include <algorithm>
#include <set>

#include "concordia/error.hpp"

namespace concordia {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("malformed rational: '" + std::string(s) + "'");
  Integer z;
  z.set_str(std::string(digits), 10);
  if (!s.empty() && s.front() == '-') z = -z;
  return z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  Integer den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }
int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

bool is_square_rat(const Rational& q) {
  if (q < 0) return false;
  if (q == 0) return true;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational sqrt_rat(const Rational& q) {
  if (!is_square_rat(q)) throw DomainError("sqrt_rat: " + to_string(q) + " is not a rational square");
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  return make_rational(n, d);
}

long valuation(const Integer& z, const Integer& p) {
  if (z == 0) throw DomainError("valuation of zero");
  long v = 0;
  Integer t = z;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw DomainError("valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Integer rational_mod(const Rational& q, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("denominator of " + to_string(q) + " is not invertible mod " + to_string(m));
  return mod_floor(q.get_num() * inv, m);
}

Integer pow_int(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow_rat(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow_rat(Rational(1) / base, -exp);
  }
  Integer n = pow_int(base.get_num(), static_cast<unsigned long>(exp));
  Integer d = pow_int(base.get_den(), static_cast<unsigned long>(exp));
  return make_rational(n, d);
}

std::vector<std::pair<Integer, unsigned long>> factor_integer(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw DomainError("factor_integer: zero");
  std::vector<std::pair<Integer, unsigned long>> out;
  auto take = [&](const Integer& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(Integer(2));
  take(Integer(3));
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= n; p += 6) {
    take(p);
    Integer q = p + 2;
    take(q);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> prime_support(const std::vector<Rational>& values) {
  std::set<Integer> primes;
  for (const auto& v : values) {
    if (v == 0) continue;
    for (const auto& [p, e] : factor_integer(v.get_num())) primes.insert(p);
    for (const auto& [p, e] : factor_integer(v.get_den())) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("squarefree_part: zero");
  Integer d = 1;
  for (const auto& [p, e] : factor_integer(n))
    if (e % 2 == 1) d *= p;
  return n < 0 ? Integer(-d) : d;
}

}  // namespace concordia
