#include "registry.hpp"

#include <regex>

#include "concordia/error.hpp"

namespace concordia::api {

namespace {

json coeffs(const RatPoly& f) {
  json c = json::array();
  for (const auto& q : f.coeffs()) c.push_back(to_json(q));
  return c;
}

RatPoly quad(const Rational& c0, const Rational& c1, const Rational& c2) { return RatPoly(std::vector<Rational>{c0, c1, c2}); }

const RatPoly& t_plus_1_sq() {
  static const RatPoly f = (RatPoly::t() + RatPoly(1)) * (RatPoly::t() + RatPoly(1));
  return f;
}

ExampleEntry entry(std::string key, SeifertMatrix S, std::string description, const RatPoly& delta, const char* verdict,
                   long r = 0) {
  json e{{"alexander", coeffs(delta)}, {"verdict", verdict}};
  if (r) e["r"] = r;
  return {std::move(key), std::move(S), std::move(description), e};
}

void require(bool ok, const std::string& key, const std::string& why) {
  if (!ok) throw InvalidArgument("example " + key + ": " + why);
}

bool prime_1_mod_4(const Integer& a) { return a > 1 && is_prime(a) && mod_floor(a, 4) == 1; }

void require_order4(const Integer& a, const Integer& p, const std::string& key) {
  require(a > 1 && p > 1 && is_prime(a) && is_prime(p) && a != p, key, "a and p must be distinct primes");
  require(mod_floor(p, 4) == 3, key, "p must be 3 mod 4");
  require(mod_floor(p + 2 * a + 1, a * a) != 0, key, "p must avoid -(2a + 1) mod a^2");
  require(stable_irreducible_family(a, p).holds, key, "lambda(t^r) is not certified irreducible");
}

ExampleEntry order2(const Integer& a) {
  const std::string key = "order2-a" + to_string(a);
  require(prime_1_mod_4(a), key, "a must be a prime congruent to 1 mod 4");
  Rational A(a);
  return entry(key, {MatQ{{-A, 1}, {0, 1}}, 1, 1}, "order-2 family [[-a,1],[0,1]]: 2-torsion in the limit group",
               quad(-A, 2 * A + 1, -A), "Order2");
}

ExampleEntry order4(const Integer& a, const Integer& p) {
  const std::string key = "order4-a" + to_string(a) + "-p" + to_string(p);
  require_order4(a, p, key);
  Rational q = Rational(a) / Rational(p);
  return entry(key, {MatQ{{-q, 1}, {0, 1}}, 1, 1}, "order-4 family [[-a/p,1],[0,1]]: 4-torsion in the limit group",
               quad(-q, 2 * q + 1, -q), "Order4");
}

ExampleEntry kernel(const Integer& a) {
  const std::string key = "kernel-a" + to_string(a);
  require(a >= 1, key, "a must be positive");
  Rational A(a);
  return entry(key, {MatQ{{A, 1}, {0, -A}}, 1, 1},
               "integral matrix [[a,1],[0,-a]] of order 2 whose image in the limit group vanishes",
               quad(-A * A, 2 * A * A + 1, -A * A), "Trivial", 2);
}

ExampleEntry eps_minus(const RatPoly& lambda, const std::string& key, const char* verdict, const std::string& what) {
  RatPoly delta = t_plus_1_sq() * lambda;
  return entry(key, realize(LaurentPoly(delta), -1), what, delta, verdict);
}

ExampleEntry eps_minus_order2(const Integer& a) {
  const std::string key = "eps-minus-4x4-a" + to_string(a);
  require(prime_1_mod_4(a), key, "a must be a prime congruent to 1 mod 4");
  Rational A(a);
  return eps_minus(quad(-A, 2 * A + 1, -A), key, "Order2",
                   "4x4 eps = -1 matrix with Alexander polynomial (t+1)^2 (-a t^2 + (2a+1) t - a)");
}

ExampleEntry eps_minus_order4(const Integer& a, const Integer& p) {
  const std::string key = "eps-minus-4x4-a" + to_string(a) + "-p" + to_string(p);
  require_order4(a, p, key);
  Rational q = Rational(a) / Rational(p);
  return eps_minus(quad(-q, 2 * q + 1, -q), key, "Order4",
                   "4x4 eps = -1 matrix with Alexander polynomial (t+1)^2 (-(a/p) t^2 + (2a/p+1) t - a/p)");
}

ExampleEntry pell(const Integer& a) {
  const std::string key = "pell-a" + to_string(a);
  require(a >= 1, key, "a must be positive");
  require(is_square_rat(Rational(5 * (4 * a * a + 1))), key, "5(4a^2 + 1) must be a perfect square");
  Rational A2(a * a);
  RatPoly delta = quad(1, -3, 1) * quad(A2, -(2 * A2 + 1), A2);
  return entry(key, realize(LaurentPoly(delta), -1),
               "eps = -1 matrix with Alexander polynomial (t^2 - 3t + 1)(a^2 t^2 - (2a^2+1) t + a^2), a from x^2 - 5y^2 = -1",
               delta, "Trivial", 2);
}

ExampleEntry fig8() {
  return entry("fig8", {MatQ{{1, 1}, {0, -1}}, 1, 1}, "figure-eight knot; Delta(t^2) splits into non-reciprocal factors",
               quad(-1, 3, -1), "Trivial", 2);
}

ExampleEntry trefoil() {
  return entry("trefoil", {MatQ{{-1, 1}, {0, -1}}, 1, 1}, "trefoil; nonzero signature jumps", quad(1, -1, 1), "Infinite");
}

}  // namespace

std::vector<ExampleEntry> example_registry() {
  std::vector<ExampleEntry> out;
  out.push_back(fig8());
  out.push_back(trefoil());
  for (long a : {5, 13, 17}) out.push_back(order2(a));
  out.push_back(order4(5, 3));
  for (long a : {1, 2, 3}) out.push_back(kernel(a));
  for (long a : {1, 19}) out.push_back(pell(a));
  out.push_back(eps_minus_order2(5));
  out.push_back(eps_minus_order4(5, 3));
  return out;
}

ExampleEntry lookup_example(const std::string& key) {
  static const std::regex one(R"((order2|kernel|pell|eps-minus-4x4)-a([0-9]{1,9}))");
  static const std::regex two(R"((order4|eps-minus-4x4)-a([0-9]{1,9})-p([0-9]{1,9}))");
  std::smatch m;
  if (key == "fig8") return fig8();
  if (key == "trefoil") return trefoil();
  if (std::regex_match(key, m, one)) {
    Integer a = Integer(m[2].str());
    if (m[1] == "order2") return order2(a);
    if (m[1] == "kernel") return kernel(a);
    if (m[1] == "pell") return pell(a);
    return eps_minus_order2(a);
  }
  if (std::regex_match(key, m, two)) {
    Integer a = Integer(m[2].str()), p = Integer(m[3].str());
    return m[1] == "order4" ? order4(a, p) : eps_minus_order4(a, p);
  }
  throw InvalidArgument("unknown example key '" + key + "'; see `examples list`");
}

}  // namespace concordia::api
