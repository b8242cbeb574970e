#include "concordia/poly.hpp"

#include <sstream>

#include "concordia/error.hpp"

namespace concordia {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

RatPoly RatPoly::monomial(const Rational& c, long degree) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

Rational RatPoly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
  const Rational inv_lead = 1 / d.lead();
  const size_t dn = d.c_.size();
  for (size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + dn - 1] * inv_lead;
    quo[k] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < dn; ++j) rem[k + j] -= q * d.c_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw DomainError("inexact polynomial division: " + to_string() + " / " + d.to_string());
  return q;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / lead());
}

RatPoly RatPoly::compose_power(long r) const {
  if (r < 1) throw InvalidArgument("compose_power needs r >= 1");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<size_t>(degree() * r) + 1);
  for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(r)] = c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scale_var(const Rational& c) const {
  std::vector<Rational> v = c_;
  Rational pw = 1;
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(unsigned long e) const {
  RatPoly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

long RatPoly::low_order() const {
  if (is_zero()) throw DomainError("low_order of zero polynomial");
  long k = 0;
  while (c_[static_cast<size_t>(k)] == 0) ++k;
  return k;
}

RatPoly RatPoly::shift_down(long k) const {
  if (k == 0 || is_zero()) return *this;
  if (k < 0) return shift_up(-k);
  for (long i = 0; i < k; ++i)
    if (coeff(i) != 0) throw DomainError("shift_down: t^" + std::to_string(k) + " does not divide " + to_string());
  return RatPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

RatPoly RatPoly::shift_up(long k) const {
  if (k == 0 || is_zero()) return *this;
  if (k < 0) return shift_down(-k);
  std::vector<Rational> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return RatPoly(std::move(v));
}

Rational RatPoly::content() const {
  if (is_zero()) return 0;
  Integer g = 0, l = 1;
  for (const auto& c : c_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r = make_rational(g, l);
  return lead() < 0 ? Rational(-r) : r;
}

RatPoly RatPoly::primitive() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / content());
}

std::vector<Integer> RatPoly::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    if (!is_integer(c)) throw DomainError("non-integral coefficient " + concordia::to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool one = (mag == 1);
    if (k == 0 || !one) os << concordia::to_string(mag);
    if (k > 0) {
      if (!one) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly from_integer_coeffs(const std::vector<Integer>& c) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& z : c) v.emplace_back(z);
  return RatPoly(std::move(v));
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (f.degree() == 0) return out;
  RatPoly fm = f.monic();
  RatPoly fp = fm.derivative();
  RatPoly a = gcd(fm, fp);
  RatPoly b = fm.exact_div(a);
  RatPoly c = fp.exact_div(a);
  RatPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(g, i);
    ++i;
  }
  return out;
}

RatPoly squarefree_part(const RatPoly& f) {
  RatPoly r(1);
  for (const auto& [s, m] : squarefree_decomposition(f)) r *= s;
  return r;
}

}  // namespace concordia
