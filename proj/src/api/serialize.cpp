#include "serialize.hpp"

#include <cmath>
#include <cstdio>

#include "concordia/error.hpp"

namespace concordia::api {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("expected an integer or a \"p/q\" string, got " + j.dump());
}

json matrix_to_json(const SeifertMatrix& S) {
  json rows = json::array();
  for (size_t i = 0; i < S.dim(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < S.dim(); ++j) row.push_back(to_json(S.A(i, j)));
    rows.push_back(row);
  }
  return {{"schema", kSchema}, {"epsilon", S.epsilon}, {"complexity", S.complexity}, {"entries", rows}};
}

SeifertMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("matrix document must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema)
    throw InvalidArgument("unsupported schema " + j["schema"].dump());
  if (!j.contains("entries") || !j["entries"].is_array()) throw InvalidArgument("matrix document needs an \"entries\" array");
  int eps = 1;
  if (j.contains("epsilon")) {
    if (!j["epsilon"].is_number_integer()) throw InvalidArgument("epsilon must be 1 or -1");
    eps = j["epsilon"].get<int>();
  }
  long c = 1;
  if (j.contains("complexity")) {
    if (!j["complexity"].is_number_integer()) throw InvalidArgument("complexity must be a positive integer");
    c = j["complexity"].get<long>();
  }
  const json& e = j["entries"];
  const size_t n = e.size();
  MatQ A(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (!e[i].is_array() || e[i].size() != n) throw InvalidArgument("entries must form a square array");
    for (size_t k = 0; k < n; ++k) A(i, k) = rational_from_json(e[i][k]);
  }
  return make_seifert(std::move(A), eps, c);
}

SeifertMatrix matrix_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

json poly_to_json(const LaurentPoly& p) {
  json c = json::array();
  for (const auto& q : p.core().coeffs()) c.push_back(to_json(q));
  return {{"shift", p.shift()}, {"coeffs", c}, {"text", p.to_string()}};
}

json poly_to_json(const RatPoly& p) { return poly_to_json(LaurentPoly(p)); }

LaurentPoly poly_from_json(const json& j) {
  const json* coeffs = &j;
  long shift = 0;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw InvalidArgument("polynomial document needs \"coeffs\"");
    coeffs = &j["coeffs"];
    if (j.contains("shift")) shift = j["shift"].get<long>();
  }
  if (!coeffs->is_array()) throw InvalidArgument("coefficients must be an array, lowest degree first");
  std::vector<Rational> c;
  for (const auto& x : *coeffs) c.push_back(rational_from_json(x));
  return LaurentPoly(RatPoly(c), shift);
}

json to_json(const Factorization& f) {
  json fs = json::array();
  for (const auto& [p, m] : f.factors) fs.push_back({{"poly", p.to_string()}, {"multiplicity", m}});
  return {{"unit", to_json(f.unit)}, {"factors", fs}};
}

json to_json(const ValidityReport& r) {
  json primes = json::array();
  for (const auto& p : r.hasse_mismatch_primes) primes.push_back(to_string(p));
  json j{{"valid", r.valid()},
         {"nonsingular", r.nonsingular},
         {"even_unimodular_congruent", r.even_unimodular_congruent},
         {"signature", r.signature},
         {"signature_mod8", r.signature_mod8},
         {"det_class_ok", r.det_class_ok},
         {"hasse_mismatch_primes", primes}};
  if (r.q2_signature_mod16_ok) j["q2_signature_mod16_ok"] = *r.q2_signature_mod16_ok;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json to_json(const AlexanderConditions& c) {
  return {{"passes", c.passes()},
          {"genus", c.genus},
          {"sign", c.sign},
          {"reciprocal", c.reciprocal},
          {"value_at_one_ok", c.value_at_one_ok},
          {"value_at_eps_square", c.value_at_eps_square},
          {"integer_coefficients", c.integer_coefficients},
          {"integral", c.integral},
          {"failures", c.failures}};
}

json to_json(const RootInterval& iv) { return {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}}; }

json to_json(const SignatureJump& j) {
  // the root is w(s) on the upper arc, w(-s) on the lower arc
  return {{"factor", j.factor.to_string()},
          {"arc", j.upper ? "upper" : "lower"},
          {"s", to_json(j.s)},
          {"before", j.before},
          {"after", j.after},
          {"jump", j.jump}};
}

std::string decimal_down(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.18Le", std::nextafter(x, -HUGE_VALL));
  return buf;
}

std::string decimal_up(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.18Le", std::nextafter(x, HUGE_VALL));
  return buf;
}

json to_json(const RhoInterval& r) {
  if (r.exact) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0Lf", r.lo);
    return {{"lo", buf}, {"hi", buf}, {"exact", true}, {"digits", 19}};
  }
  return {{"lo", decimal_down(r.lo)}, {"hi", decimal_up(r.hi)}, {"exact", false}, {"digits", 19}};
}

json to_json(const StableCertificate& c) {
  json j{{"kind", to_string(c.kind)}};
  switch (c.kind) {
    case StableCertificate::Kind::TriviallySplit: j["r"] = c.r; break;
    case StableCertificate::Kind::StablyIrreducible:
      j["a"] = to_string(c.a);
      j["p"] = to_string(c.p);
      break;
    case StableCertificate::Kind::Undetermined: j["searched_up_to"] = c.r; break;
    case StableCertificate::Kind::CircleRoots: break;
  }
  if (!c.factor.is_zero()) j["factor"] = c.factor.to_string();
  return j;
}

json to_json(const OrderClassification& c) {
  using V = OrderClassification::Verdict;
  json j{{"verdict", to_string(c.verdict)}};
  if (c.verdict == V::Trivial) j["r"] = c.r;
  if (c.witness_jump) j["witness"] = to_json(*c.witness_jump);
  if (c.witness_factor) j["witness_factor"] = c.witness_factor->to_string();
  if (c.verdict == V::Order2 || c.verdict == V::Order4) {
    j["a"] = to_string(c.a);
    j["p"] = to_string(c.p);
    if (c.decabled > 1) j["decabled"] = c.decabled;
  }
  if (c.verdict == V::Order4) j["depth"] = c.depth;
  if (c.verdict != V::Infinite) j["stable"] = to_json(c.stable);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const WittReport& r) {
  json fs = json::array();
  for (const auto& f : r.factors) {
    json cr = json::array();
    for (const auto& iv : f.factor.circle_roots) cr.push_back(to_json(iv));
    json fj{{"poly", f.factor.poly.to_string()},
            {"multiplicity", f.factor.multiplicity},
            {"reciprocal", f.factor.reciprocal},
            {"e_mod2", f.e_mod2},
            {"circle_roots_s", cr}};
    if (!f.factor.trace_poly.is_zero()) fj["trace_poly"] = f.factor.trace_poly.to_string("x");
    if (f.trivial_by_convention) fj["trivial_by_convention"] = true;
    fs.push_back(fj);
  }
  json js = json::array();
  for (const auto& x : r.jumps) js.push_back(to_json(x));
  json j{{"epsilon", r.epsilon}, {"alexander", poly_to_json(r.alexander)}, {"factors", fs}, {"jumps", js}};
  if (!r.epsilon_convention_note.empty()) j["epsilon_convention_note"] = r.epsilon_convention_note;
  return j;
}

namespace {

json places_json(const std::vector<PlaceCheck>& ps) {
  json a = json::array();
  for (const auto& p : ps) {
    json x{{"place", p.place}, {"symbol", p.symbol}};
    if (!p.note.empty()) x["note"] = p.note;
    a.push_back(x);
  }
  return a;
}

json padic_json(const PadicInt& x) {
  return to_string(x.residue) + " mod " + to_string(x.p) + "^" + std::to_string(x.precision);
}

}  // namespace

json to_json(const NormTestResult& r) {
  json j{{"verdict", to_string(r.verdict)}, {"places", places_json(r.places)}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

json to_json(const Order2Report& r) {
  return {{"verdict", r.verdict},
          {"a", to_string(r.a)},
          {"field", "Q(sqrt(" + to_string(r.m) + "))"},
          {"m", to_string(r.m)},
          {"places", places_json(r.places)},
          {"ramified_valuation", r.ramified_valuation},
          {"norm_test", to_json(r.norm_test)}};
}

json to_json(const TowerReport& r) {
  json levels = json::array();
  const Integer p2 = r.p * r.p;
  for (const auto& s : r.levels) {
    json l{{"level", s.level}};
    l["m"] = s.m_exact ? json(to_string(*s.m_exact)) : padic_json(s.m);
    l["sigma"] = s.sigma_exact ? json(to_string(*s.sigma_exact)) : padic_json(s.sigma);
    l["sigma_mod_p2"] = to_string(s.sigma_mod_p2) + " mod " + to_string(p2);
    l["expected_mod_p2"] = to_string(s.expected_mod_p2) + " mod " + to_string(p2);
    l["v_sigma"] = s.v_sigma;
    l["residue_degree"] = s.f;
    l["sqrt_branch"] = padic_json(s.sqrt_branch);
    l["local_symbol"] = s.local_symbol;
    l["ok"] = s.ok;
    levels.push_back(l);
  }
  return {{"verdict", r.verdict},
          {"a", to_string(r.a)},
          {"p", to_string(r.p)},
          {"depth", r.depth},
          {"precision", r.precision},
          {"levels", levels}};
}

json to_json(const SurgeryData& d) {
  auto mat = [](const MatQ& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
      rows.push_back(row);
    }
    return rows;
  };
  json cs = json::array();
  for (const auto& c : d.corrections)
    cs.push_back({{"i", c.i}, {"j", c.j}, {"m", to_string(c.m)}, {"n", to_string(c.n)}, {"plus", c.plus}, {"minus", c.minus}});
  json vs = json::array();
  for (const auto& v : d.linking_vectors) {
    json col = json::array();
    for (size_t i = 0; i < v.rows(); ++i) col.push_back(to_json(v(i, 0)));
    vs.push_back(col);
  }
  return {{"B", mat(d.B)}, {"corrections", cs}, {"L", mat(d.L)}, {"linking_vectors", vs}, {"reconstructs", d.reconstructs}};
}

json to_json(const HilbertProductReport& r) {
  json s = json::array();
  for (const auto& x : r.symbols) s.push_back({{"place", x.place.to_string()}, {"symbol", x.symbol}});
  return {{"symbols", s}, {"product_is_one", r.product_is_one}};
}

}  // namespace concordia::api
