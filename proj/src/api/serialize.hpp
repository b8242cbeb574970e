#pragma once

#include <string>

#include "json.hpp"

#include "concordia/factor.hpp"
#include "concordia/numtheory.hpp"
#include "concordia/seifert.hpp"
#include "concordia/witt.hpp"

namespace concordia::api {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "concordia/1";

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {"schema", "epsilon", "complexity", "entries": [["p/q", ...], ...]}
json matrix_to_json(const SeifertMatrix& S);
SeifertMatrix matrix_from_json(const json& j);
SeifertMatrix matrix_from_text(const std::string& text);

// {"shift", "coeffs": lowest degree first, "text"}
json poly_to_json(const LaurentPoly& p);
json poly_to_json(const RatPoly& p);
LaurentPoly poly_from_json(const json& j);

json to_json(const Factorization& f);
json to_json(const ValidityReport& r);
json to_json(const AlexanderConditions& c);
json to_json(const RootInterval& iv);
json to_json(const SignatureJump& j);
json to_json(const RhoInterval& r);
json to_json(const StableCertificate& c);
json to_json(const OrderClassification& c);
json to_json(const WittReport& r);
json to_json(const NormTestResult& r);
json to_json(const Order2Report& r);
json to_json(const TowerReport& r);
json to_json(const SurgeryData& d);
json to_json(const HilbertProductReport& r);

// Decimal rendering of a long double, rounded outward by one ulp first.
std::string decimal_down(long double x);
std::string decimal_up(long double x);

}  // namespace concordia::api
