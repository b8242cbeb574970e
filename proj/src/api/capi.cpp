#include <cmath>
#include <cstdlib>
#include <cstring>

#include "commands.hpp"
#include "concordia/concordia.h"
#include "concordia/error.hpp"
#include "registry.hpp"
#include "serialize.hpp"

struct cc_matrix {
  concordia::SeifertMatrix S;
};

struct cc_poly {
  concordia::LaurentPoly p;
};

namespace {

using namespace concordia;

thread_local std::string g_last_error;

cc_status fail(cc_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
cc_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return CC_OK;
  } catch (const DomainError& e) {
    return fail(CC_ERR_DOMAIN, e.what());
  } catch (const ParseError& e) {
    return fail(CC_ERR_PARSE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(CC_ERR_USAGE, e.what());
  } catch (const api::json::exception& e) {
    return fail(CC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define CC_REQUIRE(p) \
  if (!(p)) return fail(CC_ERR_NULL, #p " is NULL")

}  // namespace

extern "C" {

const char* cc_version(void) { return "1.0.0"; }
const char* cc_last_error(void) { return g_last_error.c_str(); }
void cc_string_free(char* s) { std::free(s); }

cc_status cc_matrix_from_json(const char* json, cc_matrix** out) {
  CC_REQUIRE(json);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_matrix{api::matrix_from_text(json)}; });
}

cc_status cc_matrix_from_example(const char* key, cc_matrix** out) {
  CC_REQUIRE(key);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_matrix{api::lookup_example(key).matrix}; });
}

cc_status cc_matrix_to_json(const cc_matrix* m, char** out) {
  CC_REQUIRE(m);
  CC_REQUIRE(out);
  return guard([&] { *out = dup(api::matrix_to_json(m->S).dump()); });
}

cc_status cc_matrix_dim(const cc_matrix* m, size_t* out) {
  CC_REQUIRE(m);
  CC_REQUIRE(out);
  *out = m->S.dim();
  return CC_OK;
}

cc_status cc_matrix_epsilon(const cc_matrix* m, int* out) {
  CC_REQUIRE(m);
  CC_REQUIRE(out);
  *out = m->S.epsilon;
  return CC_OK;
}

void cc_matrix_free(cc_matrix* m) { delete m; }

cc_status cc_cable(const cc_matrix* m, long r, cc_matrix** out) {
  CC_REQUIRE(m);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_matrix{cable(m->S, r)}; });
}

cc_status cc_block_sum(const cc_matrix* a, const cc_matrix* b, cc_matrix** out) {
  CC_REQUIRE(a);
  CC_REQUIRE(b);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_matrix{block_sum(a->S, b->S)}; });
}

cc_status cc_negate(const cc_matrix* m, cc_matrix** out) {
  CC_REQUIRE(m);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_matrix{negate(m->S)}; });
}

cc_status cc_poly_from_coeffs(const char* const* coeffs, size_t n, long shift, cc_poly** out) {
  CC_REQUIRE(out);
  if (n) CC_REQUIRE(coeffs);
  return guard([&] {
    std::vector<Rational> c;
    for (size_t i = 0; i < n; ++i) {
      if (!coeffs[i]) throw InvalidArgument("coefficient is NULL");
      c.push_back(parse_rational(coeffs[i]));
    }
    *out = new cc_poly{LaurentPoly(RatPoly(c), shift)};
  });
}

cc_status cc_poly_to_string(const cc_poly* p, char** out) {
  CC_REQUIRE(p);
  CC_REQUIRE(out);
  return guard([&] { *out = dup(p->p.to_string()); });
}

cc_status cc_poly_to_json(const cc_poly* p, char** out) {
  CC_REQUIRE(p);
  CC_REQUIRE(out);
  return guard([&] { *out = dup(api::poly_to_json(p->p).dump()); });
}

cc_status cc_poly_equal_up_to_units(const cc_poly* a, const cc_poly* b, int* out) {
  CC_REQUIRE(a);
  CC_REQUIRE(b);
  CC_REQUIRE(out);
  return guard([&] { *out = equal_up_to_units(a->p, b->p) ? 1 : 0; });
}

void cc_poly_free(cc_poly* p) { delete p; }

cc_status cc_alexander(const cc_matrix* m, cc_poly** out) {
  CC_REQUIRE(m);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_poly{m->S.dim() ? alexander(m->S) : LaurentPoly(1)}; });
}

cc_status cc_realize(const cc_poly* delta, int epsilon, cc_matrix** out) {
  CC_REQUIRE(delta);
  CC_REQUIRE(out);
  return guard([&] { *out = new cc_matrix{realize(delta->p, epsilon)}; });
}

cc_status cc_validate(const cc_matrix* m, int* valid, char** report_json) {
  CC_REQUIRE(m);
  return guard([&] {
    ValidityReport r = validate(m->S);
    if (valid) *valid = r.valid() ? 1 : 0;
    if (report_json) *report_json = dup(api::to_json(r).dump());
  });
}

cc_status cc_invariants(const cc_matrix* m, char** report_json) {
  CC_REQUIRE(m);
  CC_REQUIRE(report_json);
  return guard([&] { *report_json = dup(api::to_json(witt_invariants(m->S)).dump()); });
}

cc_status cc_circle_signature(const cc_matrix* m, const char* s, long* out) {
  CC_REQUIRE(m);
  CC_REQUIRE(s);
  CC_REQUIRE(out);
  return guard([&] {
    CirclePoint w = std::strcmp(s, "inf") == 0 ? CirclePoint::minus_one() : CirclePoint::param(parse_rational(s));
    *out = circle_signature(m->S, w);
  });
}

cc_status cc_rho(const cc_matrix* m, const char* tol, double* lo, double* hi) {
  CC_REQUIRE(m);
  CC_REQUIRE(tol);
  CC_REQUIRE(lo);
  CC_REQUIRE(hi);
  return guard([&] {
    RhoInterval r = rho_abelian(m->S, parse_rational(tol));
    // round outward to double
    *lo = std::nextafter(static_cast<double>(r.lo), -HUGE_VAL);
    *hi = std::nextafter(static_cast<double>(r.hi), HUGE_VAL);
    if (r.exact) *lo = *hi = static_cast<double>(r.lo);
  });
}

cc_status cc_order_classify(const cc_matrix* m, long r_max, unsigned depth, char** report_json) {
  CC_REQUIRE(m);
  CC_REQUIRE(report_json);
  return guard([&] { *report_json = dup(api::to_json(order_classify(m->S, r_max, depth)).dump()); });
}

cc_status cc_run_command(int argc, const char* const* argv, char** out, int* exit_code) {
  CC_REQUIRE(out);
  CC_REQUIRE(exit_code);
  if (argc > 0) CC_REQUIRE(argv);
  return guard([&] {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) {
      if (!argv[i]) throw InvalidArgument("argv entry is NULL");
      args.emplace_back(argv[i]);
    }
    api::CommandResult r = api::run_command(args);
    *out = dup(r.output);
    *exit_code = r.exit_code;
  });
}

}  // extern "C"
