#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "concordia/error.hpp"
#include "registry.hpp"
#include "serialize.hpp"

namespace concordia::api {

namespace {

struct MatrixSource {
  std::string file;
  std::string example;
};

void add_matrix_source(CLI::App* cmd, MatrixSource& src) {
  auto* m = cmd->add_option("--matrix", src.file, "matrix JSON file, - for stdin");
  auto* e = cmd->add_option("--example", src.example, "registry key");
  m->excludes(e);
}

std::string read_source(const std::string& file) {
  if (file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SeifertMatrix load_matrix(const MatrixSource& src) {
  if (!src.example.empty()) return lookup_example(src.example).matrix;
  if (src.file.empty()) throw InvalidArgument("a matrix is required: --matrix FILE or --example KEY");
  return matrix_from_text(read_source(src.file));
}

LaurentPoly parse_coeff_list(const std::string& text) {
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw InvalidArgument("empty coefficient list");
  return LaurentPoly(RatPoly(c));
}

// Accepts a polynomial document, or any document with an "alexander" field.
LaurentPoly parse_poly_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("alexander")) return poly_from_json(j["alexander"]);
  return poly_from_json(j);
}

Place parse_place(const std::string& s) {
  if (s == "inf" || s == "real") return Place::real();
  Integer p(0);
  try {
    p = Integer(s);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("place must be a prime or 'inf', got '" + s + "'");
  }
  if (!is_prime(p)) throw InvalidArgument("place must be a prime or 'inf', got '" + s + "'");
  return Place::prime(p);
}

Integer parse_integer(const std::string& name, const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("--" + name + " must be an integer, got '" + s + "'");
  }
}

void render(const json& j, int indent, std::ostream& out);

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v)) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
        out << pad << k << ": [";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ":\n";
        render(v, indent + 2, out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (scalar(v)) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
        out << pad << "[";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "]\n";
      } else {
        out << pad << "-\n";
        render(v, indent + 2, out);
      }
    }
    return;
  }
  out << pad << scalar_text(j) << "\n";
}

json envelope(const std::string& command) { return {{"schema", kSchema}, {"command", command}, {"status", "ok"}}; }

void merge(json& into, const json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Invariants of rational Seifert matrices and their classes in the algebraic concordance groups",
               "concordia"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  std::string command;
  std::function<json()> action;
  auto bind = [&](CLI::App* sub, std::function<json()> f) {
    sub->callback([&, sub, f] {
      command = sub->get_name();
      action = f;
    });
  };

  MatrixSource src;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial det(tA - eps A^T) and its factorization");
  add_matrix_source(alex, src);
  bind(alex, [&] {
    SeifertMatrix S = load_matrix(src);
    LaurentPoly d = alexander(S);
    return json{{"epsilon", S.epsilon}, {"alexander", poly_to_json(d)}, {"factorization", to_json(factor_poly(d.core()))}};
  });

  bool q2 = false;
  auto* val = app.add_subcommand("validate", "check the even unimodular lattice condition");
  add_matrix_source(val, src);
  val->add_flag("--q2", q2, "also check the signature condition mod 16 for q = 2");
  bind(val, [&] { return to_json(validate(load_matrix(src), q2)); });

  long r = 0;
  auto* cab = app.add_subcommand("cable", "the cabling matrix i_r(A)");
  add_matrix_source(cab, src);
  cab->add_option("--r", r, "number of parallel copies")->required()->check(CLI::PositiveNumber);
  bind(cab, [&] { return matrix_to_json(cable(load_matrix(src), r)); });

  std::string coeffs, poly_file, poly_example;
  int epsilon = 1;
  auto* rea = app.add_subcommand("realize", "a Seifert matrix with the given Alexander polynomial");
  auto* oc = rea->add_option("--coeffs", coeffs, "comma-separated coefficients, lowest degree first");
  auto* op = rea->add_option("--poly", poly_file, "polynomial JSON file, - for stdin");
  auto* oe = rea->add_option("--example", poly_example, "use the Alexander polynomial of a registry entry");
  oc->excludes(op)->excludes(oe);
  op->excludes(oe);
  rea->add_option("--epsilon", epsilon, "1 or -1")->check(CLI::IsMember({1, -1}));
  bind(rea, [&] {
    LaurentPoly d;
    int eps = epsilon;
    if (!coeffs.empty()) {
      d = parse_coeff_list(coeffs);
    } else if (!poly_file.empty()) {
      d = parse_poly_document(read_source(poly_file));
    } else if (!poly_example.empty()) {
      ExampleEntry e = lookup_example(poly_example);
      d = poly_from_json(e.expected["alexander"]);
      if (!rea->count("--epsilon")) eps = e.matrix.epsilon;
    } else {
      throw InvalidArgument("realize needs --coeffs, --poly or --example");
    }
    AlexanderConditions c = alexander_conditions(d, eps);
    SeifertMatrix S = realize(d, eps);
    json j = matrix_to_json(S);
    j["alexander"] = poly_to_json(S.dim() ? alexander(S) : LaurentPoly(1));
    j["conditions"] = to_json(c);
    return j;
  });

  auto* inv = app.add_subcommand("invariants", "primary decomposition: factors, exponents mod 2, signature jumps");
  add_matrix_source(inv, src);
  bind(inv, [&] { return to_json(witt_invariants(load_matrix(src))); });

  auto* jmp = app.add_subcommand("jumps", "jumps of the signature function at unit circle roots");
  add_matrix_source(jmp, src);
  bind(jmp, [&] {
    json a = json::array();
    for (const auto& j : signature_jumps(load_matrix(src))) a.push_back(to_json(j));
    return json{{"jumps", a}};
  });

  std::string tol = "1/1000000";
  auto* rho = app.add_subcommand("rho", "normalized integral of the signature function");
  add_matrix_source(rho, src);
  rho->add_option("--tol", tol, "interval width bound, as p/q")->capture_default_str();
  bind(rho, [&] { return json{{"rho", to_json(rho_abelian(load_matrix(src), parse_rational(tol)))}, {"tol", tol}}; });

  long rmax = 0;
  unsigned depth = 0;
  auto* ord = app.add_subcommand("order", "order of the image in the limit group");
  add_matrix_source(ord, src);
  ord->add_option("--rmax", rmax, "largest r for the non-reciprocal search (default CONCORDIA_RMAX or 12)")
      ->check(CLI::PositiveNumber);
  ord->add_option("--depth", depth, "p-adic tower depth (default CONCORDIA_PADIC_DEPTH or 8)")->check(CLI::PositiveNumber);
  bind(ord, [&] {
    long rm = rmax ? rmax : default_r_max();
    unsigned dp = depth ? depth : default_padic_depth();
    json j = to_json(order_classify(load_matrix(src), rm, dp));
    j["r_max"] = rm;
    return j;
  });

  std::string ha, hb, hp, na, nm, ta, tp;
  auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v over Q");
  hil->add_option("--a", ha)->required();
  hil->add_option("--b", hb)->required();
  hil->add_option("--p", hp, "prime or inf; omit for every place and the product formula");
  bind(hil, [&] {
    Rational a = parse_rational(ha), b = parse_rational(hb);
    if (hp.empty()) return to_json(hilbert_product_check(a, b));
    Place v = parse_place(hp);
    return json{{"a", to_string(a)}, {"b", to_string(b)}, {"place", v.to_string()}, {"symbol", hilbert_q(a, b, v)}};
  });

  auto* nt = app.add_subcommand("norm-test", "is -1 a norm from K(sqrt(a)) to K = Q(sqrt(m))");
  nt->add_option("--m", nm)->required();
  nt->add_option("--a", na)->required();
  bind(nt, [&] {
    json j = to_json(minus_one_norm_test(QuadField(parse_integer("m", nm)), parse_integer("a", na)));
    j["m"] = nm;
    j["a"] = na;
    return j;
  });

  std::string oa;
  auto* o2 = app.add_subcommand("order2-cert", "discriminant certificate for the order-2 family");
  o2->add_option("--a", oa)->required();
  bind(o2, [&] { return to_json(order2_certificate(parse_integer("a", oa))); });

  unsigned tdepth = 0, tprec = 2;
  auto* o4 = app.add_subcommand("order4-tower", "p-adic tower certificate for the order-4 family");
  o4->add_option("--a", ta)->required();
  o4->add_option("--p", tp)->required();
  o4->add_option("--depth", tdepth, "levels (default CONCORDIA_PADIC_DEPTH or 8)")->check(CLI::PositiveNumber);
  o4->add_option("--precision", tprec, "p-adic precision N")->capture_default_str()->check(CLI::Range(2u, 64u));
  bind(o4, [&] {
    return to_json(order4_tower(parse_integer("a", ta), parse_integer("p", tp), tdepth ? tdepth : default_padic_depth(), tprec));
  });

  auto* sd = app.add_subcommand("surgery-data", "integral part, corrections and linking matrix");
  add_matrix_source(sd, src);
  bind(sd, [&] { return to_json(surgery_data(load_matrix(src))); });

  auto* ex = app.add_subcommand("examples", "registry of example matrices");
  ex->require_subcommand(1);
  auto* exl = ex->add_subcommand("list", "list registry keys");
  std::string key;
  auto* exs = ex->add_subcommand("show", "show a registry entry");
  exs->add_option("key", key, "registry key")->required();
  exl->callback([&] {
    command = "examples list";
    action = [] {
      json a = json::array();
      for (const auto& e : example_registry())
        a.push_back({{"key", e.key}, {"epsilon", e.matrix.epsilon}, {"dim", e.matrix.dim()}, {"description", e.description}});
      json patterns = {"order2-a{N}", "order4-a{N}-p{M}", "kernel-a{N}", "pell-a{N}", "eps-minus-4x4-a{N}",
                       "eps-minus-4x4-a{N}-p{M}"};
      return json{{"examples", a}, {"patterns", patterns}};
    };
  });
  exs->callback([&] {
    command = "examples show";
    action = [&] {
      ExampleEntry e = lookup_example(key);
      json j = matrix_to_json(e.matrix);
      j["key"] = e.key;
      j["description"] = e.description;
      j["expected"] = e.expected;
      return j;
    };
  });

  std::vector<std::string> argv_store{"concordia"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  auto error = [&](int code, const std::string& kind, const std::string& message) {
    json j{{"schema", kSchema}, {"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
    if (!command.empty()) j["command"] = command;
    std::ostringstream out;
    if (pretty)
      render(j, 0, out);
    else
      out << j.dump() << "\n";
    return CommandResult{code, out.str()};
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    // help on a subcommand
    if (e.get_exit_code() == 0) return {0, app.help()};
    return error(2, "usage", e.what());
  }
  if (!action) return error(2, "usage", "no subcommand given");

  try {
    json payload = envelope(command);
    merge(payload, action());
    std::ostringstream out;
    if (pretty)
      render(payload, 0, out);
    else
      out << payload.dump() << "\n";
    return {0, out.str()};
  } catch (const DomainError& e) {
    return error(1, "domain", e.what());
  } catch (const InvalidArgument& e) {
    return error(2, "usage", e.what());
  } catch (const std::exception& e) {
    return error(1, "internal", e.what());
  }
}

}  // namespace concordia::api
