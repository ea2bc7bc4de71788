#include "mll/json_io.hpp"

#include "mll/error.hpp"

namespace mll {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex complex_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string(what) + " must be [re, im]");
  return {number(j[0], what), number(j[1], what)};
}

Json pair_json(Complex z) { return Json::array({z.real(), z.imag()}); }

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const char* where) {
  if (!obj.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

const Json& required(const Json& obj, const char* key, const char* where) {
  if (!obj.contains(key)) fail(std::string("missing key '") + key + "' in " + where);
  return obj.at(key);
}

}  // namespace

Json to_json(const WickFunction& f) {
  Json coeffs = Json::array();
  for (const auto& [t, c] : f.coeffs()) coeffs.push_back({t.first, t.second, c.real(), c.imag()});
  const Exponent& e = f.exponent();
  return {{"coeffs", coeffs},
          {"exp", {e.a, e.b.real(), e.b.imag(), e.c.real(), e.c.imag(), e.d.real(), e.d.imag()}}};
}

WickFunction wick_from_json(const Json& j) {
  reject_unknown(j, {"coeffs", "exp"}, "wick function");
  const Json& coeffs = required(j, "coeffs", "wick function");
  const Json& exp = required(j, "exp", "wick function");
  if (!coeffs.is_array()) fail("coeffs must be an array");
  if (!exp.is_array() || exp.size() != 7) fail("exp must have 7 numbers");
  Polynomial poly;
  for (const Json& row : coeffs) {
    if (!row.is_array() || row.size() != 4) fail("each coefficient must be [m, n, re, im]");
    if (!row[0].is_number_integer() || !row[1].is_number_integer()) fail("exponents m, n must be integers");
    const int m = row[0].get<int>();
    const int n = row[1].get<int>();
    if (m < 0 || n < 0) fail("exponents m, n must be non-negative");
    poly[{m, n}] += Complex{number(row[2], "coefficient"), number(row[3], "coefficient")};
  }
  double v[7];
  for (int i = 0; i < 7; ++i) v[i] = number(exp[i], "exp entry");
  try {
    return WickFunction(std::move(poly), Exponent{v[0], {v[1], v[2]}, {v[3], v[4]}, {v[5], v[6]}});
  } catch (const Error& e) {
    fail(e.what());
  }
}

Json to_json(const ModelParams& p) {
  const AffineTau t = p.pair.affine_tau();
  const bool inner = std::holds_alternative<InnerAffine>(p.pair.variant());
  return {{"nu", p.nu},
          {"mu", p.mu},
          {"pair",
           {{"kind", inner ? "inner" : "conjugate"}, {"alpha", pair_json(inner ? t.p : t.q)}, {"beta", pair_json(t.r)}}}};
}

ModelParams model_from_json(const Json& j) {
  reject_unknown(j, {"nu", "mu", "pair"}, "model");
  const double nu = number(required(j, "nu", "model"), "nu");
  const double mu = number(required(j, "mu", "model"), "mu");
  const Json& pair = required(j, "pair", "model");
  reject_unknown(pair, {"kind", "alpha", "beta"}, "pair");
  const Json& kind = required(pair, "kind", "pair");
  if (!kind.is_string()) fail("pair kind must be a string");
  const Complex alpha = complex_pair(required(pair, "alpha", "pair"), "alpha");
  const Complex beta = complex_pair(required(pair, "beta", "pair"), "beta");
  try {
    const GroupElement h(alpha, beta);
    if (kind == "inner") return ModelParams(nu, mu, EquivariantPair::inner(h));
    if (kind == "conjugate") return ModelParams(nu, mu, EquivariantPair::conjugate(h));
  } catch (const Error& e) {
    fail(e.what());
  }
  fail("pair kind must be \"inner\" or \"conjugate\"");
}

Json to_json(const Lattice& lat) { return {{"w1", pair_json(lat.w1())}, {"w2", pair_json(lat.w2())}}; }

Lattice lattice_from_json(const Json& j) {
  reject_unknown(j, {"w1", "w2"}, "lattice");
  const Complex w1 = complex_pair(required(j, "w1", "lattice"), "w1");
  const Complex w2 = complex_pair(required(j, "w2", "lattice"), "w2");
  try {
    return Lattice(w1, w2);
  } catch (const Error& e) {
    fail(e.what());
  }
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> tol{
      {"susy", 1e-9},         {"intertwine", 1e-9},       {"chain_rule", 1e-12}, {"multiplier", 1e-10},
      {"pseudo_character", 1e-12}, {"kernel", 1e-6}, {"periodize", 1e-8},
  };
  return tol;
}

RunConfig RunConfig::defaults() {
  return RunConfig{ModelParams(M_PI - 1.0, 1.0, EquivariantPair::inner(GroupElement(kI, 0.5))), Lattice::square(),
                   default_tolerances(), "", std::nullopt};
}

double RunConfig::tolerance(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it != tolerances.end()) return it->second;
  const auto def = default_tolerances().find(name);
  if (def == default_tolerances().end()) throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
  return def->second;
}

RunConfig parse_run_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  reject_unknown(j, {"model", "lattice", "tolerances", "output_path", "seed"}, "config");
  RunConfig cfg = RunConfig::defaults();
  cfg.model = model_from_json(required(j, "model", "config"));
  cfg.lattice.reset();
  if (j.contains("lattice") && !j["lattice"].is_null()) cfg.lattice = lattice_from_json(j["lattice"]);
  if (j.contains("tolerances")) {
    const Json& tol = j["tolerances"];
    if (!tol.is_object()) fail("tolerances must be an object");
    for (const auto& item : tol.items()) {
      if (!default_tolerances().count(item.key())) fail("unknown tolerance '" + item.key() + "'");
      const double v = number(item.value(), "tolerance");
      if (!(v > 0.0)) fail("tolerance '" + item.key() + "' must be positive");
      cfg.tolerances[item.key()] = v;
    }
  }
  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) fail("output_path must be a string");
    cfg.output_path = j["output_path"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("seed must be a non-negative integer");
    cfg.seed = j["seed"].get<unsigned long>();
  }
  return cfg;
}

}  // namespace mll
