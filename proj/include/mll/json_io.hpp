#pragma once

// JSON forms of the library's value types and the CLI run configuration.
//
//   WickFunction: {"coeffs": [[m, n, re, im], ...], "exp": [a, b_re, b_im, c_re, c_im, d_re, d_im]}
//   ModelParams:  {"nu": x, "mu": x, "pair": {"kind": "inner" | "conjugate", "alpha": [re, im], "beta": [re, im]}}
//
// All parse failures throw Error with code Parse.

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "mll/lattice.hpp"
#include "mll/model.hpp"
#include "mll/wick.hpp"

namespace mll {

using Json = nlohmann::json;

Json to_json(const WickFunction& f);
WickFunction wick_from_json(const Json& j);

/// Affine models only; generic pairs have no JSON form.
Json to_json(const ModelParams& p);
ModelParams model_from_json(const Json& j);

Json to_json(const Lattice& lat);
Lattice lattice_from_json(const Json& j);

struct RunConfig {
  ModelParams model;
  std::optional<Lattice> lattice;
  std::map<std::string, double> tolerances;
  std::string output_path;
  std::optional<unsigned long> seed;

  /// nu = pi - 1, mu = 1, inner pair alpha = i, beta = 1/2, square lattice.
  static RunConfig defaults();
  double tolerance(const std::string& name) const;
};

/// Keys: model (required), lattice, tolerances, output_path, seed. Unknown
/// keys, unknown tolerance names and malformed values are rejected.
RunConfig parse_run_config(const std::string& text);

/// Tolerance names with their defaults.
const std::map<std::string, double>& default_tolerances();

}  // namespace mll
