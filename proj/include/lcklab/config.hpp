#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lck {

/// Run parameters for the verification suites.  Parsed from an INI-style
/// file of `[section]` headers and `key = value` lines; `#` starts a comment.
struct RunConfig {
  // [model]
  int n = 2;            // complex dimension of the cover C^n \ {0}
  double alpha = 0.5;   // classical Hopf contraction factor, 0 < alpha < 1
  double lambda = 2.0;  // homothety constant
  std::vector<double> killing_rates = {0.2, -0.1};

  // [run]
  int samples = 200;
  int quadrature_n = 256;
  std::uint64_t seed = 20240613;
  std::vector<std::string> suites;  // empty = all

  // [tolerances]
  double tol_jet = 1e-8;
  double tol_quad = 1e-6;

  static RunConfig parse_file(const std::string& path);
  static RunConfig parse_text(const std::string& text, const std::string& origin);

  void validate() const;
  nlohmann::json to_json() const;
};

/// Names of all available suites, in canonical order.
const std::vector<std::string>& suite_names();

}  // namespace lck
