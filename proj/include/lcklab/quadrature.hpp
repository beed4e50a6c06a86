#pragma once

#include <vector>

#include "lcklab/errors.hpp"

namespace lck {

/// Quadrature over an interval [a, b]. PeriodicTrapezoid is the composite
/// trapezoid rule with the endpoints identified (spectrally accurate on
/// periodic integrands); GaussLegendre handles the smooth non-periodic
/// integrands that show up on symmetric intervals.
struct QuadratureRule {
  enum class Scheme { PeriodicTrapezoid, GaussLegendre };

  int N = 256;
  Scheme scheme = Scheme::PeriodicTrapezoid;

  QuadratureRule() = default;
  QuadratureRule(int n, Scheme s = Scheme::PeriodicTrapezoid) : N(n), scheme(s) {
    if (N < 4) throw ConfigError("quadrature needs at least 4 nodes");
  }

  struct Nodes {
    std::vector<double> t, w;
  };

  Nodes nodes(double a, double b) const;
};

}  // namespace lck
