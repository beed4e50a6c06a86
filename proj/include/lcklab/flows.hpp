#pragma once

#include <Eigen/Dense>

#include "lcklab/fields.hpp"
#include "lcklab/quadrature.hpp"

namespace lck {

/// Invertible linear coordinate map, optionally complex-linear.
struct LinearMap {
  Eigen::MatrixXd M;

  explicit LinearMap(Eigen::MatrixXd m);

  int dim_n() const { return static_cast<int>(M.rows()) / 2; }
  bool is_complex_linear(double tol = 1e-12) const;
  Point apply(const Point& p) const { return Point(M * p.x); }
};

/// Flow of the linear field z -> G z: time t maps to exp(t G).
struct LinearFlow {
  Eigen::MatrixXd G;

  explicit LinearFlow(Eigen::MatrixXd gen) : G(std::move(gen)) {}

  Eigen::MatrixXd at(double t) const;
  VectorField field() const { return VectorField::linear(G); }
};

/// Periodic linear flow: exp(T G) equals the identity or a designated deck
/// transformation D (checked on construction).
struct CircleAction {
  LinearFlow flow;
  double T;
  Eigen::MatrixXd period_map;  // identity or the deck matrix

  CircleAction(LinearFlow f, double period, Eigen::MatrixXd D,
               double tol = 1e-10);

  static CircleAction rotation(int n);  // uniform rotation, period 2*pi
};

/// (F* a)_p(v_1,...,v_k) = a_{F p}(F v_1, ..., F v_k).
KForm pullback(const LinearMap& map, const KForm& a);

ScalarField pullback_scalar(const LinearMap& map, const ScalarField& f);

/// Pullback by exp(t G).
KForm flow_pullback_form(const LinearFlow& flow, double t, const KForm& a);

/// (1/T) * trapezoid sum of pullbacks over one period.
KForm average_form_over_circle(const CircleAction& action, const KForm& a,
                               const QuadratureRule& q);

ScalarField average_scalar_over_circle(const CircleAction& action,
                                       const ScalarField& f,
                                       const QuadratureRule& q);

/// Integral of a closed 1-form over the orbit of `base`, one full period.
/// Throws GeometryError when d(theta) exceeds `closed_tol` at orbit samples.
double loop_integral(const KForm& theta, const CircleAction& action,
                     const Point& base, const QuadratureRule& q,
                     double closed_tol = 1e-8);

}  // namespace lck
