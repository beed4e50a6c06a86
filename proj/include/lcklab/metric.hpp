#pragma once

#include "lcklab/lck.hpp"

namespace lck {

/// Levi-Civita data of the metric g(X, Y) = omega(X, I Y), assembled from
/// exact jets of the form components.
class HermitianMetric {
 public:
  explicit HermitianMetric(KForm omega);

  int n() const { return omega_.n; }

  /// g components with jets at a point (symmetric, positive definite).
  std::vector<std::vector<Jet>> components(const Point& p) const;

  Eigen::MatrixXd values(const Point& p) const;

  /// Christoffel symbols Gamma[k](a, b) at a point.
  std::vector<Eigen::MatrixXd> christoffel(const Point& p) const;

  /// Covariant-constancy defect of g itself (Levi-Civita self-test).
  double nabla_g_defect(const Point& p) const;

  /// Components of the covariant derivative of a 1-form:
  /// (nabla theta)_{ab} = d_a theta_b - Gamma^c_{ab} theta_c.
  Eigen::MatrixXd nabla_oneform(const KForm& theta, const Point& p) const;

 private:
  KForm omega_;
};

struct VaismanReport {
  double sup_nabla_theta = 0.0;
  double min_metric_eigenvalue = 0.0;
  double nabla_g_defect = 0.0;
  bool vaisman = false;
  double tol = 1e-6;
};

/// Verdict on the parallelism of the Lee form over the sample set.
VaismanReport is_vaisman(const LCKStructure& s, const std::vector<Point>& samples,
                         double tol = 1e-6);

/// The explicit potential of a Vaisman structure: the Kahler form evaluated
/// on the metric dual of the (lifted) Lee form and its I-image. For the
/// classical Hopf structure this is |z|^2 and dd^c of it reproduces the flat
/// Kahler form (constant recorded in the conventions).
ScalarField vaisman_potential(const LCKStructure& s, const KForm& kahler_form,
                              const KForm& lifted_theta);

}  // namespace lck
