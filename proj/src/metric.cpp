#include "lcklab/metric.hpp"

#include <Eigen/Eigenvalues>

#include "lcklab/complex_structure.hpp"
#include "lcklab/jet_linalg.hpp"

namespace lck {

HermitianMetric::HermitianMetric(KForm omega) : omega_(std::move(omega)) {
  if (omega_.k != 2) throw DegreeError("metric needs a 2-form");
}

std::vector<std::vector<Jet>> HermitianMetric::components(const Point& p) const {
  auto W = form2_matrix_jets(omega_, p);
  int m = p.m();
  std::vector<std::vector<Jet>> g(m, std::vector<Jet>(m, Jet::constant(0.0, m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Jet v = W[a][ComplexStructure::image(b)];
      g[a][b] = (ComplexStructure::sign(b) > 0) ? v : -v;
    }
  return g;
}

Eigen::MatrixXd HermitianMetric::values(const Point& p) const {
  auto g = components(p);
  int m = p.m();
  Eigen::MatrixXd G(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) G(a, b) = g[a][b].value();
  return G;
}

std::vector<Eigen::MatrixXd> HermitianMetric::christoffel(const Point& p) const {
  auto g = components(p);
  int m = p.m();
  Eigen::MatrixXd G = values(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  if (es.eigenvalues().minCoeff() <= 0)
    throw GeometryError("christoffel: metric not positive definite at point");
  Eigen::MatrixXd Ginv = G.inverse();

  std::vector<Eigen::MatrixXd> Gamma(m, Eigen::MatrixXd::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Eigen::VectorXd low(m);  // Gamma_{c,ab} = (d_a g_bc + d_b g_ac - d_c g_ab)/2
      for (int c = 0; c < m; ++c)
        low(c) = 0.5 * (g[b][c].grad()(a) + g[a][c].grad()(b) - g[a][b].grad()(c));
      Eigen::VectorXd up = Ginv * low;
      for (int k = 0; k < m; ++k) {
        Gamma[k](a, b) = up(k);
        Gamma[k](b, a) = up(k);
      }
    }
  return Gamma;
}

double HermitianMetric::nabla_g_defect(const Point& p) const {
  auto g = components(p);
  auto Gamma = christoffel(p);
  int m = p.m();
  double worst = 0.0;
  for (int c = 0; c < m; ++c)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double v = g[a][b].grad()(c);
        for (int d = 0; d < m; ++d)
          v -= Gamma[d](c, a) * g[d][b].value() + Gamma[d](c, b) * g[a][d].value();
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

Eigen::MatrixXd HermitianMetric::nabla_oneform(const KForm& theta,
                                               const Point& p) const {
  auto th = theta(p);
  auto Gamma = christoffel(p);
  int m = p.m();
  Eigen::MatrixXd N(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double v = th[b].grad()(a);
      for (int c = 0; c < m; ++c) v -= Gamma[c](a, b) * th[c].value();
      N(a, b) = v;
    }
  return N;
}

VaismanReport is_vaisman(const LCKStructure& s, const std::vector<Point>& samples,
                         double tol) {
  HermitianMetric metric(s.omega);
  VaismanReport rep;
  rep.tol = tol;
  rep.min_metric_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& p : samples) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric.values(p));
    double mineig = es.eigenvalues().minCoeff();
    rep.min_metric_eigenvalue = std::min(rep.min_metric_eigenvalue, mineig);
    if (mineig <= 0)
      throw GeometryError("is_vaisman: metric not positive definite at |p| = " +
                          std::to_string(std::sqrt(p.norm2())));
    rep.sup_nabla_theta = std::max(
        rep.sup_nabla_theta, metric.nabla_oneform(s.theta, p).cwiseAbs().maxCoeff());
  }
  if (!samples.empty())
    rep.nabla_g_defect = metric.nabla_g_defect(samples.front());
  rep.vaisman = rep.sup_nabla_theta <= tol;
  return rep;
}

ScalarField vaisman_potential(const LCKStructure& s, const KForm& kahler_form,
                              const KForm& lifted_theta) {
  // Degenerate Lee form: no potential to build.
  Point probe(Eigen::VectorXd::Ones(2 * s.omega.n));
  double tn = 0.0;
  for (const auto& j : lifted_theta(probe)) tn = std::max(tn, std::abs(j.value()));
  if (tn < 1e-12)
    throw GeometryError("vaisman_potential: Lee form vanishes (Kahler case)");

  HermitianMetric metric(s.omega);
  KForm omega_tilde = kahler_form;
  KForm theta = lifted_theta;
  ScalarField phi;
  phi.n = s.omega.n;
  phi.ord = std::min(kahler_form.ord, std::min(theta.ord, s.omega.ord));
  phi.eval = [metric, omega_tilde, theta](const Point& p) {
    // raise the index of theta with the structure's own metric ...
    auto g = metric.components(p);
    auto sharp = jet_solve(g, theta(p));
    // ... and take its square length in the covering Kahler metric
    auto Wt = form2_matrix_jets(omega_tilde, p);
    int m = p.m();
    Jet val = Jet::constant(0.0, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        // g~(v, v) = w~(v, I v)
        Jet term = Wt[a][ComplexStructure::image(b)] * sharp[a] * sharp[b];
        val += (ComplexStructure::sign(b) > 0) ? term : -term;
      }
    return val;
  };
  return phi;
}

}  // namespace lck
