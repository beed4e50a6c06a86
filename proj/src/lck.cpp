#include "lcklab/lck.hpp"

#include <Eigen/Eigenvalues>

#include "lcklab/complex_structure.hpp"
#include "lcklab/conventions.hpp"
#include "lcklab/jet_linalg.hpp"

namespace lck {

namespace {

// Design matrix of theta -> theta ^ omega at a point, in Jet arithmetic:
// rows indexed by increasing triples, columns by theta components.
// (theta ^ omega)_{abc} = theta_a w_bc - theta_b w_ac + theta_c w_ab.
void lee_system(const KForm& omega, const Point& p,
                std::vector<std::vector<Jet>>& M, std::vector<Jet>& rhs,
                const KForm& domega) {
  int m = p.m();
  auto W = form2_matrix_jets(omega, p);
  const auto& t3 = IndexTable::get(m, 3);
  M.assign(t3.size(), std::vector<Jet>(m, Jet::constant(0.0, m)));
  for (int r = 0; r < t3.size(); ++r) {
    int a = t3.at(r)[0], b = t3.at(r)[1], c = t3.at(r)[2];
    M[r][a] += W[b][c];
    M[r][b] -= W[a][c];
    M[r][c] += W[a][b];
  }
  rhs = domega(p);
}

}  // namespace

LeeFormResult extract_lee_form(const KForm& omega,
                               const std::vector<Point>& probes,
                               double tol) {
  if (omega.k != 2) throw DegreeError("extract_lee_form: need a 2-form");
  if (omega.n < 2)
    throw StructuralError("extract_lee_form: needs complex dimension >= 2");
  KForm domega = exterior_d(omega);
  int m = omega.m();

  KForm theta;
  theta.n = omega.n;
  theta.k = 1;
  theta.ord = omega.ord - 1;
  KForm om = omega;
  theta.coeffs = [om, domega, m](const Point& p) {
    // normal equations of the overdetermined system, solved in jets
    std::vector<std::vector<Jet>> M;
    std::vector<Jet> rhs;
    lee_system(om, p, M, rhs, domega);
    int rows = static_cast<int>(M.size());
    std::vector<std::vector<Jet>> A(m, std::vector<Jet>(m, Jet::constant(0.0, m)));
    std::vector<Jet> y(m, Jet::constant(0.0, m));
    for (int r = 0; r < rows; ++r)
      for (int a = 0; a < m; ++a) {
        y[a] += M[r][a] * rhs[r];
        for (int b = a; b < m; ++b) A[a][b] += M[r][a] * M[r][b];
      }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < a; ++b) A[a][b] = A[b][a];
    return jet_solve(std::move(A), std::move(y));
  };

  // Rank and residual scan over the probe points.
  double worst = 0.0;
  Point worst_pt = probes.empty() ? Point(Eigen::VectorXd::Ones(m)) : probes[0];
  for (const auto& p : probes) {
    Eigen::MatrixXd W = form2_matrix(omega, p);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(W);
    if (!lu.isInvertible())
      throw GeometryError("extract_lee_form: omega degenerate at a probe point");
    std::vector<std::vector<Jet>> M;
    std::vector<Jet> rhs;
    lee_system(omega, p, M, rhs, domega);
    auto th = theta(p);
    for (size_t r = 0; r < M.size(); ++r) {
      double res = -rhs[r].value();
      for (int a = 0; a < m; ++a) res += M[r][a].value() * th[a].value();
      if (std::abs(res) > worst) {
        worst = std::abs(res);
        worst_pt = p;
      }
    }
  }
  if (worst > tol)
    throw GeometryError("not LCK: d(omega) is not theta ^ omega, residual " +
                        std::to_string(worst));
  // For small n the pointwise system is square and fits anything; a genuine
  // Lee form must also be closed, which the jet solve lets us test directly.
  if (theta.ord >= 1) {
    KForm dtheta = exterior_d(theta);
    for (const auto& p : probes) {
      double r = sup_coeff(dtheta, p);
      if (r > std::max(tol, 1e-7) * std::max(1.0, sup_coeff(domega, p)))
        throw GeometryError(
            "not LCK: the pointwise Lee candidate is not closed, d(theta) = " +
            std::to_string(r));
    }
  }
  return {theta, worst, worst_pt};
}

LCKResiduals validate_structure(const KForm& omega, const KForm& theta,
                                const std::vector<Point>& samples,
                                Sampler& rng) {
  LCKResiduals res;
  res.min_positivity = std::numeric_limits<double>::infinity();
  KForm defect = exterior_d(omega) - wedge(theta, omega);
  KForm dtheta = exterior_d(theta);
  KForm i_omega = apply_I(omega);
  for (const auto& p : samples) {
    res.lck = std::max(res.lck, sup_coeff(defect, p));
    res.lee_closed = std::max(res.lee_closed, sup_coeff(dtheta, p));
    res.i_invariance = std::max(res.i_invariance, sup_coeff(i_omega - omega, p));
    Eigen::MatrixXd g = hermitian_matrix(omega, p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
    res.min_positivity = std::min(res.min_positivity, es.eigenvalues().minCoeff());
  }
  // spot positivity in the quadratic-form sense as well
  for (int i = 0; i < 8 && !samples.empty(); ++i) {
    const Point& p = samples[i % samples.size()];
    Eigen::VectorXd X = rng.vector(p.m());
    Eigen::VectorXd IX = ComplexStructure::matrix(p.n()) * X;
    double v = evaluate_form(omega, p, {X, IX});
    if (v <= 0.0) res.min_positivity = std::min(res.min_positivity, v);
  }
  return res;
}

LCKStructure make_structure(const KForm& omega, const KForm& theta,
                            const std::vector<Point>& samples, Sampler& rng,
                            double tol) {
  LCKStructure s{omega, theta, validate_structure(omega, theta, samples, rng)};
  if (s.residuals.lck > tol || s.residuals.lee_closed > tol)
    throw GeometryError("structure fails LCK validation: residual " +
                        std::to_string(std::max(s.residuals.lck,
                                                s.residuals.lee_closed)));
  if (s.residuals.min_positivity <= 1e-10)
    throw GeometryError("structure fails positivity");
  return s;
}

LCKStructure conformal_rescale(const LCKStructure& s, const ScalarField& f,
                               const std::vector<Point>& samples,
                               Sampler& rng) {
  ScalarField weight;
  weight.n = f.n;
  weight.ord = f.ord;
  auto ev = f.eval;
  weight.eval = [ev](const Point& p) { return exp(-ev(p)); };
  KForm omega2 = scale_form(weight, s.omega);
  // Lee(e^{-f} w) = theta + LEE_RESCALE_SIGN * df
  KForm theta2 =
      s.theta + double(Conventions::LEE_RESCALE_SIGN) * exterior_d(KForm::from_scalar(f));
  LCKStructure out = make_structure(omega2, theta2, samples, rng);
  // cross-check against the least-squares extraction at a few probes
  std::vector<Point> probes(samples.begin(),
                            samples.begin() + std::min<size_t>(samples.size(), 8));
  auto lee = extract_lee_form(omega2, probes, 1e-6);
  for (const auto& p : probes) {
    auto a = lee.theta(p);
    auto b = theta2(p);
    for (size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i].value() - b[i].value()) > 1e-6)
        throw GeometryError("conformal_rescale: Lee form sign convention broken");
  }
  return out;
}

double check_automorphy(const KForm& a, const LinearMap& deck, double chi,
                        const std::vector<Point>& samples, Sampler& rng) {
  KForm defect = pullback(deck, a) - chi * a;
  double worst = 0.0;
  for (const auto& p : samples) {
    worst = std::max(worst, sup_coeff(defect, p));
    if (a.k >= 1 && a.k <= 4) {
      std::vector<Eigen::VectorXd> vs;
      for (int i = 0; i < a.k; ++i) vs.push_back(rng.vector(p.m()));
      worst = std::max(worst, std::abs(evaluate_form(defect, p, vs)));
    }
  }
  return worst;
}

}  // namespace lck
