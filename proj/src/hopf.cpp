#include "lcklab/hopf.hpp"

#include <Eigen/Eigenvalues>

#include "lcklab/complex_structure.hpp"
#include "lcklab/conventions.hpp"
#include "lcklab/ops.hpp"

namespace lck {

namespace {

Eigen::MatrixXd complex_scalar_matrix(int n, std::complex<double> alpha) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    A(2 * j, 2 * j) = alpha.real();
    A(2 * j, 2 * j + 1) = -alpha.imag();
    A(2 * j + 1, 2 * j) = alpha.imag();
    A(2 * j + 1, 2 * j + 1) = alpha.real();
  }
  return A;
}

KForm flat_kahler_form(int n) {
  // dd^c |z|^2 with the frozen conventions
  const auto& tab = IndexTable::get(2 * n, 2);
  Eigen::VectorXd comp = Eigen::VectorXd::Zero(tab.size());
  for (int j = 0; j < n; ++j)
    comp(tab.rank({2 * j, 2 * j + 1})) = Conventions::DDC_NORM2;
  return KForm::constant(n, 2, comp);
}

ScalarField norm2_field(int n) {
  return {n, 2, [](const Point& p) {
            auto c = coordinate_jets(p);
            Jet s = Jet::constant(0.0, p.m());
            for (const auto& j : c) s += j * j;
            return s;
          }};
}

}  // namespace

HomothetyField HomothetyField::scaled(double c) const {
  HomothetyField out;
  out.generator = c * generator;
  out.companion_generator = c * companion_generator;
  out.lambda = c * lambda;
  out.field = VectorField::linear(out.generator);
  out.companion = VectorField::linear(out.companion_generator);
  return out;
}

HopfModel make_classical_hopf(int n, std::complex<double> alpha) {
  if (n < 2) throw StructuralError("classical Hopf model needs n >= 2");
  double mod = std::abs(alpha);
  if (mod <= 0.0 || mod >= 1.0)
    throw GeometryError("deck eigenvalue must satisfy 0 < |alpha| < 1");
  HopfModel model{n, LinearMap(complex_scalar_matrix(n, alpha)), {}, true,
                  KForm{},      KForm{}, KForm{}, ScalarField{},
                  VectorField{}, VectorField{}};
  model.deck_character.chi[1] = mod * mod;
  model.omega_flat = flat_kahler_form(n);

  ScalarField r2 = norm2_field(n);
  model.flat_potential = r2;
  ScalarField inv_r2{n, 2, [r2](const Point& p) { return inv(r2(p)); }};
  model.omega_lck = scale_form(inv_r2, model.omega_flat);
  // theta = -d log |z|^2 = -(2/|z|^2) sum_i x_i dx_i, with full 2-jets
  model.theta_lck.n = n;
  model.theta_lck.k = 1;
  model.theta_lck.ord = 2;
  model.theta_lck.coeffs = [](const Point& p) {
    auto c = coordinate_jets(p);
    Jet s = Jet::constant(0.0, p.m());
    for (const auto& j : c) s += j * j;
    Jet f = -2.0 * inv(s);
    std::vector<Jet> out;
    out.reserve(p.m());
    for (const auto& j : c) out.push_back(f * j);
    return out;
  };
  model.euler = VectorField::linear(
      Eigen::MatrixXd::Identity(2 * n, 2 * n));
  model.rotation = VectorField::linear(ComplexStructure::matrix(n));
  return model;
}

HopfModel make_linear_hopf(int n, const LinearMap& A) {
  if (n < 2) throw StructuralError("linear Hopf model needs n >= 2");
  if (static_cast<int>(A.M.rows()) != 2 * n)
    throw StructuralError("contraction size does not match n");
  if (!A.is_complex_linear())
    throw GeometryError("contraction must be complex-linear");
  Eigen::EigenSolver<Eigen::MatrixXd> es(A.M);
  std::string offending;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double mod = std::abs(es.eigenvalues()(i));
    if (mod >= 1.0 || mod <= 0.0)
      offending += (offending.empty() ? "" : ", ") + std::to_string(mod);
  }
  if (!offending.empty())
    throw GeometryError("not a contraction, eigenvalue moduli: " + offending);

  // similarity test: A = alpha * Id in complex terms
  std::complex<double> a00(A.M(0, 0), A.M(1, 0));
  bool similarity =
      (A.M - complex_scalar_matrix(n, a00)).cwiseAbs().maxCoeff() < 1e-14;
  if (similarity) return make_classical_hopf(n, a00);

  HopfModel model{n, A, {}, false, KForm{}, KForm{}, KForm{}, ScalarField{},
                  VectorField{}, VectorField{}};
  // character of the flat form under a non-similarity deck is not defined;
  // record |det|^{1/n} as the volume character instead
  model.deck_character.chi[1] = std::pow(std::abs(A.M.determinant()), 1.0 / n);
  return model;
}

HomothetyField homothety_field(const HopfModel& model, double lambda,
                               const std::optional<Eigen::MatrixXd>& killing) {
  if (!model.has_catalog)
    throw GeometryError("homothety_field: model has no flat metric catalog");
  if (lambda <= 0.0) throw StructuralError("lambda must be positive");
  int m = 2 * model.n;
  Eigen::MatrixXd G = (lambda / 2.0) * Eigen::MatrixXd::Identity(m, m);
  if (killing) {
    // Killing check: Lie_K (flat form) = 0
    VectorField K = VectorField::linear(*killing);
    KForm lie = lie_derivative(K, model.omega_flat);
    Point probe(Eigen::VectorXd::LinSpaced(m, 0.3, 1.7));
    double res = sup_coeff(lie, probe);
    if (res > 1e-10)
      throw GeometryError("killing part fails its Killing check, residual " +
                          std::to_string(res));
    G += *killing;
  }
  HomothetyField A;
  A.generator = G;
  A.companion_generator = ComplexStructure::matrix(model.n) * G;
  A.lambda = lambda;
  A.field = VectorField::linear(A.generator);
  A.companion = VectorField::linear(A.companion_generator);

  // re-verify the homothety identity
  KForm defect = lie_derivative(A.field, model.omega_flat) -
                 lambda * model.omega_flat;
  Point probe(Eigen::VectorXd::LinSpaced(m, 0.2, 1.1));
  if (sup_coeff(defect, probe) > 1e-10)
    throw GeometryError("field is not a homothety for the flat form");
  return A;
}

Eigen::MatrixXd rotation_generator(const Eigen::VectorXd& rates) {
  int n = static_cast<int>(rates.size());
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    K(2 * j + 1, 2 * j) = rates(j);
    K(2 * j, 2 * j + 1) = -rates(j);
  }
  return K;
}

CircleAction deck_circle_action(const HopfModel& model) {
  const Eigen::MatrixXd& D = model.deck.M;
  Eigen::EigenSolver<Eigen::MatrixXd> es(D);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-12 || ev.real() <= 0.0)
      throw GeometryError(
          "deck_circle_action: principal log needs real positive eigenvalues");
  }
  // D symmetric-diagonalizable with positive spectrum: log through the
  // eigendecomposition; for alpha * Id this is log(alpha) * Id.
  Eigen::MatrixXd V = es.eigenvectors().real();
  Eigen::VectorXd lambdas = es.eigenvalues().real();
  Eigen::MatrixXd G =
      V * lambdas.array().log().matrix().asDiagonal() * V.inverse();
  return CircleAction(LinearFlow(G), 1.0, D);
}

LCKStructure hopf_lck_structure(const HopfModel& model,
                                const std::vector<Point>& samples,
                                Sampler& rng) {
  if (!model.has_catalog)
    throw GeometryError("hopf_lck_structure: model has no metric catalog");
  return make_structure(model.omega_lck, model.theta_lck, samples, rng);
}

}  // namespace lck
