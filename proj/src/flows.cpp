#include "lcklab/flows.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "lcklab/complex_structure.hpp"
#include "lcklab/ops.hpp"

namespace lck {

LinearMap::LinearMap(Eigen::MatrixXd m) : M(std::move(m)) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0)
    throw StructuralError("linear map must be square of even size");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (!lu.isInvertible()) throw StructuralError("linear map is singular");
}

bool LinearMap::is_complex_linear(double tol) const {
  return ComplexStructure::complex_linearity_defect(M) <= tol;
}

Eigen::MatrixXd LinearFlow::at(double t) const {
  return Eigen::MatrixXd(t * G).exp();
}

CircleAction::CircleAction(LinearFlow f, double period, Eigen::MatrixXd D,
                           double tol)
    : flow(std::move(f)), T(period), period_map(std::move(D)) {
  if (T <= 0) throw StructuralError("circle action needs positive period");
  double defect = (flow.at(T) - period_map).cwiseAbs().maxCoeff();
  if (defect > tol)
    throw GeometryError("period map defect " + std::to_string(defect));
}

CircleAction CircleAction::rotation(int n) {
  Eigen::MatrixXd J = ComplexStructure::matrix(n);
  return CircleAction(LinearFlow(J), 2.0 * M_PI,
                      Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

KForm pullback(const LinearMap& map, const KForm& a) {
  if (map.dim_n() != a.n) throw StructuralError("pullback: dimension mismatch");
  if (a.is_zero) return a;
  int m = a.m(), k = a.k;
  Eigen::MatrixXd F = map.M;

  if (k == 0) {
    KForm r = a;
    auto ca = a.coeffs;
    r.coeffs = [ca, F](const Point& p) {
      auto u = ca(Point(F * p.x));
      for (auto& j : u) j = j.pull_linear(F);
      return u;
    };
    return r;
  }

  // (F*a)_J = sum_K a_K(Fp) * det(F[K rows, J cols])
  const auto& tab = IndexTable::get(m, k);
  int nc = tab.size();
  Eigen::MatrixXd minors(nc, nc);
  Eigen::MatrixXd sub(k, k);
  for (int K = 0; K < nc; ++K)
    for (int J = 0; J < nc; ++J) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = F(tab.at(K)[i], tab.at(J)[j]);
      minors(K, J) = sub.determinant();
    }

  KForm r = a;
  auto ca = a.coeffs;
  r.coeffs = [ca, F, minors, nc](const Point& p) {
    auto u = ca(Point(F * p.x));
    for (auto& j : u) j = j.pull_linear(F);
    std::vector<Jet> out(nc, Jet::constant(0.0, p.m()));
    for (int J = 0; J < nc; ++J)
      for (int K = 0; K < nc; ++K)
        if (minors(K, J) != 0.0) out[J] += minors(K, J) * u[K];
    return out;
  };
  return r;
}

ScalarField pullback_scalar(const LinearMap& map, const ScalarField& f) {
  ScalarField r = f;
  Eigen::MatrixXd F = map.M;
  auto ev = f.eval;
  r.eval = [ev, F](const Point& p) {
    return ev(Point(F * p.x)).pull_linear(F);
  };
  return r;
}

KForm flow_pullback_form(const LinearFlow& flow, double t, const KForm& a) {
  return pullback(LinearMap(flow.at(t)), a);
}

KForm average_form_over_circle(const CircleAction& action, const KForm& a,
                               const QuadratureRule& q) {
  auto nd = q.nodes(0.0, action.T);
  KForm acc = KForm::zero(a.n, a.k);
  for (size_t i = 0; i < nd.t.size(); ++i)
    acc = acc + (nd.w[i] / action.T) * flow_pullback_form(action.flow, nd.t[i], a);
  return acc;
}

ScalarField average_scalar_over_circle(const CircleAction& action,
                                       const ScalarField& f,
                                       const QuadratureRule& q) {
  auto nd = q.nodes(0.0, action.T);
  std::vector<ScalarField> terms;
  terms.reserve(nd.t.size());
  for (double t : nd.t)
    terms.push_back(pullback_scalar(LinearMap(action.flow.at(t)), f));
  ScalarField r = f;
  double T = action.T;
  auto w = nd.w;
  r.eval = [terms, w, T](const Point& p) {
    Jet s = Jet::constant(0.0, p.m());
    for (size_t i = 0; i < terms.size(); ++i) s += (w[i] / T) * terms[i](p);
    return s;
  };
  return r;
}

double loop_integral(const KForm& theta, const CircleAction& action,
                     const Point& base, const QuadratureRule& q,
                     double closed_tol) {
  if (theta.k != 1) throw DegreeError("loop_integral: need a 1-form");
  KForm dtheta = exterior_d(theta);
  auto nd = q.nodes(0.0, action.T);
  double total = 0.0, worst_closed = 0.0;
  for (size_t i = 0; i < nd.t.size(); ++i) {
    Point z(action.flow.at(nd.t[i]) * base.x);
    if (i % 16 == 0) worst_closed = std::max(worst_closed, sup_coeff(dtheta, z));
    Eigen::VectorXd vel = action.flow.G * z.x;
    auto comps = theta(z);
    double val = 0.0;
    for (int a = 0; a < z.m(); ++a) val += comps[a].value() * vel(a);
    total += nd.w[i] * val;
  }
  if (worst_closed > closed_tol)
    throw GeometryError("loop_integral: 1-form not closed, d-residual " +
                        std::to_string(worst_closed));
  return total;
}

}  // namespace lck
