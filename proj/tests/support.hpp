#pragma once

// Shared test helpers: random polynomial forms and independent oracles
// (finite differences, shuffle-sum wedge values) that never touch the
// coefficient pipelines they are checking.

#include <unsupported/Eigen/MatrixFunctions>

#include "lcklab/flows.hpp"
#include "lcklab/ops.hpp"
#include "lcklab/sampling.hpp"

namespace lcktest {

using namespace lck;

struct Poly {
  int m = 0;
  // (coefficient, exponent vector) terms
  std::vector<std::pair<double, std::vector<int>>> terms;

  static Poly random(Sampler& rng, int m, int deg = 3, int nterms = 4) {
    Poly p;
    p.m = m;
    for (int t = 0; t < nterms; ++t) {
      std::vector<int> e(m, 0);
      int total = static_cast<int>(rng.uniform(0.0, deg + 0.999));
      for (int d = 0; d < total; ++d)
        e[static_cast<int>(rng.uniform(0.0, m - 1e-9))]++;
      p.terms.push_back({rng.uniform(-1.0, 1.0), std::move(e)});
    }
    return p;
  }

  Jet eval_jet(const Point& pt) const {
    auto z = coordinate_jets(pt);
    Jet s = Jet::constant(0.0, m);
    for (const auto& [c, e] : terms) {
      Jet t = Jet::constant(c, m);
      for (int i = 0; i < m; ++i)
        for (int r = 0; r < e[i]; ++r) t = t * z[i];
      s = s + t;
    }
    return s;
  }

  // plain-double evaluation, independent of the jet algebra
  double value(const Eigen::VectorXd& x) const {
    double s = 0.0;
    for (const auto& [c, e] : terms) {
      double t = c;
      for (int i = 0; i < m; ++i)
        for (int r = 0; r < e[i]; ++r) t *= x(i);
      s += t;
    }
    return s;
  }
};

inline ScalarField poly_scalar(const Poly& p, int n) {
  return {n, 2, [p](const Point& pt) { return p.eval_jet(pt); }};
}

struct PolyForm {
  int n = 0, k = 0;
  std::vector<Poly> comp;  // one polynomial per increasing multi-index

  KForm form() const {
    KForm a;
    a.n = n;
    a.k = k;
    a.ord = 2;
    auto cs = comp;
    a.coeffs = [cs](const Point& pt) {
      std::vector<Jet> out;
      out.reserve(cs.size());
      for (const auto& c : cs) out.push_back(c.eval_jet(pt));
      return out;
    };
    return a;
  }

  // determinant-free direct value: sum over multi-indices of
  // coeff * det of the selected vector rows
  double value(const Eigen::VectorXd& x,
               const std::vector<Eigen::VectorXd>& vs) const {
    const auto& tab = IndexTable::get(2 * n, k);
    double s = 0.0;
    for (int r = 0; r < tab.size(); ++r) {
      const auto& J = tab.at(r);
      Eigen::MatrixXd M(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M(i, j) = vs[j](J[i]);
      s += comp[r].value(x) * M.determinant();
    }
    return s;
  }
};

inline PolyForm random_poly_form(Sampler& rng, int n, int k, int deg = 3) {
  PolyForm f;
  f.n = n;
  f.k = k;
  int nc = binom(2 * n, k);
  for (int i = 0; i < nc; ++i) f.comp.push_back(Poly::random(rng, 2 * n, deg));
  return f;
}

/// (d a)(v_0,...,v_k) for constant vectors by the alternating-sum formula,
/// with each directional derivative taken by central finite differences of
/// the direct PolyForm value.
inline double fd_d_value(const PolyForm& a, const Point& p,
                         const std::vector<Eigen::VectorXd>& vs,
                         double h = 1e-5) {
  double s = 0.0;
  for (size_t i = 0; i < vs.size(); ++i) {
    std::vector<Eigen::VectorXd> rest;
    for (size_t j = 0; j < vs.size(); ++j)
      if (j != i) rest.push_back(vs[j]);
    double plus = a.value(p.x + h * vs[i], rest);
    double minus = a.value(p.x - h * vs[i], rest);
    double sign = (i % 2 == 0) ? 1.0 : -1.0;
    s += sign * (plus - minus) / (2.0 * h);
  }
  return s;
}

/// (Lie_X a)(v_1,...,v_k) for the linear field X = Gz, via a central finite
/// difference of the genuine flow pullback (matrix exponential only).
inline double fd_lie_value(const PolyForm& a, const Eigen::MatrixXd& G,
                           const Point& p, const std::vector<Eigen::VectorXd>& vs,
                           double h = 1e-5) {
  auto pulled = [&](double t) {
    Eigen::MatrixXd E = (t * G).exp();
    std::vector<Eigen::VectorXd> w;
    for (const auto& v : vs) w.push_back(E * v);
    return a.value(E * p.x, w);
  };
  return (pulled(h) - pulled(-h)) / (2.0 * h);
}

/// (a ^ b)(v_1,...,v_{j+k}) by the shuffle sum over the direct values.
inline double wedge_value_oracle(const PolyForm& a, const PolyForm& b,
                                 const Point& p,
                                 const std::vector<Eigen::VectorXd>& vs) {
  int j = a.k, k = b.k;
  const auto& tab = IndexTable::get(j + k, j);
  double s = 0.0;
  for (int r = 0; r < tab.size(); ++r) {
    const auto& S = tab.at(r);
    std::vector<bool> in(j + k, false);
    for (int i : S) in[i] = true;
    std::vector<Eigen::VectorXd> va, vb;
    for (int i = 0; i < j + k; ++i) (in[i] ? va : vb).push_back(vs[i]);
    // inversions between S and its complement give the shuffle sign
    int inv = 0;
    int seen_comp = 0;
    for (int i = 0; i < j + k; ++i) {
      if (in[i])
        inv += seen_comp;
      else
        ++seen_comp;
    }
    double sign = (inv % 2 == 0) ? 1.0 : -1.0;
    s += sign * a.value(p.x, va) * b.value(p.x, vb);
  }
  return s;
}

inline std::vector<Eigen::VectorXd> random_vectors(Sampler& rng, int m, int c) {
  std::vector<Eigen::VectorXd> vs;
  for (int i = 0; i < c; ++i) vs.push_back(rng.vector(m));
  return vs;
}

}  // namespace lcktest
