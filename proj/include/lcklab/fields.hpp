#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lcklab/jet.hpp"
#include "lcklab/multiindex.hpp"
#include "lcklab/point.hpp"

namespace lck {

/// Coordinate jets at a point: the starting values every closed-form field
/// evaluator builds its expression from.
inline std::vector<Jet> coordinate_jets(const Point& p) {
  std::vector<Jet> c;
  c.reserve(p.m());
  for (int i = 0; i < p.m(); ++i) c.push_back(Jet::variable(p.x(i), i, p.m()));
  return c;
}

/// Smooth real function on (an open subset of) R^{2n} carrying a 2-jet.
struct ScalarField {
  int n = 0;
  int ord = 2;  // jet depth the evaluator guarantees
  std::function<Jet(const Point&)> eval;

  Jet operator()(const Point& p) const { return eval(p); }

  static ScalarField constant(int n, double c) {
    return {n, 2, [c](const Point& p) { return Jet::constant(c, p.m()); }};
  }
};

/// Smooth vector field, components carried with jets.
struct VectorField {
  int n = 0;
  int ord = 2;
  std::function<std::vector<Jet>(const Point&)> eval;

  std::vector<Jet> operator()(const Point& p) const { return eval(p); }

  /// Linear field p -> G p.
  static VectorField linear(const Eigen::MatrixXd& G) {
    int n = static_cast<int>(G.rows()) / 2;
    return {n, 2, [G](const Point& p) {
              auto c = coordinate_jets(p);
              std::vector<Jet> out;
              out.reserve(p.m());
              for (int a = 0; a < p.m(); ++a) {
                Jet s = Jet::constant(0.0, p.m());
                for (int b = 0; b < p.m(); ++b)
                  if (G(a, b) != 0.0) s += G(a, b) * c[b];
                out.push_back(s);
              }
              return out;
            }};
  }

  static VectorField zero(int n) {
    return {n, 2, [](const Point& p) {
              return std::vector<Jet>(p.m(), Jet::constant(0.0, p.m()));
            }};
  }
};

/// Degree-k form with dense coefficients over strictly increasing
/// multi-indices (IndexTable order). `ord` is the jet depth of the
/// coefficients; each exterior derivative consumes one level.
struct KForm {
  int n = 0;
  int k = 0;
  int ord = 2;
  bool is_zero = false;  // short-circuits operators on the zero form
  std::function<std::vector<Jet>(const Point&)> coeffs;

  int m() const { return 2 * n; }
  int ncomp() const { return binom(m(), k); }

  std::vector<Jet> operator()(const Point& p) const {
    if (is_zero)
      return std::vector<Jet>(ncomp(), Jet::constant(0.0, p.m()));
    return coeffs(p);
  }

  static KForm zero(int n, int k) {
    KForm f;
    f.n = n;
    f.k = k;
    f.is_zero = true;
    f.coeffs = nullptr;
    return f;
  }

  /// Constant-coefficient form.
  static KForm constant(int n, int k, Eigen::VectorXd comp) {
    KForm f;
    f.n = n;
    f.k = k;
    f.coeffs = [comp, n, k](const Point& p) {
      std::vector<Jet> out;
      out.reserve(comp.size());
      for (int i = 0; i < comp.size(); ++i)
        out.push_back(Jet::constant(comp(i), p.m()));
      return out;
    };
    return f;
  }

  /// Basis form dx_{J} for one multi-index.
  static KForm basis(int n, const MultiIndex& J) {
    int k = static_cast<int>(J.size());
    Eigen::VectorXd comp = Eigen::VectorXd::Zero(binom(2 * n, k));
    comp(IndexTable::get(2 * n, k).rank(J)) = 1.0;
    return constant(n, k, comp);
  }

  /// 0-form wrapper around a scalar field.
  static KForm from_scalar(const ScalarField& f) {
    KForm a;
    a.n = f.n;
    a.k = 0;
    a.ord = f.ord;
    auto ev = f.eval;
    a.coeffs = [ev](const Point& p) { return std::vector<Jet>{ev(p)}; };
    return a;
  }
};

inline KForm operator+(const KForm& a, const KForm& b) {
  if (a.n != b.n || a.k != b.k)
    throw StructuralError("form sum: degree or dimension mismatch");
  if (a.is_zero) return b;
  if (b.is_zero) return a;
  KForm r;
  r.n = a.n;
  r.k = a.k;
  r.ord = std::min(a.ord, b.ord);
  auto ca = a.coeffs, cb = b.coeffs;
  r.coeffs = [ca, cb](const Point& p) {
    auto u = ca(p);
    auto v = cb(p);
    for (size_t i = 0; i < u.size(); ++i) u[i] += v[i];
    return u;
  };
  return r;
}

inline KForm operator*(double c, const KForm& a) {
  if (a.is_zero || c == 0.0) return KForm::zero(a.n, a.k);
  KForm r = a;
  auto ca = a.coeffs;
  r.coeffs = [ca, c](const Point& p) {
    auto u = ca(p);
    for (auto& j : u) j = c * j;
    return u;
  };
  return r;
}

inline KForm operator-(const KForm& a, const KForm& b) { return a + (-1.0) * b; }

/// Multiply a form by a scalar field (used for conformal rescaling).
inline KForm scale_form(const ScalarField& f, const KForm& a) {
  if (a.is_zero) return a;
  KForm r = a;
  r.ord = std::min(a.ord, f.ord);
  auto ca = a.coeffs;
  auto ev = f.eval;
  r.coeffs = [ca, ev](const Point& p) {
    auto u = ca(p);
    Jet s = ev(p);
    for (auto& j : u) j = s * j;
    return u;
  };
  return r;
}

}  // namespace lck
