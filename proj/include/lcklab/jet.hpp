#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "lcklab/errors.hpp"

namespace lck {

/// Truncated Taylor expansion of a scalar quantity in m real variables:
/// value, gradient and Hessian. `ord` records how many derivative levels
/// are actually valid (0, 1 or 2); arithmetic propagates the minimum.
/// Constants keep full depth so they never degrade an expression.
class Jet {
 public:
  Jet() : v_(0), ord_(2) {}

  static Jet constant(double c, int m) {
    Jet j;
    j.v_ = c;
    j.g_ = Eigen::VectorXd::Zero(m);
    j.h_ = Eigen::MatrixXd::Zero(m, m);
    j.ord_ = 2;
    return j;
  }

  static Jet from_parts(double v, Eigen::VectorXd g, Eigen::MatrixXd h,
                        int ord = 2) {
    Jet j;
    j.v_ = v;
    j.g_ = std::move(g);
    j.h_ = std::move(h);
    j.ord_ = ord;
    return j;
  }

  // The i-th coordinate function evaluated at x_i.
  static Jet variable(double x, int i, int m) {
    Jet j = constant(x, m);
    j.g_(i) = 1.0;
    return j;
  }

  double value() const { return v_; }
  const Eigen::VectorXd& grad() const { return g_; }
  const Eigen::MatrixXd& hess() const { return h_; }
  int order() const { return ord_; }
  int dim() const { return static_cast<int>(g_.size()); }

  void require(int ord) const {
    if (ord_ < ord)
      throw CapabilityError("jet depth " + std::to_string(ord_) +
                            " insufficient, need " + std::to_string(ord));
  }

  Jet& clamp_order(int ord) {
    if (ord < ord_) ord_ = ord;
    return *this;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    r.v_ = a.v_ + b.v_;
    r.g_ = a.g_ + b.g_;
    r.h_ = a.h_ + b.h_;
    r.ord_ = std::min(a.ord_, b.ord_);
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    r.v_ = a.v_ - b.v_;
    r.g_ = a.g_ - b.g_;
    r.h_ = a.h_ - b.h_;
    r.ord_ = std::min(a.ord_, b.ord_);
    return r;
  }
  friend Jet operator-(const Jet& a) {
    Jet r = a;
    r.v_ = -r.v_;
    r.g_ = -r.g_;
    r.h_ = -r.h_;
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.v_ = a.v_ * b.v_;
    r.g_ = a.v_ * b.g_ + b.v_ * a.g_;
    r.h_ = a.v_ * b.h_ + b.v_ * a.h_ + a.g_ * b.g_.transpose() +
           b.g_ * a.g_.transpose();
    r.ord_ = std::min(a.ord_, b.ord_);
    return r;
  }
  friend Jet operator*(double c, const Jet& a) {
    Jet r = a;
    r.v_ *= c;
    r.g_ *= c;
    r.h_ *= c;
    return r;
  }
  friend Jet operator*(const Jet& a, double c) { return c * a; }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
  friend Jet operator/(const Jet& a, double c) { return (1.0 / c) * a; }
  friend Jet operator+(const Jet& a, double c) {
    Jet r = a;
    r.v_ += c;
    return r;
  }
  friend Jet operator+(double c, const Jet& a) { return a + c; }
  friend Jet operator-(const Jet& a, double c) { return a + (-c); }
  friend Jet operator-(double c, const Jet& a) { return (-a) + c; }
  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  // Composition with a univariate function given by f, f', f'' at v.
  Jet compose(double f, double fp, double fpp) const {
    Jet r;
    r.v_ = f;
    r.g_ = fp * g_;
    r.h_ = fp * h_ + fpp * g_ * g_.transpose();
    r.ord_ = ord_;
    return r;
  }

  friend Jet inv(const Jet& a) {
    double iv = 1.0 / a.v_;
    return a.compose(iv, -iv * iv, 2.0 * iv * iv * iv);
  }
  friend Jet exp(const Jet& a) {
    double e = std::exp(a.v_);
    return a.compose(e, e, e);
  }
  friend Jet log(const Jet& a) {
    double iv = 1.0 / a.v_;
    return a.compose(std::log(a.v_), iv, -iv * iv);
  }
  friend Jet sqrt(const Jet& a) {
    double s = std::sqrt(a.v_);
    return a.compose(s, 0.5 / s, -0.25 / (s * a.v_));
  }
  friend Jet sin(const Jet& a) {
    return a.compose(std::sin(a.v_), std::cos(a.v_), -std::sin(a.v_));
  }
  friend Jet cos(const Jet& a) {
    return a.compose(std::cos(a.v_), -std::sin(a.v_), -std::cos(a.v_));
  }
  friend Jet pow(const Jet& a, int k) {
    double p = std::pow(a.v_, k - 2);
    return a.compose(p * a.v_ * a.v_, k * p * a.v_, k * (k - 1) * p);
  }

  /// Partial derivative in direction `dir`, one jet level shallower.
  Jet deriv(int dir) const {
    require(1);
    Jet r;
    r.v_ = g_(dir);
    r.g_ = (ord_ >= 2) ? Eigen::VectorXd(h_.col(dir))
                       : Eigen::VectorXd(Eigen::VectorXd::Zero(dim()));
    r.h_ = Eigen::MatrixXd::Zero(dim(), dim());
    r.ord_ = ord_ - 1;
    return r;
  }

  /// Reinterpret a jet taken at q = F p as a jet in p (chain rule through
  /// the linear map F). Used by pullbacks.
  Jet pull_linear(const Eigen::MatrixXd& F) const {
    Jet r;
    r.v_ = v_;
    r.g_ = F.transpose() * g_;
    r.h_ = F.transpose() * h_ * F;
    r.ord_ = ord_;
    return r;
  }

 private:
  double v_;
  Eigen::VectorXd g_;
  Eigen::MatrixXd h_;
  int ord_;
};

}  // namespace lck
