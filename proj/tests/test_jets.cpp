#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcklab/jet.hpp"
#include "lcklab/errors.hpp"

using namespace lck;

TEST_CASE("jet arithmetic carries exact derivatives") {
  // f(x, y) = exp(sin(x) + x*y) at (0.7, -0.4)
  double x = 0.7, y = -0.4;
  Jet jx = Jet::variable(x, 0, 2);
  Jet jy = Jet::variable(y, 1, 2);
  Jet f = exp(sin(jx) + jx * jy);

  double u = std::sin(x) + x * y;
  double v = std::exp(u);
  double ux = std::cos(x) + y, uy = x;
  CHECK(f.value() == doctest::Approx(v).epsilon(1e-14));
  CHECK(f.grad()(0) == doctest::Approx(v * ux).epsilon(1e-13));
  CHECK(f.grad()(1) == doctest::Approx(v * uy).epsilon(1e-13));
  // f_xx = v*(ux^2 + u_xx), u_xx = -sin(x)
  CHECK(f.hess()(0, 0) ==
        doctest::Approx(v * (ux * ux - std::sin(x))).epsilon(1e-13));
  // f_xy = v*(ux*uy + 1)
  CHECK(f.hess()(0, 1) == doctest::Approx(v * (ux * uy + 1.0)).epsilon(1e-13));
  CHECK(f.hess()(1, 1) == doctest::Approx(v * uy * uy).epsilon(1e-13));
  CHECK(f.hess()(1, 0) == doctest::Approx(f.hess()(0, 1)).epsilon(1e-14));
}

TEST_CASE("quotients, logs and powers") {
  Jet a = Jet::variable(2.0, 0, 1);
  Jet r = log(pow(a, 3)) / a;  // 3 log(a) / a
  CHECK(r.value() == doctest::Approx(3.0 * std::log(2.0) / 2.0));
  double d = 3.0 * (1.0 - std::log(2.0)) / 4.0;
  CHECK(r.grad()(0) == doctest::Approx(d).epsilon(1e-13));
  Jet s = sqrt(a * a);
  CHECK(s.value() == doctest::Approx(2.0));
  CHECK(s.grad()(0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("deriv returns the partial derivative one level shallower") {
  Jet jx = Jet::variable(1.2, 0, 2);
  Jet jy = Jet::variable(0.3, 1, 2);
  Jet f = jx * jx * jy;  // f_x = 2xy, grad(f_x) = (2y, 2x)
  Jet fx = f.deriv(0);
  CHECK(fx.order() == 1);
  CHECK(fx.value() == doctest::Approx(2.0 * 1.2 * 0.3));
  CHECK(fx.grad()(0) == doctest::Approx(0.6));
  CHECK(fx.grad()(1) == doctest::Approx(2.4));
}

TEST_CASE("jet depth is a capability that can be exhausted") {
  Jet f = Jet::variable(1.0, 0, 1);
  Jet f1 = f.deriv(0);
  Jet f2 = f1.deriv(0);
  CHECK(f2.order() == 0);
  CHECK_THROWS_AS(f2.deriv(0), CapabilityError);
  CHECK_THROWS_AS(f2.require(1), CapabilityError);
}

TEST_CASE("pull_linear is the chain rule for linear substitutions") {
  Eigen::MatrixXd F(2, 2);
  F << 1.0, 2.0, -0.5, 0.3;
  Eigen::VectorXd p(2);
  p << 0.4, -0.9;
  Eigen::VectorXd q = F * p;
  // g(z) = f(F z) evaluated two ways
  auto f_at = [](const Eigen::VectorXd& w) {
    Jet a = Jet::variable(w(0), 0, 2), b = Jet::variable(w(1), 1, 2);
    return a * a * b + sin(b);
  };
  Jet direct = [&] {
    Jet a = Jet::variable(p(0), 0, 2), b = Jet::variable(p(1), 1, 2);
    Jet u = F(0, 0) * a + F(0, 1) * b;
    Jet v = F(1, 0) * a + F(1, 1) * b;
    return u * u * v + sin(v);
  }();
  Jet pulled = f_at(q).pull_linear(F);
  CHECK((pulled.grad() - direct.grad()).norm() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK((pulled.hess() - direct.hess()).norm() == doctest::Approx(0.0).epsilon(1e-13));
}
