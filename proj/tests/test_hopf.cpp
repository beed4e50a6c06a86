#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcklab/complex_structure.hpp"
#include "lcklab/hopf.hpp"
#include "support.hpp"

using namespace lck;
using namespace lcktest;

namespace {
constexpr int N = 2;
}

TEST_CASE("classical model catalog values") {
  double alpha = 0.5;
  HopfModel m = make_classical_hopf(N, alpha);
  CHECK(m.chi() == doctest::Approx(alpha * alpha).epsilon(1e-14));
  CHECK(m.has_catalog);

  Sampler rng(401);
  Point p = rng.point(N);
  // omega_flat = 4 (dx1^dy1 + dx2^dy2)
  Eigen::MatrixXd W = form2_matrix(m.omega_flat, p);
  CHECK(W(0, 1) == doctest::Approx(4.0));
  CHECK(W(2, 3) == doctest::Approx(4.0));
  CHECK(W(0, 2) == doctest::Approx(0.0));
  // omega_lck = omega_flat / |z|^2
  CHECK(form2_matrix(m.omega_lck, p)(0, 1) ==
        doctest::Approx(4.0 / p.norm2()).epsilon(1e-13));
  // theta = -d log |z|^2
  auto th = m.theta_lck(p);
  for (int a = 0; a < 4; ++a)
    CHECK(th[a].value() == doctest::Approx(-2.0 * p.x(a) / p.norm2()));
  CHECK(m.flat_potential(p).value() == doctest::Approx(p.norm2()));

  CHECK_THROWS_AS(make_classical_hopf(N, 1.2), GeometryError);
  CHECK_THROWS_AS(make_classical_hopf(1, 0.5), StructuralError);
}

TEST_CASE("linear model: similarity detection and character") {
  // alpha * rotation is a similarity: catalog present
  double alpha = 0.4, phase = 0.8;
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(4, 4);
  double c = std::cos(phase), s = std::sin(phase);
  for (int j = 0; j < 2; ++j) {
    R(2 * j, 2 * j) = c;
    R(2 * j, 2 * j + 1) = -s;
    R(2 * j + 1, 2 * j) = s;
    R(2 * j + 1, 2 * j + 1) = c;
  }
  HopfModel sim = make_linear_hopf(N, LinearMap(alpha * R));
  CHECK(sim.has_catalog);
  CHECK(sim.chi() == doctest::Approx(alpha * alpha).epsilon(1e-12));

  // distinct moduli: no catalog, character |det|^{1/n}
  Eigen::VectorXd d(4);
  d << 0.5, 0.5, 0.3, 0.3;
  HopfModel gen = make_linear_hopf(N, LinearMap(d.asDiagonal()));
  CHECK_FALSE(gen.has_catalog);
  CHECK(gen.chi() == doctest::Approx(0.15).epsilon(1e-12));

  // non-contractions and non-complex-linear maps are rejected
  CHECK_THROWS_AS(make_linear_hopf(N, LinearMap(Eigen::MatrixXd::Identity(4, 4))),
                  GeometryError);
  Eigen::MatrixXd bad = 0.5 * Eigen::MatrixXd::Identity(4, 4);
  bad(0, 1) = 0.2;  // breaks commutation with I
  CHECK_THROWS_AS(make_linear_hopf(N, LinearMap(bad)), GeometryError);
}

TEST_CASE("homothety fields: Lie_A omega = lambda omega, companion behavior") {
  HopfModel m = make_classical_hopf(N, 0.5);
  Sampler rng(402);
  Point p = rng.point(N);
  double lambda = 2.0;

  Eigen::VectorXd rates(2);
  rates << 0.2, -0.1;
  for (const auto& A : {homothety_field(m, lambda),
                        homothety_field(m, lambda, rotation_generator(rates))}) {
    KForm defect = lie_derivative(A.field, m.omega_flat) - lambda * m.omega_flat;
    CHECK(sup_coeff(defect, p) < 1e-10);
    CHECK(A.lambda == doctest::Approx(lambda));
    // the companion generator is I G (pointwise I of a linear field)
    auto ac = A.companion(p);
    auto a = A.field(p);
    Eigen::VectorXd av(4), acv(4);
    for (int i = 0; i < 4; ++i) {
      av(i) = a[i].value();
      acv(i) = ac[i].value();
    }
    CHECK((acv - ComplexStructure::matrix(N) * av).norm() < 1e-12);
  }

  // Killing check: a symmetric non-rotation part is rejected
  Eigen::MatrixXd sym = 0.1 * Eigen::MatrixXd::Identity(4, 4);
  CHECK_THROWS_AS(homothety_field(m, lambda, sym), GeometryError);

  // scaling the field scales lambda
  HomothetyField A = homothety_field(m, lambda);
  CHECK(A.scaled(0.5).lambda == doctest::Approx(1.0));
  CHECK(A.normalized().lambda == doctest::Approx(1.0));
}

TEST_CASE("deck circle action: period map is the deck transformation") {
  for (double c : {0.5, 1.0, 2.0}) {
    HopfModel m = make_classical_hopf(N, std::exp(-c));
    CircleAction act = deck_circle_action(m);
    CHECK((act.flow.at(act.T) - m.deck.M).norm() < 1e-10);

    Sampler rng(403);
    QuadratureRule q(32);
    double v = loop_integral(m.theta_lck, act, rng.point(N), q);
    CHECK(v == doctest::Approx(2.0 * c).epsilon(1e-10));
  }
  // rotation orbits carry no monodromy
  HopfModel m = make_classical_hopf(N, 0.5);
  Sampler rng(404);
  double v = loop_integral(m.theta_lck, CircleAction::rotation(N),
                           rng.point(N), QuadratureRule(32));
  CHECK(std::abs(v) < 1e-12);
}
