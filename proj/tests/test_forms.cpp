#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcklab/complex_structure.hpp"
#include "lcklab/conventions.hpp"
#include "support.hpp"

using namespace lck;
using namespace lcktest;

namespace {
constexpr int N = 2;  // complex dimension, m = 4
}

TEST_CASE("wedge agrees with the shuffle-sum oracle") {
  Sampler rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    int j = 1 + (rep % 2), k = 1;
    PolyForm a = random_poly_form(rng, N, j);
    PolyForm b = random_poly_form(rng, N, k);
    KForm w = wedge(a.form(), b.form());
    Point p = rng.point(N);
    auto vs = random_vectors(rng, 2 * N, j + k);
    double lib = evaluate_form(w, p, vs);
    double oracle = wedge_value_oracle(a, b, p, vs);
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("wedge is graded commutative") {
  Sampler rng(102);
  PolyForm a = random_poly_form(rng, N, 1);
  PolyForm b = random_poly_form(rng, N, 2);
  KForm lhs = wedge(a.form(), b.form());
  KForm rhs = wedge(b.form(), a.form());  // (-1)^{1*2} = +1
  Point p = rng.point(N);
  CHECK(sup_coeff(lhs - rhs, p) == doctest::Approx(0.0).epsilon(1e-12));

  PolyForm c = random_poly_form(rng, N, 1);
  KForm anti = wedge(a.form(), c.form()) + wedge(c.form(), a.form());
  CHECK(sup_coeff(anti, p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("exterior derivative: d matches finite differences, d^2 = 0") {
  Sampler rng(103);
  for (int rep = 0; rep < 10; ++rep) {
    PolyForm a = random_poly_form(rng, N, 1 + (rep % 2));
    KForm da = exterior_d(a.form());
    Point p = rng.point(N);
    auto vs = random_vectors(rng, 2 * N, a.k + 1);
    CHECK(evaluate_form(da, p, vs) ==
          doctest::Approx(fd_d_value(a, p, vs)).epsilon(1e-6));
    KForm dda = exterior_d(da);
    CHECK(sup_coeff(dda, p) == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("Leibniz rule for d over the wedge") {
  Sampler rng(104);
  PolyForm a = random_poly_form(rng, N, 1);
  PolyForm b = random_poly_form(rng, N, 1);
  KForm lhs = exterior_d(wedge(a.form(), b.form()));
  KForm rhs = wedge(exterior_d(a.form()), b.form()) -
              wedge(a.form(), exterior_d(b.form()));
  Point p = rng.point(N);
  CHECK(sup_coeff(lhs - rhs, p) == doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("complex structure action on forms") {
  Sampler rng(105);
  Point p = rng.point(N);

  PolyForm a = random_poly_form(rng, N, 1);
  KForm ii = apply_I(apply_I(a.form()));
  CHECK(sup_coeff(ii + a.form(), p) == doctest::Approx(0.0).epsilon(1e-12));

  // the flat Kahler form is I-invariant with the frozen sign
  KForm flat = KForm::zero(N, 2);
  for (int j = 0; j < N; ++j)
    flat = flat + 4.0 * wedge(KForm::basis(N, {2 * j}), KForm::basis(N, {2 * j + 1}));
  CHECK(sup_coeff(apply_I(flat) - double(Conventions::I_FLAT_SIGN) * flat, p) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // evaluation route: (I a)(X) = -a(I X) for 1-forms
  auto vs = random_vectors(rng, 2 * N, 1);
  Eigen::VectorXd Iv = ComplexStructure::matrix(N) * vs[0];
  CHECK(evaluate_form(apply_I(a.form()), p, vs) ==
        doctest::Approx(-a.value(p.x, {Iv})).epsilon(1e-10));
}

TEST_CASE("dd^c of |z|^2 is the flat Kahler form") {
  ScalarField r2{N, 2, [](const Point& p) {
                   auto z = coordinate_jets(p);
                   Jet s = z[0] * z[0];
                   for (int i = 1; i < p.m(); ++i) s = s + z[i] * z[i];
                   return s;
                 }};
  KForm ddc = dd_c(r2);
  KForm flat = KForm::zero(N, 2);
  for (int j = 0; j < N; ++j)
    flat = flat + Conventions::DDC_NORM2 *
                      wedge(KForm::basis(N, {2 * j}), KForm::basis(N, {2 * j + 1}));
  Sampler rng(106);
  for (int i = 0; i < 5; ++i)
    CHECK(sup_coeff(ddc - flat, rng.point(N)) ==
          doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("interior product is an antiderivation and squares to zero") {
  Sampler rng(107);
  PolyForm a = random_poly_form(rng, N, 1);
  PolyForm b = random_poly_form(rng, N, 2);
  Eigen::MatrixXd G = Eigen::MatrixXd::Random(2 * N, 2 * N);
  VectorField X = VectorField::linear(G);
  Point p = rng.point(N);

  KForm lhs = interior_product(X, wedge(a.form(), b.form()));
  KForm ia = interior_product(X, a.form());
  KForm ib = interior_product(X, b.form());
  KForm want = scale_form(ScalarField{N, 2,
                                      [ia](const Point& q) { return ia(q)[0]; }},
                          b.form()) -
               wedge(a.form(), ib);
  CHECK(sup_coeff(lhs - want, p) == doctest::Approx(0.0).epsilon(1e-11));

  KForm ii = interior_product(X, interior_product(X, b.form()));
  CHECK(sup_coeff(ii, p) == doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("Lie derivative: Cartan formula matches the flow derivative") {
  Sampler rng(108);
  for (int rep = 0; rep < 8; ++rep) {
    PolyForm a = random_poly_form(rng, N, 1 + (rep % 2), 2);
    Eigen::MatrixXd G = Eigen::MatrixXd::Random(2 * N, 2 * N);
    KForm lie = lie_derivative(VectorField::linear(G), a.form());
    Point p = rng.point(N);
    auto vs = random_vectors(rng, 2 * N, a.k);
    CHECK(evaluate_form(lie, p, vs) ==
          doctest::Approx(fd_lie_value(a, G, p, vs)).epsilon(1e-6));
  }
}

TEST_CASE("depth bookkeeping: d on an exhausted form throws") {
  Sampler rng(109);
  PolyForm a = random_poly_form(rng, N, 1);
  KForm dd = exterior_d(exterior_d(a.form()));  // ord 0 now
  CHECK(dd.ord == 0);
  CHECK_THROWS_AS(exterior_d(dd), CapabilityError);
}
