// Acceptance gate: one line per criterion, exit code = number of failures.
// Defaults: n = 2, 200 sample points, N = 256.

#include <cstdio>

#include "lcklab/metric.hpp"
#include "lcklab/potential.hpp"
#include "lcklab/suites.hpp"
#include "support.hpp"

using namespace lck;
using namespace lcktest;

namespace {

constexpr int N = 2;
int g_failures = 0;

void criterion(int num, const std::string& what, bool ok,
               const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace

int main() {
  HopfModel model = make_classical_hopf(N, std::exp(-1.0));
  double lambda = 2.0;
  HomothetyField A_kill = homothety_field(model, lambda);
  Eigen::VectorXd rates(2);
  rates << 0.2, -0.1;
  HomothetyField A_dist = homothety_field(model, lambda, rotation_generator(rates));

  Sampler rng(20240613);
  std::vector<Point> samples = rng.points(N, 200);

  // 1 -- operator algebra over 100 randomized forms/fields
  {
    double exact = 0.0, fd = 0.0;
    Sampler r1(11);
    for (int i = 0; i < 100; ++i) {
      PolyForm a = random_poly_form(r1, N, 1 + (i % 2), 3);
      // unit-scale points and near-identity maps keep the identities at
      // machine precision, where the 1e-10 absolute gate is meaningful
      Point p(r1.uniform(0.5, 1.5) * r1.direction(2 * N));
      exact = std::max(exact, sup_coeff(exterior_d(exterior_d(a.form())), p));

      PolyForm b = random_poly_form(r1, N, 1, 2);
      double sg = (a.k % 2 == 0) ? 1.0 : -1.0;
      KForm leib = exterior_d(wedge(a.form(), b.form())) -
                   wedge(exterior_d(a.form()), b.form()) -
                   sg * wedge(a.form(), exterior_d(b.form()));
      exact = std::max(exact, sup_coeff(leib, p));

      Eigen::MatrixXd M1 = 0.3 * Eigen::MatrixXd::Random(2 * N, 2 * N) +
                           Eigen::MatrixXd::Identity(2 * N, 2 * N);
      Eigen::MatrixXd M2 = 0.3 * Eigen::MatrixXd::Random(2 * N, 2 * N) +
                           Eigen::MatrixXd::Identity(2 * N, 2 * N);
      KForm funct = pullback(LinearMap(M1 * M2), a.form()) -
                    pullback(LinearMap(M2), pullback(LinearMap(M1), a.form()));
      exact = std::max(exact, sup_coeff(funct, p));

      auto vs = random_vectors(r1, 2 * N, a.k + 1);
      fd = std::max(fd, std::abs(evaluate_form(exterior_d(a.form()), p, vs) -
                                 fd_d_value(a, p, vs)));
      Eigen::MatrixXd G = Eigen::MatrixXd::Random(2 * N, 2 * N);
      std::vector<Eigen::VectorXd> ws(vs.begin(), vs.begin() + a.k);
      fd = std::max(
          fd, std::abs(evaluate_form(lie_derivative(VectorField::linear(G),
                                                    a.form()),
                                     p, ws) -
                       fd_lie_value(a, G, p, ws)));
    }
    criterion(1, "operator algebra (d^2, Leibniz, Cartan-vs-flow, functoriality)",
              exact <= 1e-10 && fd <= 1e-6,
              "jet-exact " + fmt(exact) + ", fd oracle " + fmt(fd));
  }

  // 2 -- LCK definitional suite on the classical Hopf structure
  {
    Sampler r2(22);
    LeeFormResult lee = extract_lee_form(model.omega_lck,
                                         {samples.begin(), samples.begin() + 20});
    double theta_err = 0.0;
    for (const auto& p : samples)
      theta_err = std::max(theta_err, sup_coeff(lee.theta - model.theta_lck, p));
    LCKResiduals res =
        validate_structure(model.omega_lck, model.theta_lck, samples, r2);
    LCKStructure s = hopf_lck_structure(
        model, {samples.begin(), samples.begin() + 50}, r2);
    VaismanReport vr = is_vaisman(s, {samples.begin(), samples.begin() + 50});
    criterion(2, "LCK definitional suite (Lee form, d(theta), Vaisman)",
              theta_err <= 1e-8 && res.lee_closed <= 1e-10 && vr.vaisman &&
                  vr.sup_nabla_theta <= 1e-6,
              "theta " + fmt(theta_err) + ", d(theta) " + fmt(res.lee_closed) +
                  ", nabla(theta) " + fmt(vr.sup_nabla_theta));
  }

  // 3 -- monodromy of the deck loop, preserved by the averaging pipeline
  {
    Sampler r3(33);
    QuadratureRule q(64);
    QuadratureRule q_pipe(16);
    auto sub = r3.points(N, 8);
    CircleAction rot = CircleAction::rotation(N);
    double worst = 0.0, pipe_worst = 0.0;
    bool ok = true;
    for (double c : {0.5, 1.0, 2.0}) {
      HopfModel m = make_classical_hopf(N, std::exp(-c));
      CircleAction act = deck_circle_action(m);
      double v = loop_integral(m.theta_lck, act, samples[0], q);
      worst = std::max(worst, std::abs(v - 2.0 * c));

      LCKStructure s = hopf_lck_structure(m, sub, r3);
      ScalarField h{N, 2, [](const Point& p) {
                      auto z = coordinate_jets(p);
                      Jet r2 = z[0] * z[0];
                      for (int i = 1; i < p.m(); ++i) r2 = r2 + z[i] * z[i];
                      return 0.3 * (z[0] * z[0] - z[1] * z[1]) / r2;
                    }};
      LCKStructure s_pert = conformal_rescale(s, h, sub, r3);
      PipelineResult pr = averaging_pipeline(s_pert, rot, q_pipe, sub, r3, act);
      pipe_worst = std::max(
          pipe_worst, std::abs(pr.monodromy_after - pr.monodromy_before));
      pipe_worst = std::max(pipe_worst, std::abs(pr.monodromy_before - 2.0 * c));
    }
    double rot_v =
        std::abs(loop_integral(model.theta_lck, rot, samples[0], q));
    ok = worst <= 1e-8 && rot_v <= 1e-10 && pipe_worst <= 1e-8;
    criterion(3, "deck-loop monodromy 2c, zero on rotations, pipeline-stable",
              ok, "deck " + fmt(worst) + ", rotation " + fmt(rot_v) +
                      ", pipeline " + fmt(pipe_worst));
  }

  // 4 -- the key formula at 100 points and 20 vector pairs per field
  {
    Sampler r4(44);
    std::vector<Point> pts(samples.begin(), samples.begin() + 100);
    double a = verify_key_formula(A_kill, model.omega_flat, pts, r4, 20);
    double b = verify_key_formula(A_dist, model.omega_flat, pts, r4, 20);
    double h = std::max(
        verify_key_formula(A_dist.scaled(0.5), model.omega_flat, pts, r4, 20),
        verify_key_formula(A_dist.scaled(2.0), model.omega_flat, pts, r4, 20));
    criterion(4, "dd^c|A|^2 = lambda^2 w + Lie^2_{Ac} w, homogeneous in A",
              a <= 1e-8 && b <= 1e-8 && h <= 1e-8,
              "killing " + fmt(a) + ", distinct " + fmt(b) + ", scaled " + fmt(h));
  }

  // 5 -- the displayed identities of the proof chain
  {
    std::vector<Point> pts(samples.begin(), samples.begin() + 20);
    double worst = 0.0;
    for (const auto* A : {&A_kill, &A_dist})
      worst = std::max(worst,
                       verify_proof_chain(*A, model.omega_flat, pts).worst());
    criterion(5, "proof-chain identities", worst <= 1e-8, fmt(worst));
  }

  // 6 & 7 -- the constructive certificate and its quadrature convergence
  {
    Sampler r6(66);
    double chi = model.chi();
    PotentialCertificate cd = certify_potential(
        A_dist, model.omega_flat, model.deck, chi, QuadratureRule(256), samples, r6);
    PotentialCertificate ck = certify_potential(
        A_kill, model.omega_flat, model.deck, chi, QuadratureRule(256), samples, r6);
    PotentialCertificate starved = certify_potential(
        A_dist, model.omega_flat, model.deck, chi, QuadratureRule(4),
        {samples.begin(), samples.begin() + 20}, r6);
    bool ok6 = cd.valid() && ck.valid() && cd.residual_exactness <= 1e-6 &&
               ck.residual_exactness <= 1e-6 &&
               cd.min_positivity_eigenvalue > 1e-6 &&
               ck.min_positivity_eigenvalue > 1e-6 &&
               cd.automorphy_residual <= 1e-8 && ck.automorphy_residual <= 1e-8 &&
               !starved.valid();
    criterion(6, "potential certificate valid, N = 4 control rejected", ok6,
              "exactness " + fmt(cd.residual_exactness) + ", automorphy " +
                  fmt(cd.automorphy_residual) + ", starved " +
                  fmt(starved.residual_exactness));

    PotentialCertificate coarse = certify_potential(
        A_dist, model.omega_flat, model.deck, chi, QuadratureRule(32),
        {samples.begin(), samples.begin() + 20}, r6);
    double gain = coarse.residual_exactness /
                  std::max(cd.residual_exactness, 1e-300);
    criterion(7, "exactness residual is quadrature-limited (32 -> 256)",
              gain >= 100.0, "gain " + fmt(gain) + "x");
  }

  // 8 -- determinism of the report body
  {
    RunConfig cfg;
    cfg.alpha = std::exp(-1.0);
    cfg.samples = 20;
    cfg.quadrature_n = 256;
    cfg.seed = 424242;
    VerificationReport a = run_suites(cfg);
    VerificationReport b = run_suites(cfg);
    a.timestamp = "ignored";
    bool same = a.canonical_body() == b.canonical_body();
    criterion(8, "identical config and seed give identical report bodies",
              same && a.all_pass(),
              same ? (a.all_pass() ? "identical, all suites pass"
                                   : "identical, but a suite failed")
                   : "bodies differ");
  }

  return g_failures;
}
