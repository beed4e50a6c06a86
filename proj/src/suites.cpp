#include "lcklab/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include "lcklab/conventions.hpp"
#include "lcklab/hopf.hpp"
#include "lcklab/metric.hpp"
#include "lcklab/potential.hpp"

namespace lck {

namespace {

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct SuiteContext {
  const RunConfig& cfg;
  HopfModel model;
  std::vector<Point> samples;
  HomothetyField A_kill;  // Killing companion: A = (lambda/2) E
  HomothetyField A_dist;  // distinct rotation rates from the config

  std::vector<Point> head(int k) const {
    int c = std::min<int>(k, samples.size());
    return {samples.begin(), samples.begin() + c};
  }
};

SuiteContext make_context(const RunConfig& cfg) {
  HopfModel model = make_classical_hopf(cfg.n, cfg.alpha);
  Sampler rng(cfg.seed);
  std::vector<Point> samples = rng.points(cfg.n, cfg.samples);
  Eigen::VectorXd rates = Eigen::VectorXd::Zero(cfg.n);
  for (int j = 0; j < cfg.n && j < static_cast<int>(cfg.killing_rates.size()); ++j)
    rates(j) = cfg.killing_rates[j];
  return SuiteContext{cfg, model, std::move(samples),
                      homothety_field(model, cfg.lambda),
                      homothety_field(model, cfg.lambda,
                                      rotation_generator(rates))};
}

void add(SuiteResult& r, const std::string& check, double residual, double tol) {
  r.entries.push_back({check, residual, tol, residual <= tol});
}

void add_flag(SuiteResult& r, const std::string& check, bool ok) {
  r.entries.push_back({check, ok ? 0.0 : 1.0, 0.0, ok});
}

double sup_defect(const KForm& a, const KForm& b, const std::vector<Point>& pts) {
  KForm d = a - b;
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, sup_coeff(d, p));
  return worst;
}

// ---------------------------------------------------------------------------

void suite_validate_lck(const SuiteContext& ctx, SuiteResult& r) {
  Sampler rng(ctx.cfg.seed ^ fnv(r.suite));
  LCKStructure s = hopf_lck_structure(ctx.model, ctx.samples, rng);
  add(r, "d(omega) = theta ^ omega", s.residuals.lck, ctx.cfg.tol_jet);
  add(r, "d(theta) = 0", s.residuals.lee_closed, ctx.cfg.tol_jet);
  add(r, "I-invariance of omega", s.residuals.i_invariance, ctx.cfg.tol_jet);
  add(r, "metric positivity", std::max(0.0, -s.residuals.min_positivity), 0.0);

  // negative control: a wrong Lee form must be flagged
  LCKResiduals bad = validate_structure(ctx.model.omega_lck,
                                        KForm::zero(ctx.cfg.n, 1),
                                        ctx.head(10), rng);
  add_flag(r, "negative control: zero Lee form rejected",
           bad.lck > 100.0 * ctx.cfg.tol_jet);
}

void suite_lee_form(const SuiteContext& ctx, SuiteResult& r) {
  auto probes = ctx.head(20);
  LeeFormResult lee = extract_lee_form(ctx.model.omega_lck, probes);
  add(r, "system residual at probes", lee.residual, ctx.cfg.tol_jet);
  add(r, "recovered theta = -d log |z|^2",
      sup_defect(lee.theta, ctx.model.theta_lck, ctx.samples), ctx.cfg.tol_jet);

  LeeFormResult flat = extract_lee_form(ctx.model.omega_flat, probes);
  add(r, "Kahler input gives theta = 0",
      sup_defect(flat.theta, KForm::zero(ctx.cfg.n, 1), ctx.samples), 1e-10);

  // negative control: omega + x_1^2 dy_1 ^ dy_2 is not LCK (the pointwise
  // Lee candidate exists but is not closed)
  bool threw = false;
  try {
    ScalarField x1sq{ctx.cfg.n, 2, [](const Point& p) {
                       auto z = coordinate_jets(p);
                       return z[0] * z[0];
                     }};
    KForm bad = ctx.model.omega_flat +
                scale_form(x1sq, wedge(KForm::basis(ctx.cfg.n, {1}),
                                       KForm::basis(ctx.cfg.n, {3})));
    extract_lee_form(bad, probes);
  } catch (const GeometryError&) {
    threw = true;
  }
  add_flag(r, "negative control: non-LCK form rejected", threw);
}

void suite_monodromy(const SuiteContext& ctx, SuiteResult& r) {
  QuadratureRule q(std::min(ctx.cfg.quadrature_n, 64));
  for (double c : {0.5, 1.0, 2.0}) {
    HopfModel m = make_classical_hopf(ctx.cfg.n, std::exp(-c));
    CircleAction act = deck_circle_action(m);
    double v = loop_integral(m.theta_lck, act, ctx.samples[0], q);
    add(r, "deck loop of theta = 2c, c = " + std::to_string(c),
        std::abs(v - 2.0 * c), ctx.cfg.tol_jet);
    double v2 = loop_integral(m.theta_lck, act, ctx.samples[1], q);
    add(r, "monodromy is base-point free, c = " + std::to_string(c),
        std::abs(v - v2), ctx.cfg.tol_jet);
  }
  CircleAction rot = CircleAction::rotation(ctx.cfg.n);
  double v = loop_integral(ctx.model.theta_lck, rot, ctx.samples[0], q);
  add(r, "rotation loop of theta = 0", std::abs(v), 1e-10);
}

void suite_key_formula(const SuiteContext& ctx, SuiteResult& r) {
  Sampler rng(ctx.cfg.seed ^ fnv(r.suite));
  auto pts = ctx.head(100);
  add(r, "Killing companion field",
      verify_key_formula(ctx.A_kill, ctx.model.omega_flat, pts, rng),
      ctx.cfg.tol_jet);
  add(r, "distinct rotation rates",
      verify_key_formula(ctx.A_dist, ctx.model.omega_flat, pts, rng),
      ctx.cfg.tol_jet);
  add(r, "rescaled field (lambda/2)",
      verify_key_formula(ctx.A_dist.scaled(0.5), ctx.model.omega_flat, pts, rng),
      ctx.cfg.tol_jet);
}

void suite_proof_chain(const SuiteContext& ctx, SuiteResult& r) {
  auto pts = ctx.head(20);
  for (const auto& [tag, field] :
       {std::pair<std::string, const HomothetyField*>{"killing: ", &ctx.A_kill},
        {"distinct: ", &ctx.A_dist}}) {
    ProofChainReport rep = verify_proof_chain(*field, ctx.model.omega_flat, pts);
    for (const auto& line : rep.lines)
      add(r, tag + line.name, line.residual, std::max(line.tol, ctx.cfg.tol_jet));
  }
}

void suite_omega_W(const SuiteContext& ctx, SuiteResult& r) {
  auto pts = ctx.head(5);
  QuadratureRule q(ctx.cfg.quadrature_n);

  // Killing companion: the integrand is constant, so omega_W is exactly
  // (2 pi / lambda) * omega and quadrature refinement is idle.
  double defect = 0.0;
  KForm w1 = build_omega_W_circle(ctx.A_kill, ctx.model.omega_flat, q, false, &defect);
  add(r, "killing: omega_W = (2 pi / lambda) * omega",
      sup_defect(w1, (2.0 * M_PI / ctx.cfg.lambda) * ctx.model.omega_flat, pts),
      ctx.cfg.tol_jet);
  add(r, "killing: integrand endpoint defect", defect, 1e-10);
  KForm w2 = build_omega_W_circle(ctx.A_kill, ctx.model.omega_flat,
                                  QuadratureRule(2 * q.N));
  add(r, "killing: doubling N is idle", sup_defect(w1, w2, pts), ctx.cfg.tol_jet);

  // distinct rates: the naive circle integrand does not close up; the
  // endpoint defect is reported and the strict mode refuses to integrate.
  KForm wd = build_omega_W_circle(ctx.A_dist, ctx.model.omega_flat, q, false, &defect);
  add_flag(r, "distinct: endpoint defect is reported", defect > 1e-6);
  bool threw = false;
  try {
    build_omega_W_circle(ctx.A_dist, ctx.model.omega_flat, q, true);
  } catch (const GeometryError&) {
    threw = true;
  }
  add_flag(r, "distinct: strict periodicity mode rejects", threw);
  double min_eig = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hermitian_matrix(wd, p));
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
  }
  add(r, "distinct: omega_W stays positive", std::max(0.0, -min_eig), 0.0);
}

void suite_psi_potential(const SuiteContext& ctx, SuiteResult& r) {
  QuadratureRule q(ctx.cfg.quadrature_n);
  auto nd = q.nodes(-M_PI, M_PI);

  double mass = 0.0, ode = 0.0;
  for (size_t i = 0; i < nd.t.size(); ++i) {
    double psi = std::cos(nd.t[i]) + 1.0;
    mass += nd.w[i] * psi;
    // psi + psi'' = 1 pointwise
    ode = std::max(ode, std::abs(psi + (-std::cos(nd.t[i])) - 1.0));
  }
  add(r, "integral of psi over the period = 2 pi", std::abs(mass - 2.0 * M_PI),
      1e-10);
  add(r, "psi + psi'' = 1 at the nodes", ode, 1e-12);

  PsiPotential pp = build_psi_potential(ctx.A_dist, ctx.model.omega_flat, q);
  HomothetyField B = ctx.A_dist.normalized();
  KForm lie_w = lie_derivative(B.companion, pp.omega_psi);

  // cross-check the Lie derivative against a flow finite difference in the
  // convolution parameter (same discretized form on both sides)
  double h = 1e-4;
  LinearFlow flow = B.companion_flow();
  KForm fd = (1.0 / (2.0 * h)) * (flow_pullback_form(flow, h, pp.omega_psi) -
                                  flow_pullback_form(flow, -h, pp.omega_psi));
  add(r, "Lie_{Bc} omega_psi matches flow finite difference",
      sup_defect(lie_w, fd, ctx.head(3)), 1e-6);

  // differentiation under the integral: Lie_{Bc} omega_psi = -omega_{psi'};
  // the discrete weights only satisfy summation by parts up to O(N^-2)
  KForm acc = KForm::zero(ctx.cfg.n, 2);
  for (size_t i = 0; i < nd.t.size(); ++i)
    acc = acc + (nd.w[i] * (-std::sin(nd.t[i]))) *
                    flow_pullback_form(flow, nd.t[i], ctx.model.omega_flat);
  add(r, "Lie_{Bc} omega_psi = -omega_{psi'} (discretization-limited)",
      sup_defect(lie_w, double(Conventions::LIE_PSI_SIGN) * acc, ctx.head(3)),
      1e-2);
}

void suite_certify(const SuiteContext& ctx, SuiteResult& r) {
  Sampler rng(ctx.cfg.seed ^ fnv(r.suite));
  QuadratureRule q(ctx.cfg.quadrature_n);
  double chi = ctx.model.chi();

  auto run = [&](const std::string& tag, const HomothetyField& A,
                 const QuadratureRule& rule) {
    PotentialCertificate cert = certify_potential(
        A, ctx.model.omega_flat, ctx.model.deck, chi, rule, ctx.samples, rng);
    add(r, tag + "exactness dd^c(potential) = omega_W", cert.residual_exactness,
        ctx.cfg.tol_quad);
    add(r, tag + "positivity of omega_W",
        std::max(0.0, -cert.min_positivity_eigenvalue), 0.0);
    add(r, tag + "automorphy with the deck character", cert.automorphy_residual,
        ctx.cfg.tol_jet);
    return cert;
  };

  run("killing: ", ctx.A_kill, q);
  PotentialCertificate fine = run("distinct: ", ctx.A_dist, q);

  // negative control: starved quadrature must fail the certificate
  PotentialCertificate starved = certify_potential(
      ctx.A_dist, ctx.model.omega_flat, ctx.model.deck, chi,
      QuadratureRule(4), ctx.head(20), rng);
  add_flag(r, "negative control: N = 4 certificate is rejected",
           !starved.valid());

  // convergence: refining 32 -> quadrature_n must gain at least 100x
  PotentialCertificate coarse = certify_potential(
      ctx.A_dist, ctx.model.omega_flat, ctx.model.deck, chi,
      QuadratureRule(32), ctx.head(20), rng);
  add(r, "quadrature refinement gains >= 100x", fine.residual_exactness,
      coarse.residual_exactness / 100.0);
}

void suite_averaging_pipeline(const SuiteContext& ctx, SuiteResult& r) {
  Sampler rng(ctx.cfg.seed ^ fnv(r.suite));
  auto sub = ctx.head(8);
  QuadratureRule q(std::min(ctx.cfg.quadrature_n, 16));
  CircleAction rot = CircleAction::rotation(ctx.cfg.n);
  CircleAction deck = deck_circle_action(ctx.model);
  double expected_monodromy = -2.0 * std::log(ctx.cfg.alpha);

  LCKStructure s = hopf_lck_structure(ctx.model, sub, rng);

  // invariant input is a fixed point
  PipelineResult fix = averaging_pipeline(s, rot, q, sub, rng, deck);
  add(r, "invariant input: omega unchanged",
      sup_defect(fix.structure.omega, s.omega, sub), 1e-10);
  add(r, "invariant input: monodromy unchanged",
      std::abs(fix.monodromy_after - fix.monodromy_before), ctx.cfg.tol_jet);

  // perturbed input: non-invariant but deck-invariant conformal factor
  ScalarField h{ctx.cfg.n, 2, [](const Point& p) {
                  auto z = coordinate_jets(p);
                  Jet r2 = z[0] * z[0];
                  for (int i = 1; i < p.m(); ++i) r2 = r2 + z[i] * z[i];
                  return 0.3 * (z[0] * z[0] - z[1] * z[1]) / r2;
                }};
  LCKStructure s_pert = conformal_rescale(s, h, sub, rng);
  PipelineResult res = averaging_pipeline(s_pert, rot, q, sub, rng, deck);

  add(r, "recovered factor is path independent", res.path_independence, 1e-6);
  add(r, "output is action invariant", res.invariance_residual, ctx.cfg.tol_jet);
  add(r, "output satisfies d(omega) = theta ^ omega",
      res.structure.residuals.lck, ctx.cfg.tol_jet);
  add(r, "metric positivity of the output",
      std::max(0.0, -res.structure.residuals.min_positivity), 0.0);
  add(r, "monodromy before = 2c",
      std::abs(res.monodromy_before - expected_monodromy), ctx.cfg.tol_jet);
  add(r, "monodromy preserved by the pipeline",
      std::abs(res.monodromy_after - res.monodromy_before), ctx.cfg.tol_jet);
}

void suite_vaisman(const SuiteContext& ctx, SuiteResult& r) {
  Sampler rng(ctx.cfg.seed ^ fnv(r.suite));
  auto pts = ctx.head(10);
  LCKStructure s = hopf_lck_structure(ctx.model, pts, rng);

  VaismanReport rep = is_vaisman(s, pts);
  add(r, "Levi-Civita self-test nabla(g) = 0", rep.nabla_g_defect, ctx.cfg.tol_jet);
  add(r, "nabla(theta) = 0 for the Hopf structure", rep.sup_nabla_theta,
      ctx.cfg.tol_quad);
  add_flag(r, "Vaisman verdict", rep.vaisman);

  ScalarField phi = vaisman_potential(s, ctx.model.omega_flat, s.theta);
  double pot_defect = 0.0, ddc_defect = 0.0;
  KForm ddc = dd_c(phi) - Conventions::VAISMAN_POT_CONST * ctx.model.omega_flat;
  for (const auto& p : pts) {
    pot_defect = std::max(pot_defect, std::abs(phi(p).value() - p.norm2()));
    ddc_defect = std::max(ddc_defect, sup_coeff(ddc, p));
  }
  add(r, "potential equals |z|^2", pot_defect, ctx.cfg.tol_jet);
  add(r, "dd^c(potential) = flat Kahler form", ddc_defect, ctx.cfg.tol_quad);

  // negative control: a generic conformal rescale is not Vaisman
  ScalarField g{ctx.cfg.n, 2, [](const Point& p) {
                  auto z = coordinate_jets(p);
                  Jet r2 = z[0] * z[0];
                  for (int i = 1; i < p.m(); ++i) r2 = r2 + z[i] * z[i];
                  return 0.4 * z[0] * z[0] / r2;
                }};
  LCKStructure s_bad = conformal_rescale(s, g, pts, rng);
  VaismanReport rep_bad = is_vaisman(s_bad, pts);
  add_flag(r, "negative control: rescaled structure is not Vaisman",
           !rep_bad.vaisman && rep_bad.sup_nabla_theta > 1e-3);

  bool threw = false;
  try {
    LCKStructure flat{ctx.model.omega_flat, KForm::zero(ctx.cfg.n, 1), {}};
    vaisman_potential(flat, ctx.model.omega_flat, flat.theta);
  } catch (const GeometryError&) {
    threw = true;
  }
  add_flag(r, "negative control: vanishing Lee form rejected", threw);
}

struct SuiteDef {
  const char* name;
  const char* anchor;
  void (*fn)(const SuiteContext&, SuiteResult&);
};

const SuiteDef kSuites[] = {
    {"validate-lck", "d(omega) = theta ^ omega, d(theta) = 0", suite_validate_lck},
    {"lee-form", "theta from d(omega) = theta ^ omega by least squares",
     suite_lee_form},
    {"monodromy", "integral of theta over the deck loop = 2c", suite_monodromy},
    {"key-formula", "dd^c|A|^2 = lambda^2 w + Lie^2_{Ac} w", suite_key_formula},
    {"proof-chain", "Lie_A w = d(eta), ..., Lie_{Ac} w = d(eta^c)",
     suite_proof_chain},
    {"omega-W", "omega_W as a circle average of flow pullbacks", suite_omega_W},
    {"psi-potential", "omega_psi with psi = cos t + 1, psi + psi'' = 1",
     suite_psi_potential},
    {"certify", "dd^c|A|^2_psi = omega_W, positive, automorphic", suite_certify},
    {"averaging-pipeline",
     "two-stage average to an invariant LCK structure, monodromy preserved",
     suite_averaging_pipeline},
    {"vaisman", "nabla(theta) = 0 and the explicit potential", suite_vaisman},
};

}  // namespace

VerificationReport run_suites(const RunConfig& cfg) {
  VerificationReport rep;
  rep.config_echo = cfg.to_json();
  {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(Conventions::fingerprint()));
    rep.conventions_fingerprint = buf;
  }
  rep.seed = cfg.seed;

  SuiteContext ctx = make_context(cfg);
  std::vector<std::string> selected =
      cfg.suites.empty() ? suite_names() : cfg.suites;

  for (const auto& name : selected) {
    for (const auto& def : kSuites) {
      if (name != def.name) continue;
      SuiteResult res;
      res.suite = def.name;
      res.paper_anchor = def.anchor;
      auto t0 = std::chrono::steady_clock::now();
      try {
        def.fn(ctx, res);
      } catch (const std::exception& e) {
        res.error = e.what();
      }
      res.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      rep.suites.push_back(std::move(res));
    }
  }
  return rep;
}

}  // namespace lck
