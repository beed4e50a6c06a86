#pragma once

#include <complex>
#include <optional>

#include "lcklab/lck.hpp"

namespace lck {

/// Holomorphic homothety field: Lie_A w = lambda w, with companion I(A).
struct HomothetyField {
  VectorField field;
  double lambda = 0.0;
  VectorField companion;        // A^c = I(A)
  Eigen::MatrixXd generator;    // matrix of the (linear) field
  Eigen::MatrixXd companion_generator;

  LinearFlow flow() const { return LinearFlow(generator); }
  LinearFlow companion_flow() const { return LinearFlow(companion_generator); }

  /// The field scaled by c (lambda scales along).
  HomothetyField scaled(double c) const;
  /// lambda normalized to 1.
  HomothetyField normalized() const { return scaled(1.0 / lambda); }
};

/// Linear Hopf manifold data: contraction, deck character, and (for
/// similarity contractions) the closed-form metric catalog on C^n \ {0}.
struct HopfModel {
  int n = 0;
  LinearMap deck;
  WeightCharacter deck_character;
  bool has_catalog = false;

  // catalog entries, populated when the contraction is alpha * Id
  KForm omega_flat;      // dd^c |z|^2 = 4 sum dx_j ^ dy_j
  KForm omega_lck;       // omega_flat / |z|^2
  KForm theta_lck;       // -d log |z|^2
  ScalarField flat_potential;  // |z|^2
  VectorField euler;     // radial field
  VectorField rotation;  // uniform rotation field

  double chi() const { return deck_character(1); }
};

/// Similarity contraction alpha * Id, |alpha| in (0,1), n >= 2.
HopfModel make_classical_hopf(int n, std::complex<double> alpha);

/// General complex-linear contraction; the metric catalog is populated only
/// when A is a similarity.
HopfModel make_linear_hopf(int n, const LinearMap& A);

/// A = (lambda/2) * Euler + optional Killing part (verified).
HomothetyField homothety_field(const HopfModel& model, double lambda,
                               const std::optional<Eigen::MatrixXd>& killing =
                                   std::nullopt);

/// Killing rotation field with per-block rates (r_1, ..., r_n).
Eigen::MatrixXd rotation_generator(const Eigen::VectorXd& rates);

/// Circle action in the deck direction: the time-1 map is the deck
/// transformation, so orbits on the quotient are loops with nontrivial
/// Lee-form monodromy. Requires real positive deck eigenvalues.
CircleAction deck_circle_action(const HopfModel& model);

/// The standard LCK structure of the catalog, validated.
LCKStructure hopf_lck_structure(const HopfModel& model,
                                const std::vector<Point>& samples, Sampler& rng);

}  // namespace lck
