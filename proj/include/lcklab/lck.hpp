#pragma once

#include <map>
#include <optional>

#include "lcklab/flows.hpp"
#include "lcklab/ops.hpp"
#include "lcklab/sampling.hpp"

namespace lck {

/// Residual record attached to a validated structure.
struct LCKResiduals {
  double lck = 0.0;         // sup |d(omega) - theta ^ omega|
  double lee_closed = 0.0;  // sup |d(theta)|
  double i_invariance = 0.0;
  double min_positivity = 0.0;  // min eigenvalue of the metric over samples
};

/// Hermitian 2-form with its Lee form: d(omega) = theta ^ omega.
struct LCKStructure {
  KForm omega;
  KForm theta;
  LCKResiduals residuals;
};

/// Multiplicative character of the deck group on generators.
struct WeightCharacter {
  std::map<int, double> chi;  // generator power -> value

  double operator()(int k = 1) const { return chi.at(k); }
};

struct LeeFormResult {
  KForm theta;
  double residual;     // sup over probe points of the defining system residual
  Point worst_point;
};

/// Pointwise least-squares inversion of d(omega) = theta ^ omega.
/// Throws GeometryError("not LCK...") when the residual exceeds `tol`,
/// and a rank error when omega is degenerate.
LeeFormResult extract_lee_form(const KForm& omega,
                               const std::vector<Point>& probes,
                               double tol = 1e-8);

/// Validate positivity, I-invariance, the LCK identity and closedness of
/// theta over the sample set.
LCKResiduals validate_structure(const KForm& omega, const KForm& theta,
                                const std::vector<Point>& samples,
                                Sampler& rng);

LCKStructure make_structure(const KForm& omega, const KForm& theta,
                            const std::vector<Point>& samples, Sampler& rng,
                            double tol = 1e-8);

/// omega' = e^{-f} omega with Lee form theta - df (conventions record);
/// the Lee form of the result is re-extracted and cross-checked.
LCKStructure conformal_rescale(const LCKStructure& s, const ScalarField& f,
                               const std::vector<Point>& samples, Sampler& rng);

/// sup over samples and random vector tuples of |(deck* a) - chi a|.
double check_automorphy(const KForm& a, const LinearMap& deck, double chi,
                        const std::vector<Point>& samples, Sampler& rng);

}  // namespace lck
