#pragma once

#include <cstdint>
#include <string>

namespace lck {

/// The single record of every sign and normalization the library freezes.
/// All modules reference these constants instead of hardcoding signs, and
/// the verification report carries `fingerprint()` so that a report is
/// meaningless unless read against the same conventions.
///
/// Frozen choices:
///  * I on tangent vectors:  I dx_j = dy_j,  I dy_j = -dx_j.
///  * I on k-forms:          (I a)(X_1,...,X_k) = (-1)^k a(I X_1,...,I X_k),
///    which gives I^2 = -1 on 1-forms and I(flat Kahler form) = +flat form.
///  * d^c = +I d I.  With this sign dd^c|z|^2 = 4 sum_j dx_j ^ dy_j is
///    positive, and dd^c|A|^2 = lambda^2 w + Lie^2_{Ac} w holds exactly for
///    a holomorphic homothety A of a Kahler form w.
///  * Hermitian metric:      g(X, Y) = w(X, I Y)  (positive definite).
///  * Under these signs d^c(eta^c) = -lambda * w on the cover (the chain
///    identity carries DC_ETA_SIGN = -1).
///  * Lee form of e^{-f} w is theta - df  (so theta + df needs e^{+f} w).
///  * Circle averages are (1/T) * integral over one period; the averaged
///    Kahler form in the potential certificate is the un-normalized
///    lambda^2 * integral over [-pi, pi] in the unit-speed parametrization
///    of the companion flow.
struct Conventions {
  static constexpr int DC_SIGN = +1;           // d^c = DC_SIGN * I d I
  static constexpr double DDC_NORM2 = 4.0;     // dd^c |z|^2 = DDC_NORM2 * sum dx^dy
  static constexpr int I_FLAT_SIGN = +1;       // I(flat form) = I_FLAT_SIGN * flat form
  static constexpr int DC_ETA_SIGN = -1;       // d^c eta^c = DC_ETA_SIGN * lambda * w
  static constexpr int LEE_RESCALE_SIGN = -1;  // Lee(e^{-f} w) = theta + LEE_RESCALE_SIGN * df
  static constexpr int LIE_PSI_SIGN = -1;      // Lie_{Bc} w_psi = LIE_PSI_SIGN * w_{psi'}
  static constexpr double VAISMAN_POT_CONST = 1.0;  // dd^c(potential) = const * flat form

  static std::string describe() {
    return "I_forms=(-1)^k.a(I.);dc=+IdI;ddc|z|^2=4;g(X,Y)=w(X,IY);"
           "dc_eta=-lambda.w;lee(e^{-f}w)=theta-df;lie_psi=-psi';vaisman_c=1";
  }

  // FNV-1a over the description string; stable across runs and platforms.
  static std::uint64_t fingerprint() {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : describe()) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace lck
