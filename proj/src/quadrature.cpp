#include "lcklab/quadrature.hpp"

#include <cmath>

namespace lck {

namespace {

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_N.
void gauss_legendre(int N, std::vector<double>& x, std::vector<double>& w) {
  x.assign(N, 0.0);
  w.assign(N, 0.0);
  for (int i = 0; i < (N + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (N + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= N; ++j) {
        double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = N * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[N - 1 - i] = t;
    w[i] = w[N - 1 - i] = 2.0 / ((1.0 - t * t) * pp * pp);
  }
}

}  // namespace

QuadratureRule::Nodes QuadratureRule::nodes(double a, double b) const {
  Nodes out;
  if (scheme == Scheme::PeriodicTrapezoid) {
    // N+1 samples with half weights at the (identified) endpoints.
    double h = (b - a) / N;
    out.t.resize(N + 1);
    out.w.resize(N + 1);
    for (int i = 0; i <= N; ++i) {
      out.t[i] = a + i * h;
      out.w[i] = (i == 0 || i == N) ? 0.5 * h : h;
    }
  } else {
    std::vector<double> x, w;
    gauss_legendre(N, x, w);
    out.t.resize(N);
    out.w.resize(N);
    for (int i = 0; i < N; ++i) {
      out.t[i] = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
      out.w[i] = 0.5 * (b - a) * w[i];
    }
  }
  return out;
}

}  // namespace lck
