#pragma once

#include <cmath>
#include <vector>

#include "lcklab/jet.hpp"

namespace lck {

/// Gaussian elimination with partial pivoting over Jet scalars, so that the
/// solution of a pointwise linear system carries exact derivatives of the
/// solve. Pivoting compares values only.
inline std::vector<Jet> jet_solve(std::vector<std::vector<Jet>> A,
                                  std::vector<Jet> b) {
  int n = static_cast<int>(A.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(A[r][c].value()) > std::abs(A[piv][c].value())) piv = r;
    if (std::abs(A[piv][c].value()) < 1e-14)
      throw GeometryError("jet_solve: singular system");
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    Jet ipiv = inv(A[c][c]);
    for (int r = c + 1; r < n; ++r) {
      Jet f = A[r][c] * ipiv;
      for (int cc = c; cc < n; ++cc) A[r][cc] -= f * A[c][cc];
      b[r] -= f * b[c];
    }
  }
  std::vector<Jet> x(n, b[0]);
  for (int r = n - 1; r >= 0; --r) {
    Jet s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s * inv(A[r][r]);
  }
  return x;
}

}  // namespace lck
