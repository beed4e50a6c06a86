#pragma once

#include <Eigen/Dense>

namespace lck {

/// The standard complex structure on R^{2n} in (x1,y1,...,xn,yn) order:
/// I dx_j = dy_j, I dy_j = -dx_j.
struct ComplexStructure {
  /// Image basis index of e_a under I.
  static int image(int a) { return (a % 2 == 0) ? a + 1 : a - 1; }
  /// Sign of that image: I e_{2j} = +e_{2j+1}, I e_{2j+1} = -e_{2j}.
  static int sign(int a) { return (a % 2 == 0) ? +1 : -1; }

  static Eigen::MatrixXd matrix(int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
      J(2 * j + 1, 2 * j) = 1.0;
      J(2 * j, 2 * j + 1) = -1.0;
    }
    return J;
  }

  /// Commutation defect with I; zero iff the map is complex-linear.
  static double complex_linearity_defect(const Eigen::MatrixXd& A) {
    int n = static_cast<int>(A.rows()) / 2;
    Eigen::MatrixXd J = matrix(n);
    return (A * J - J * A).cwiseAbs().maxCoeff();
  }
};

}  // namespace lck
