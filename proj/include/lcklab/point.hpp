#pragma once

#include <Eigen/Dense>

#include "lcklab/errors.hpp"

namespace lck {

/// A point of C^n \ {0} in real coordinates (x1, y1, ..., xn, yn),
/// with z_j = x_j + i y_j.
struct Point {
  Eigen::VectorXd x;

  Point() = default;
  explicit Point(Eigen::VectorXd coords) : x(std::move(coords)) {
    if (x.size() == 0 || x.size() % 2 != 0)
      throw StructuralError("point needs 2n coordinates, n >= 1");
  }

  int m() const { return static_cast<int>(x.size()); }  // real dimension 2n
  int n() const { return m() / 2; }
  double norm2() const { return x.squaredNorm(); }
};

}  // namespace lck
