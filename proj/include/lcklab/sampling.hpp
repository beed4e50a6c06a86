#pragma once

#include <random>
#include <vector>

#include "lcklab/point.hpp"

namespace lck {

/// Seeded sampling utilities. Model points use log-uniform radii in
/// [0.1, 10] times uniform sphere directions: the Hopf geometry is
/// scale-covariant, so the radial (character) direction gets exercised.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  double uniform(double a, double b) {
    return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  }

  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

  Eigen::VectorXd direction(int m) {
    Eigen::VectorXd v(m);
    do {
      for (int i = 0; i < m; ++i) v(i) = gaussian();
    } while (v.norm() < 1e-8);
    return v / v.norm();
  }

  Point point(int n) {
    double r = std::exp(uniform(std::log(0.1), std::log(10.0)));
    return Point(r * direction(2 * n));
  }

  std::vector<Point> points(int n, int count) {
    std::vector<Point> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(point(n));
    return out;
  }

  Eigen::VectorXd vector(int m) {
    Eigen::VectorXd v(m);
    for (int i = 0; i < m; ++i) v(i) = gaussian();
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lck
