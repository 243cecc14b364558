#pragma once

// Fixed-seed generators for the property tests.

#include "pga2d/elements.hpp"
#include "pga2d/multivector.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace pga2d::testing {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed = 0x5eed2d) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double angle() { return uniform(-std::numbers::pi, std::numbers::pi); }
  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

  Multivector multivector() {
    Multivector::Coefficients c{};
    for (double& x : c) {
      x = uniform(-1.0, 1.0);
    }
    return Multivector(c);
  }

  // Normalized euclidean line with random direction and offset.
  Line line(double reach = 5.0) {
    const double t = angle();
    return {std::cos(t), std::sin(t), uniform(-reach, reach)};
  }

  // Normalized euclidean point.
  Point point(double reach = 5.0) { return {uniform(-reach, reach), uniform(-reach, reach), 1.0}; }

  // Unit ideal point.
  IdealPoint direction() {
    const double t = angle();
    return {std::cos(t), std::sin(t)};
  }

  // Normalized line through p with the given direction angle.
  static Line line_through(const Point& p, double direction) {
    // Direction (b, -a) = (cos t, sin t).
    const double a = -std::sin(direction);
    const double b = std::cos(direction);
    return {a, b, -(a * p.x + b * p.y)};
  }

private:
  std::mt19937_64 rng_;
};

} // namespace pga2d::testing
