#pragma once

#include "oracle.hpp"
#include "pga2d/multivector.hpp"

#include <algorithm>
#include <cmath>

namespace pga2d::testing {

inline oracle::Coeffs coeffs(const Multivector& u) {
  oracle::Coeffs c{};
  std::copy(u.coefficients().begin(), u.coefficients().end(), c.begin());
  return c;
}

inline Multivector from_coeffs(const oracle::Coeffs& c) { return Multivector(c); }

// Oracle product, then keep grade k.
inline Multivector oracle_gp(const Multivector& u, const Multivector& v) {
  return from_coeffs(oracle::product(coeffs(u), coeffs(v)));
}

inline double max_diff(const Multivector& u, const Multivector& v) {
  double m = 0.0;
  for (Blade b : kAllBlades) {
    m = std::max(m, std::abs(u[b] - v[b]));
  }
  return m;
}

inline Multivector B(Blade b, double w = 1.0) { return Multivector::basis(b, w); }

} // namespace pga2d::testing
