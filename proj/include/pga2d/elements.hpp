#pragma once

#include "pga2d/multivector.hpp"

namespace pga2d {

// The 1-vector c*e0 + a*e1 + b*e2, i.e. the line ax + by + cz = 0.
// Euclidean when a^2 + b^2 > 0, otherwise a multiple of the ideal line e0.
struct Line {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  Multivector to_multivector() const;
  // Grade-1 part of u; other grades are discarded.
  static Line from_multivector(const Multivector& u);

  friend bool operator==(const Line&, const Line&) = default;
};

// The 2-vector x*E1 + y*E2 + z*E0. Euclidean when z != 0; the euclidean
// position is (x/z, y/z).
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Multivector to_multivector() const;
  // Grade-2 part of u; other grades are discarded.
  static Point from_multivector(const Multivector& u);

  friend bool operator==(const Point&, const Point&) = default;
};

// A point on the ideal line, u*E1 + v*E2. Behaves as the free vector (u, v).
struct IdealPoint {
  double u = 0.0;
  double v = 0.0;

  Point as_point() const { return {u, v, 0.0}; }
  Multivector to_multivector() const { return as_point().to_multivector(); }

  friend bool operator==(const IdealPoint&, const IdealPoint&) = default;
};

// s*I.
struct Pseudoscalar {
  double s = 0.0;

  Multivector to_multivector() const { return Multivector::basis(Blade::I, s); }
  static Pseudoscalar from_multivector(const Multivector& u) { return {u[Blade::I]}; }

  friend bool operator==(const Pseudoscalar&, const Pseudoscalar&) = default;
};

// Element of the even subalgebra: s + bx*E1 + by*E2 + bz*E0. A normalized
// motor (g * reverse(g) == 1) acts on elements as a rotation or translation.
struct Motor {
  double s = 1.0;
  double bx = 0.0;
  double by = 0.0;
  double bz = 0.0;

  static Motor identity() { return {}; }

  Point bivector() const { return {bx, by, bz}; }
  Multivector to_multivector() const;
  // Even part (grades 0 and 2) of u.
  static Motor from_multivector(const Multivector& u);

  friend bool operator==(const Motor&, const Motor&) = default;
};

// m + lambda*I. With m normalized, acts as the glide reflection in m
// followed by a translation 2*lambda along m.
struct OddVersor {
  Line line;
  double lambda = 0.0;

  Multivector to_multivector() const;
  // Odd part (grades 1 and 3) of u.
  static OddVersor from_multivector(const Multivector& u);

  friend bool operator==(const OddVersor&, const OddVersor&) = default;
};

} // namespace pga2d
