#pragma once

#include "pga2d/elements.hpp"
#include "pga2d/metric.hpp"
#include "pga2d/multivector.hpp"

namespace pga2d {

// a x a for the normalized mirror a. An ideal mirror throws DomainError.
Multivector reflect(const Line& mirror, const Multivector& x, double tol = kDefaultTolerance);
Point reflect(const Line& mirror, const Point& p, double tol = kDefaultTolerance);
Line reflect(const Line& mirror, const Line& m, double tol = kDefaultTolerance);

// b * a over the normalized lines: reflection in a followed by reflection in b.
// Intersecting mirrors give a rotation about a ^ b through twice their angle,
// parallel mirrors a translation through twice their gap.
Motor rotor_from_lines(const Line& a, const Line& b, double tol = kDefaultTolerance);

// v x reverse(v).
Multivector sandwich(const Motor& g, const Multivector& x);
Multivector sandwich(const OddVersor& v, const Multivector& x);
Point sandwich(const Motor& g, const Point& p);
Line sandwich(const Motor& g, const Line& m);
Point sandwich(const OddVersor& v, const Point& p);
Line sandwich(const OddVersor& v, const Line& m);

Motor compose(const Motor& g, const Motor& h); // g * h: h first, then g
Motor reverse(const Motor& g);

// Scales g so that g * reverse(g) == 1 (that product is s^2 + bz^2).
Motor normalize(const Motor& g);

// e^B = cos t + (sin t / t) B with t = |bz|, exact for every bivector since
// B^2 = -bz^2. Euclidean B rotates, ideal B gives the translator 1 + B.
Motor exp_bivector(const Point& bivector);

// Inverse of exp_bivector for normalized g, defined on rotation magnitudes
// [0, pi): g and -g act identically, so g is first negated if s < 0.
Point log_motor(const Motor& g);

// exp(t * log(g)); t = 0 gives the identity, t = 1 gives +-g.
Motor interpolate(const Motor& g, double t);

// exp((angle / 2) * P) for the normalized euclidean point P. The sandwich
// rotates through `angle` about P; positive angles turn clockwise.
Motor rotator(const Point& center, double angle, double tol = kDefaultTolerance);

// exp((distance / 2) * V) for the unit ideal point V. The sandwich moves
// points by `distance` perpendicular to V, i.e. along V turned 90 degrees
// counter-clockwise.
Motor translator(const IdealPoint& direction, double distance);

// A glide reflection m + lambda I split into its normalized axis and
// 2 lambda / |m|, the weight of the ideal term 2 lambda m_inf in the sandwich
// of a point. axis + (translation_distance / 2) I recomposes the versor up to
// scale.
struct GlideDecomposition {
  Line axis;
  double translation_distance = 0.0;

  // Displacement of normalized points: the mirror image carries weight -1,
  // so points move by -translation_distance * (axis ^ e0).
  IdealPoint translation() const;
};

// An ideal grade-1 part throws DomainError.
GlideDecomposition glide_decompose(const OddVersor& v, double tol = kDefaultTolerance);

// Two normalized lines a, b with b * a == g for a normalized motor g.
LinePair factor_motor(const Motor& g, double tol = kDefaultTolerance);

// The direct isometry taking point A on oriented line m to point A2 on
// oriented line m2, built from mirrors: with a = A v A2, the perpendicular
// bisector r = (A + A2) . a meets c = m - m2 in the centre C, and g = r (A v C).
// An ideal C yields a translation. Coincident points fall back to a rotation
// about A; identical pairs give the identity. The result has s >= 0.
// Non-incident inputs, or a result failing the mapping check, throw DomainError.
Motor solve_point_line_transport(const Point& a, const Line& m, const Point& a2, const Line& m2,
                                 double tol = kDefaultTolerance);

} // namespace pga2d
