#pragma once

#include "pga2d/elements.hpp"
#include "pga2d/multivector.hpp"

#include <string_view>

namespace pga2d {

enum class MeasureKind {
  line_angle,          // intersecting lines, radians in [0, pi]
  parallel_distance,   // gap between parallel lines, >= 0
  point_distance,      // two euclidean points, >= 0
  ideal_angle,         // two ideal points, radians in [0, pi]
  line_point_distance, // signed, positive to the left of the oriented line
  line_ideal_angle,    // line direction vs ideal point, radians in [0, pi]
};

std::string_view to_string(MeasureKind kind);

struct Measurement {
  double value = 0.0;
  MeasureKind kind = MeasureKind::point_distance;
};

// All measurement functions normalize their arguments first, so any
// nonzero weight may be passed.

// |P v Q|. Ideal arguments throw ClassificationError.
Measurement distance(const Point& p, const Point& q, double tol = kDefaultTolerance);
// |m ^ n|_inf for parallel (or anti-parallel) lines; intersecting lines
// throw DomainError.
Measurement distance(const Line& m, const Line& n, double tol = kDefaultTolerance);
// S(m ^ P) = m v P, and d(P, m) = -d(m, P).
Measurement distance(const Line& m, const Point& p, double tol = kDefaultTolerance);
Measurement distance(const Point& p, const Line& m, double tol = kDefaultTolerance);

// atan2(|m ^ n| weight, m . n). An ideal line is perpendicular to every
// euclidean line; two ideal lines throw DomainError.
Measurement angle(const Line& m, const Line& n, double tol = kDefaultTolerance);
// acos(<U, V>_inf).
Measurement angle(const IdealPoint& p, const IdealPoint& q);
// acos(|m . U|_inf).
Measurement angle(const Line& m, const IdealPoint& p, double tol = kDefaultTolerance);
Measurement angle(const IdealPoint& p, const Line& m, double tol = kDefaultTolerance);

enum class LinePairKind { intersecting, parallel, anti_parallel };

// Decided by the ideal classification of the meet of the normalized lines,
// then by the sign of m . n.
LinePairKind classify_pair(const Line& m, const Line& n, double tol = kDefaultTolerance);

// Normalized m + n: the bisector through the common point, or the parallel
// mid-line. Anti-parallel lines throw DomainError (negate one of them).
Line midline(const Line& m, const Line& n, double tol = kDefaultTolerance);

// (P + Q) / 2 for normalized euclidean P, Q; z = 1.
Point midpoint(const Point& p, const Point& q, double tol = kDefaultTolerance);

// x = parallel_part + orthogonal_part exactly (up to rounding).
struct Decomposition {
  Multivector parallel_part;
  Multivector orthogonal_part;
};

// Orthogonal projections X = +-(X Y) Y with Y normalized. Only the target is
// rescaled, so the parts sum to x as passed in. Ideal arguments throw
// ClassificationError.
//   line onto line:   cos(a) n | line through the meet perpendicular to n
//                     (n | d*e0 for parallel lines)
//   line onto point:  line through P parallel to x | -d*e0
//   point onto line:  foot of the perpendicular | ideal offset P - foot
//   point onto point: Q | ideal difference P - Q
Decomposition project(const Line& x, const Line& onto, double tol = kDefaultTolerance);
Decomposition project(const Line& x, const Point& onto, double tol = kDefaultTolerance);
Decomposition project(const Point& x, const Line& onto, double tol = kDefaultTolerance);
Decomposition project(const Point& x, const Point& onto, double tol = kDefaultTolerance);

// m . P: the line through P perpendicular to m, with the norm of m and the
// orientation of m turned 90 degrees counter-clockwise.
Line perp_line_through(const Line& m, const Point& p, double tol = kDefaultTolerance);

// A*B*C for normalized euclidean points. The scalar part vanishes and the
// product equals -(A - B + C).
Point triple_points(const Point& a, const Point& b, const Point& c,
                    double tol = kDefaultTolerance);

struct TripleLines {
  Line grade1;         // <abc>_1
  Pseudoscalar grade3; // <abc>_3 = sin(gamma) d_Cc I
  bool degenerate = false; // some pair parallel, or all three concurrent
};

TripleLines triple_lines(const Line& a, const Line& b, const Line& c,
                         double tol = kDefaultTolerance);

// abc + acb + bac + bca + cab + cba over the normalized lines.
Multivector symmetric_sum(const Line& a, const Line& b, const Line& c,
                          double tol = kDefaultTolerance);
// Grade-1 part of symmetric_sum; the other grades vanish identically.
Line symmetric_line(const Line& a, const Line& b, const Line& c, double tol = kDefaultTolerance);

} // namespace pga2d
