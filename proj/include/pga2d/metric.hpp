#pragma once

#include "pga2d/elements.hpp"
#include "pga2d/multivector.hpp"

#include <string_view>

namespace pga2d {

enum class NormTag { euclidean_line, ideal_line, euclidean_point, ideal_point, pseudoscalar };

std::string_view to_string(NormTag tag);

// Classification is relative to the largest coefficient: a line is ideal
// when sqrt(a^2 + b^2) <= tol * max(|a|,|b|,|c|), a point when
// |S(P ^ e0)| = |z| <= tol * max(|x|,|y|,|z|). The zero element counts as ideal.
bool is_ideal(const Line& m, double tol = kDefaultTolerance);
bool is_ideal(const Point& p, double tol = kDefaultTolerance);

NormTag classify(const Line& m, double tol = kDefaultTolerance);
NormTag classify(const Point& p, double tol = kDefaultTolerance);

// Euclidean norms. Lines: sqrt(a^2 + b^2) >= 0. Points: z, signed.
// Ideal arguments throw ClassificationError.
double norm(const Line& m, double tol = kDefaultTolerance);
double norm(const Point& p, double tol = kDefaultTolerance);

// Ideal norms. Ideal lines: c (signed). Ideal points: sqrt(x^2 + y^2).
// Pseudoscalars: S(sI) = s. Euclidean arguments throw ClassificationError.
double ideal_norm(const Line& m, double tol = kDefaultTolerance);
double ideal_norm(const Point& p, double tol = kDefaultTolerance);
double ideal_norm(const IdealPoint& p);
double ideal_norm(const Pseudoscalar& p);

// Euclidean elements are scaled to norm 1 (lines square to +1, points get
// z = 1 and square to -1); ideal elements to ideal norm 1.
// The zero element throws DomainError.
Line normalize(const Line& m, double tol = kDefaultTolerance);
Point normalize(const Point& p, double tol = kDefaultTolerance);
IdealPoint normalize(const IdealPoint& p);

// I * x. Maps a normalized euclidean line to its unit perpendicular ideal
// point, a normalized euclidean point to -e0, and ideal elements to 0.
Multivector polar(const Multivector& x);

// m ^ e0, the direction of m as an ideal point. Ideal m throws DomainError.
IdealPoint ideal_point_of(const Line& m, double tol = kDefaultTolerance);

// <U, V>_inf = uU*uV + vU*vV.
double ideal_inner(const IdealPoint& p, const IdealPoint& q);

struct LinePair {
  Line first;
  Line second;
};

// Orthonormal lines m, n with m * n == normalize(p): m is the horizontal
// line through p, n = m . p the vertical one. Ideal p throws ClassificationError.
LinePair factor_point(const Point& p, double tol = kDefaultTolerance);

} // namespace pga2d
