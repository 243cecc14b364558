#include "pga2d/metric.hpp"

#include "pga2d/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pga2d {

namespace {

const Multivector kIdealLine = Multivector::basis(Blade::e0);
const Multivector kPseudoscalar = Multivector::basis(Blade::I);

double max3(double x, double y, double z) {
  return std::max({std::abs(x), std::abs(y), std::abs(z)});
}

} // namespace

std::string_view to_string(NormTag tag) {
  switch (tag) {
  case NormTag::euclidean_line:
    return "euclidean line";
  case NormTag::ideal_line:
    return "ideal line";
  case NormTag::euclidean_point:
    return "euclidean point";
  case NormTag::ideal_point:
    return "ideal point";
  case NormTag::pseudoscalar:
    return "pseudoscalar";
  }
  return "unknown";
}

bool is_ideal(const Line& m, double tol) {
  return std::hypot(m.a, m.b) <= tol * max3(m.a, m.b, m.c);
}

bool is_ideal(const Point& p, double tol) {
  const double weight = signed_magnitude(outer(p.to_multivector(), kIdealLine));
  return std::abs(weight) <= tol * max3(p.x, p.y, p.z);
}

NormTag classify(const Line& m, double tol) {
  return is_ideal(m, tol) ? NormTag::ideal_line : NormTag::euclidean_line;
}

NormTag classify(const Point& p, double tol) {
  return is_ideal(p, tol) ? NormTag::ideal_point : NormTag::euclidean_point;
}

double norm(const Line& m, double tol) {
  if (is_ideal(m, tol)) {
    throw ClassificationError("ideal line has no euclidean norm; use ideal_norm");
  }
  return std::hypot(m.a, m.b);
}

double norm(const Point& p, double tol) {
  if (is_ideal(p, tol)) {
    throw ClassificationError("ideal point has no euclidean norm; use ideal_norm");
  }
  return p.z;
}

double ideal_norm(const Line& m, double tol) {
  if (!is_ideal(m, tol)) {
    throw ClassificationError("euclidean line has no ideal norm; use norm");
  }
  return m.c;
}

double ideal_norm(const Point& p, double tol) {
  if (!is_ideal(p, tol)) {
    throw ClassificationError("euclidean point has no ideal norm; use norm");
  }
  return std::hypot(p.x, p.y);
}

double ideal_norm(const IdealPoint& p) { return std::hypot(p.u, p.v); }

double ideal_norm(const Pseudoscalar& p) { return p.s; }

Line normalize(const Line& m, double tol) {
  if (max3(m.a, m.b, m.c) == 0.0) {
    throw DomainError("cannot normalize the zero line");
  }
  if (is_ideal(m, tol)) {
    return {0.0, 0.0, 1.0};
  }
  const double w = std::hypot(m.a, m.b);
  return {m.a / w, m.b / w, m.c / w};
}

Point normalize(const Point& p, double tol) {
  if (max3(p.x, p.y, p.z) == 0.0) {
    throw DomainError("cannot normalize the zero point");
  }
  if (is_ideal(p, tol)) {
    const double w = std::hypot(p.x, p.y);
    return {p.x / w, p.y / w, 0.0};
  }
  return {p.x / p.z, p.y / p.z, 1.0};
}

IdealPoint normalize(const IdealPoint& p) {
  const double w = ideal_norm(p);
  if (w == 0.0) {
    throw DomainError("cannot normalize the zero ideal point");
  }
  return {p.u / w, p.v / w};
}

Multivector polar(const Multivector& x) { return gp(kPseudoscalar, x); }

IdealPoint ideal_point_of(const Line& m, double tol) {
  if (is_ideal(m, tol)) {
    throw DomainError("the ideal line has no unique ideal point");
  }
  const Point p = Point::from_multivector(outer(m.to_multivector(), kIdealLine));
  return {p.x, p.y};
}

double ideal_inner(const IdealPoint& p, const IdealPoint& q) { return p.u * q.u + p.v * q.v; }

LinePair factor_point(const Point& p, double tol) {
  if (is_ideal(p, tol)) {
    throw ClassificationError("only euclidean points factor into orthonormal lines");
  }
  const Multivector pn = normalize(p, tol).to_multivector();
  // e1 . P is the horizontal line through P; it never vanishes for euclidean P.
  const Line m = normalize(Line::from_multivector(dot(Multivector::basis(Blade::e1), pn)), tol);
  const Line n = Line::from_multivector(dot(m.to_multivector(), pn));
  return {m, n};
}

} // namespace pga2d
