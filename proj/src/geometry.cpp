#include "pga2d/geometry.hpp"

#include "pga2d/errors.hpp"
#include "pga2d/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pga2d {

namespace {

void require_euclidean(const Line& m, double tol) {
  if (is_ideal(m, tol)) {
    throw ClassificationError("expected a euclidean line");
  }
}

void require_euclidean(const Point& p, double tol) {
  if (is_ideal(p, tol)) {
    throw ClassificationError("expected a euclidean point");
  }
}

template <typename Element>
Element euclidean_normalized(const Element& x, double tol) {
  require_euclidean(x, tol);
  return normalize(x, tol);
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

} // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
  case MeasureKind::line_angle:
    return "angle between intersecting lines";
  case MeasureKind::parallel_distance:
    return "distance between parallel lines";
  case MeasureKind::point_distance:
    return "distance between points";
  case MeasureKind::ideal_angle:
    return "angle between ideal points";
  case MeasureKind::line_point_distance:
    return "signed distance between line and point";
  case MeasureKind::line_ideal_angle:
    return "angle between line and ideal point";
  }
  return "unknown";
}

Measurement distance(const Point& p, const Point& q, double tol) {
  const Multivector pn = euclidean_normalized(p, tol).to_multivector();
  const Multivector qn = euclidean_normalized(q, tol).to_multivector();
  const Line joined = Line::from_multivector(join(pn, qn));
  return {std::hypot(joined.a, joined.b), MeasureKind::point_distance};
}

Measurement distance(const Line& m, const Line& n, double tol) {
  if (classify_pair(m, n, tol) == LinePairKind::intersecting) {
    throw DomainError("intersecting lines have no distance; measure their angle instead");
  }
  const Multivector mn = euclidean_normalized(m, tol).to_multivector();
  const Multivector nn = euclidean_normalized(n, tol).to_multivector();
  const Point meet = Point::from_multivector(outer(mn, nn));
  return {std::hypot(meet.x, meet.y), MeasureKind::parallel_distance};
}

Measurement distance(const Line& m, const Point& p, double tol) {
  const Multivector mn = euclidean_normalized(m, tol).to_multivector();
  const Multivector pn = euclidean_normalized(p, tol).to_multivector();
  return {signed_magnitude(outer(mn, pn)), MeasureKind::line_point_distance};
}

Measurement distance(const Point& p, const Line& m, double tol) {
  Measurement d = distance(m, p, tol);
  d.value = -d.value;
  return d;
}

Measurement angle(const Line& m, const Line& n, double tol) {
  const bool m_ideal = is_ideal(m, tol);
  const bool n_ideal = is_ideal(n, tol);
  if (m_ideal && n_ideal) {
    throw DomainError("no angle is defined between two ideal lines");
  }
  if (m_ideal || n_ideal) {
    return {std::numbers::pi / 2.0, MeasureKind::line_angle};
  }
  const Multivector mn = normalize(m, tol).to_multivector();
  const Multivector nn = normalize(n, tol).to_multivector();
  const double cos_a = dot(mn, nn)[Blade::one];
  const double sin_a = std::abs(outer(mn, nn)[Blade::E0]);
  return {std::atan2(sin_a, cos_a), MeasureKind::line_angle};
}

Measurement angle(const IdealPoint& p, const IdealPoint& q) {
  const IdealPoint pn = normalize(p);
  const IdealPoint qn = normalize(q);
  return {std::acos(clamp_unit(ideal_inner(pn, qn))), MeasureKind::ideal_angle};
}

Measurement angle(const Line& m, const IdealPoint& p, double tol) {
  const Multivector mn = euclidean_normalized(m, tol).to_multivector();
  const Multivector pn = normalize(p).to_multivector();
  // m . U = cos(a) e0, whose ideal norm is its e0 coefficient.
  const double cos_a = dot(mn, pn)[Blade::e0];
  return {std::acos(clamp_unit(cos_a)), MeasureKind::line_ideal_angle};
}

Measurement angle(const IdealPoint& p, const Line& m, double tol) { return angle(m, p, tol); }

LinePairKind classify_pair(const Line& m, const Line& n, double tol) {
  const Multivector mn = euclidean_normalized(m, tol).to_multivector();
  const Multivector nn = euclidean_normalized(n, tol).to_multivector();
  const Point meet = Point::from_multivector(outer(mn, nn));
  if (!is_ideal(meet, tol)) {
    return LinePairKind::intersecting;
  }
  return dot(mn, nn)[Blade::one] < 0.0 ? LinePairKind::anti_parallel : LinePairKind::parallel;
}

Line midline(const Line& m, const Line& n, double tol) {
  if (classify_pair(m, n, tol) == LinePairKind::anti_parallel) {
    throw DomainError("anti-parallel lines sum to the ideal line; negate one of them");
  }
  const Multivector sum = normalize(m, tol).to_multivector() + normalize(n, tol).to_multivector();
  return normalize(Line::from_multivector(sum), tol);
}

Point midpoint(const Point& p, const Point& q, double tol) {
  const Multivector sum =
      euclidean_normalized(p, tol).to_multivector() + euclidean_normalized(q, tol).to_multivector();
  return Point::from_multivector(0.5 * sum);
}

Decomposition project(const Line& x, const Line& onto, double tol) {
  require_euclidean(x, tol);
  const Multivector m = x.to_multivector();
  const Multivector n = euclidean_normalized(onto, tol).to_multivector();
  // m = (m . n) n + (m ^ n) n, using n^2 = 1.
  return {gp(dot(m, n), n).grade(1), gp(outer(m, n), n).grade(1)};
}

Decomposition project(const Line& x, const Point& onto, double tol) {
  require_euclidean(x, tol);
  const Multivector m = x.to_multivector();
  const Multivector p = euclidean_normalized(onto, tol).to_multivector();
  // m = -(m . P) P - (m ^ P) P, using P^2 = -1.
  return {-gp(dot(m, p), p).grade(1), -gp(outer(m, p), p).grade(1)};
}

Decomposition project(const Point& x, const Line& onto, double tol) {
  require_euclidean(x, tol);
  const Multivector p = x.to_multivector();
  const Multivector m = euclidean_normalized(onto, tol).to_multivector();
  // P = m (m . P) + m (m ^ P), using m^2 = 1.
  return {gp(m, dot(m, p)).grade(2), gp(m, outer(m, p)).grade(2)};
}

Decomposition project(const Point& x, const Point& onto, double tol) {
  require_euclidean(x, tol);
  const Multivector p = x.to_multivector();
  const Multivector q = euclidean_normalized(onto, tol).to_multivector();
  // P = -(P . Q) Q - (P x Q) Q, using Q^2 = -1.
  return {-gp(dot(p, q), q).grade(2), -gp(commutator(p, q), q).grade(2)};
}

Line perp_line_through(const Line& m, const Point& p, double tol) {
  require_euclidean(m, tol);
  const Multivector pn = euclidean_normalized(p, tol).to_multivector();
  return Line::from_multivector(dot(m.to_multivector(), pn));
}

Point triple_points(const Point& a, const Point& b, const Point& c, double tol) {
  const Multivector an = euclidean_normalized(a, tol).to_multivector();
  const Multivector bn = euclidean_normalized(b, tol).to_multivector();
  const Multivector cn = euclidean_normalized(c, tol).to_multivector();
  return Point::from_multivector(gp(an, gp(bn, cn)));
}

TripleLines triple_lines(const Line& a, const Line& b, const Line& c, double tol) {
  const Line an = euclidean_normalized(a, tol);
  const Line bn = euclidean_normalized(b, tol);
  const Line cn = euclidean_normalized(c, tol);
  const Multivector product = gp(gp(an.to_multivector(), bn.to_multivector()), cn.to_multivector());

  bool degenerate = classify_pair(an, bn, tol) != LinePairKind::intersecting ||
                    classify_pair(bn, cn, tol) != LinePairKind::intersecting ||
                    classify_pair(an, cn, tol) != LinePairKind::intersecting;
  if (!degenerate) {
    const double scale = std::max({1.0, std::abs(an.c), std::abs(bn.c), std::abs(cn.c)});
    const double concurrency = signed_magnitude(
        outer(an.to_multivector(), outer(bn.to_multivector(), cn.to_multivector())));
    degenerate = std::abs(concurrency) <= tol * scale;
  }
  return {Line::from_multivector(product), Pseudoscalar::from_multivector(product), degenerate};
}

Multivector symmetric_sum(const Line& a, const Line& b, const Line& c, double tol) {
  const Multivector x = euclidean_normalized(a, tol).to_multivector();
  const Multivector y = euclidean_normalized(b, tol).to_multivector();
  const Multivector z = euclidean_normalized(c, tol).to_multivector();
  return gp(gp(x, y), z) + gp(gp(x, z), y) + gp(gp(y, x), z) + gp(gp(y, z), x) +
         gp(gp(z, x), y) + gp(gp(z, y), x);
}

Line symmetric_line(const Line& a, const Line& b, const Line& c, double tol) {
  return Line::from_multivector(symmetric_sum(a, b, c, tol));
}

} // namespace pga2d
