#include "pga2d/isometry.hpp"

#include "pga2d/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pga2d {

namespace {

const Multivector kIdealLine = Multivector::basis(Blade::e0);

// Below this magnitude sin(t)/t and t/sin(t) switch to their Taylor series.
constexpr double kSeriesCutoff = 1e-4;

// Mapping check applied to the transport solution.
constexpr double kTransportCheck = 1e-6;

double sinc(double t) {
  if (std::abs(t) < kSeriesCutoff) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

double inverse_sinc(double t) {
  if (std::abs(t) < kSeriesCutoff) {
    const double t2 = t * t;
    return 1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
  }
  return t / std::sin(t);
}

Line mirror_line(const Line& m, double tol) {
  if (is_ideal(m, tol)) {
    throw DomainError("the ideal line cannot act as a mirror");
  }
  return normalize(m, tol);
}

Motor canonical_sign(const Motor& g) {
  if (g.s < 0.0 || (g.s == 0.0 && g.bz < 0.0)) {
    return {-g.s, -g.bx, -g.by, -g.bz};
  }
  return g;
}

double max_coefficient(const Point& p) { return std::max({std::abs(p.x), std::abs(p.y), std::abs(p.z)}); }
double max_coefficient(const Line& m) { return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c)}); }

bool maps_onto(const Motor& g, const Point& a, const Line& m, const Point& a2, const Line& m2) {
  const Point image_a = sandwich(g, a);
  const Line image_m = sandwich(g, m);
  if (is_ideal(image_a) || is_ideal(image_m)) {
    return false;
  }
  const Point pa = normalize(image_a);
  const Line lm = normalize(image_m);
  const double scale = std::max({1.0, max_coefficient(a2), max_coefficient(m2)});
  const double gap = std::max({std::abs(pa.x - a2.x), std::abs(pa.y - a2.y), std::abs(lm.a - m2.a),
                               std::abs(lm.b - m2.b), std::abs(lm.c - m2.c)});
  return gap <= kTransportCheck * scale;
}

} // namespace

Multivector reflect(const Line& mirror, const Multivector& x, double tol) {
  const Multivector a = mirror_line(mirror, tol).to_multivector();
  return gp(a, gp(x, a));
}

Point reflect(const Line& mirror, const Point& p, double tol) {
  return Point::from_multivector(reflect(mirror, p.to_multivector(), tol));
}

Line reflect(const Line& mirror, const Line& m, double tol) {
  return Line::from_multivector(reflect(mirror, m.to_multivector(), tol));
}

Motor rotor_from_lines(const Line& a, const Line& b, double tol) {
  const Multivector an = normalize(a, tol).to_multivector();
  const Multivector bn = normalize(b, tol).to_multivector();
  return Motor::from_multivector(gp(bn, an));
}

Multivector sandwich(const Motor& g, const Multivector& x) {
  const Multivector v = g.to_multivector();
  return gp(v, gp(x, reverse(v)));
}

Multivector sandwich(const OddVersor& r, const Multivector& x) {
  const Multivector v = r.to_multivector();
  return gp(v, gp(x, reverse(v)));
}

Point sandwich(const Motor& g, const Point& p) {
  return Point::from_multivector(sandwich(g, p.to_multivector()));
}

Line sandwich(const Motor& g, const Line& m) {
  return Line::from_multivector(sandwich(g, m.to_multivector()));
}

Point sandwich(const OddVersor& v, const Point& p) {
  return Point::from_multivector(sandwich(v, p.to_multivector()));
}

Line sandwich(const OddVersor& v, const Line& m) {
  return Line::from_multivector(sandwich(v, m.to_multivector()));
}

Motor compose(const Motor& g, const Motor& h) {
  return Motor::from_multivector(gp(g.to_multivector(), h.to_multivector()));
}

Motor reverse(const Motor& g) { return {g.s, -g.bx, -g.by, -g.bz}; }

Motor normalize(const Motor& g) {
  const double w = std::hypot(g.s, g.bz);
  if (w == 0.0) {
    throw DomainError("a motor with vanishing scalar and E0 parts cannot be normalized");
  }
  return {g.s / w, g.bx / w, g.by / w, g.bz / w};
}

Motor exp_bivector(const Point& bivector) {
  const double t = std::abs(bivector.z);
  const double k = sinc(t);
  return {std::cos(t), k * bivector.x, k * bivector.y, k * bivector.z};
}

Point log_motor(const Motor& g) {
  const Motor h = canonical_sign(g);
  const double r = std::hypot(h.s, h.bz);
  if (r == 0.0) {
    throw DomainError("logarithm of a motor with vanishing scalar and E0 parts");
  }
  const double theta = std::atan2(h.bz, h.s);
  const double k = inverse_sinc(theta) / r;
  return {k * h.bx, k * h.by, k * h.bz};
}

Motor interpolate(const Motor& g, double t) {
  const Point b = log_motor(g);
  return exp_bivector({t * b.x, t * b.y, t * b.z});
}

Motor rotator(const Point& center, double angle, double tol) {
  if (is_ideal(center, tol)) {
    throw ClassificationError("rotation centre must be a euclidean point");
  }
  const Point p = normalize(center, tol);
  const double h = angle / 2.0;
  return exp_bivector({h * p.x, h * p.y, h * p.z});
}

Motor translator(const IdealPoint& direction, double distance) {
  const IdealPoint v = normalize(direction);
  const double h = distance / 2.0;
  return exp_bivector({h * v.u, h * v.v, 0.0});
}

IdealPoint GlideDecomposition::translation() const {
  const IdealPoint dir = ideal_point_of(axis);
  return {-translation_distance * dir.u, -translation_distance * dir.v};
}

GlideDecomposition glide_decompose(const OddVersor& v, double tol) {
  if (is_ideal(v.line, tol)) {
    throw DomainError("glide axis is ideal");
  }
  const double w = norm(v.line, tol);
  return {normalize(v.line, tol), 2.0 * v.lambda / w};
}

LinePair factor_motor(const Motor& g, double tol) {
  const Point b = g.bivector();
  Line first{1.0, 0.0, 0.0};
  if (max_coefficient(b) > tol * std::max(1.0, std::abs(g.s))) {
    if (!is_ideal(b, tol)) {
      // Any line through the centre; the horizontal one e1 . P.
      first = Line::from_multivector(dot(Multivector::basis(Blade::e1), b.to_multivector()));
    } else {
      // Translations: a line through the origin carrying the ideal point.
      first = Line::from_multivector(join(b.to_multivector(), Multivector::basis(Blade::E0)));
    }
    first = normalize(first, tol);
  }
  // g = b a with a^2 = 1 gives b = g a; its grade-3 part vanishes because a
  // passes through the bivector part of g.
  const Line second = Line::from_multivector(gp(g.to_multivector(), first.to_multivector()));
  return {first, second};
}

Motor solve_point_line_transport(const Point& a, const Line& m, const Point& a2, const Line& m2,
                                 double tol) {
  for (const Point* p : {&a, &a2}) {
    if (is_ideal(*p, tol)) {
      throw ClassificationError("transport points must be euclidean");
    }
  }
  for (const Line* l : {&m, &m2}) {
    if (is_ideal(*l, tol)) {
      throw ClassificationError("transport lines must be euclidean");
    }
  }
  const Point pa = normalize(a, tol);
  const Point pa2 = normalize(a2, tol);
  const Line lm = normalize(m, tol);
  const Line lm2 = normalize(m2, tol);
  const double scale =
      std::max({1.0, max_coefficient(pa), max_coefficient(pa2), max_coefficient(lm), max_coefficient(lm2)});

  const Multivector A = pa.to_multivector();
  const Multivector A2 = pa2.to_multivector();
  const Multivector M = lm.to_multivector();
  const Multivector M2 = lm2.to_multivector();

  if (std::abs(signed_magnitude(outer(M, A))) > tol * scale ||
      std::abs(signed_magnitude(outer(M2, A2))) > tol * scale) {
    throw DomainError("each point must lie on its line");
  }

  Motor g;
  const Multivector joining = join(A, A2);
  if (std::hypot(joining[Blade::e1], joining[Blade::e2]) <= tol * scale) {
    // Coincident points: rotate about A, mirroring in m and then in the
    // bisector of m and m2 (or the perpendicular to m for a half turn).
    Line bisector = Line::from_multivector(M + M2);
    if (is_ideal(bisector, tol)) {
      bisector = Line::from_multivector(dot(M, A));
    }
    g = rotor_from_lines(lm, bisector, tol);
  } else {
    const Multivector r = normalize(Line::from_multivector(dot(A + A2, joining)), tol).to_multivector();
    const Multivector c = M - M2;
    const Multivector centre = outer(r, c);
    if (centre.max_abs() <= tol * std::max(1.0, c.max_abs())) {
      // c vanishes or coincides with r: the mirror r takes A to A2 and m to
      // -m2, and the perpendicular to m2 at A2 restores the orientation.
      const Line restore = normalize(Line::from_multivector(dot(M2, A2)), tol);
      g = Motor::from_multivector(gp(restore.to_multivector(), r));
    } else {
      const Line s = normalize(Line::from_multivector(join(A, centre)), tol);
      g = Motor::from_multivector(gp(r, s.to_multivector()));
    }
  }

  g = canonical_sign(normalize(g));
  if (!maps_onto(g, pa, lm, pa2, lm2)) {
    throw DomainError("no direct isometry found for the given point/line pairs");
  }
  return g;
}

} // namespace pga2d
