#include "bridge.hpp"
#include "oracle.hpp"
#include "sampling.hpp"

#include "pga2d/errors.hpp"
#include "pga2d/geometry.hpp"
#include "pga2d/metric.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pga2d;
using pga2d::testing::B;
using pga2d::testing::max_diff;
using pga2d::testing::oracle_gp;

namespace {

constexpr double kPi = std::numbers::pi;

Multivector mv(const Line& m) { return m.to_multivector(); }
Multivector mv(const Point& p) { return p.to_multivector(); }

// Euclidean coordinates of the intersection of two lines, by Cramer's rule.
std::pair<double, double> cramer(const Line& m, const Line& n) {
  const double det = m.a * n.b - m.b * n.a;
  return {(m.b * n.c - m.c * n.b) / det, (m.c * n.a - m.a * n.c) / det};
}

Multivector power(const Multivector& x, int k) {
  Multivector out = Multivector::scalar(1);
  for (int i = 0; i < k; ++i) {
    out = gp(out, x);
  }
  return out;
}

} // namespace

TEST_CASE("point distances") {
  CHECK(distance(Point{0, 0, 1}, Point{3, 4, 1}).value == oracle::analytic_distance(0, 0, 3, 4));
  CHECK(distance(Point{0, 0, 2}, Point{6, 8, 2}).value == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(distance(Point{0, 0, 1}, Point{3, 4, 1}).kind == MeasureKind::point_distance);
  CHECK_THROWS_AS(distance(Point{0, 0, 1}, Point{1, 0, 0}), ClassificationError);
}

TEST_CASE("line-point distances") {
  const Multivector p = B(Blade::E0) + B(Blade::E2);
  const double expected = signed_magnitude(oracle_gp(B(Blade::e2), p).grade(3));
  CHECK(expected == 1.0);
  CHECK(distance(Line{0, 1, 0}, Point{0, 1, 1}).value == expected);
  CHECK(distance(Point{0, 1, 1}, Line{0, 1, 0}).value == -expected);
  CHECK(distance(Line{0, 1, 0}, Point{7, 0, 1}).value == 0.0);
  // Positive to the left of the oriented line: [0,1,0] runs along +x.
  CHECK(distance(Line{0, 1, 0}, Point{0, -2, 1}).value == -2.0);
  CHECK(distance(Line{0, 1, 0}, Point{0, 1, 1}).kind == MeasureKind::line_point_distance);
}

TEST_CASE("parallel line distances") {
  CHECK(distance(Line{1, 0, 0}, Line{1, 0, -2}).value == 2.0);
  CHECK(distance(Line{1, 0, 0}, Line{-2, 0, 4}).value == 2.0);
  CHECK(distance(Line{1, 0, 0}, Line{1, 0, -2}).kind == MeasureKind::parallel_distance);
  CHECK_THROWS_AS(distance(Line{1, 0, 0}, Line{0, 1, 0}), DomainError);
}

TEST_CASE("line angles") {
  CHECK(angle(Line{1, 0, 0}, Line{0, 1, 0}).value == doctest::Approx(kPi / 2));
  testing::Sampler s(51);
  const Line m = s.line();
  CHECK(angle(m, m).value == 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  const Line n{r, r, 0};
  const double expected = std::acos(oracle_gp(mv(Line{1, 0, 0}), mv(n))[Blade::one]);
  CHECK(angle(Line{1, 0, 0}, n).value == doctest::Approx(expected).epsilon(1e-15));
  CHECK(expected == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(angle(Line{1, 0, 0}, Line{-1, 0, 3}).value == doctest::Approx(kPi));
  CHECK(angle(Line{1, 0, 0}, Line{0, 0, 1}).value == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(angle(Line{0, 0, 1}, Line{0, 0, 2}), DomainError);
}

TEST_CASE("ideal point angles") {
  CHECK(angle(IdealPoint{1, 0}, IdealPoint{0, 3}).value == doctest::Approx(kPi / 2));
  CHECK(angle(IdealPoint{1, 0}, IdealPoint{-2, 0}).value == doctest::Approx(kPi));
  CHECK(angle(IdealPoint{1, 0}, IdealPoint{1, 1}).kind == MeasureKind::ideal_angle);
  // The direction of [0,1,0] is (1,0).
  CHECK(angle(Line{0, 1, 0}, IdealPoint{1, 0}).value == doctest::Approx(0.0));
  CHECK(angle(IdealPoint{0, 1}, Line{0, 1, 0}).value == doctest::Approx(kPi / 2));
  CHECK(angle(Line{0, 1, 0}, IdealPoint{-1, 0}).value == doctest::Approx(kPi));
}

TEST_CASE("pair classification") {
  CHECK(classify_pair(Line{1, 0, 0}, Line{0, 1, 0}) == LinePairKind::intersecting);
  CHECK(classify_pair(Line{1, 0, 0}, Line{2, 0, 1}) == LinePairKind::parallel);
  CHECK(classify_pair(Line{1, 0, 0}, Line{-1, 0, 1}) == LinePairKind::anti_parallel);
}

TEST_CASE("midpoints and midlines") {
  CHECK(midpoint(Point{0, 0, 1}, Point{2, 0, 1}) == Point{1, 0, 1});
  CHECK(midpoint(Point{0, 0, 3}, Point{4, 0, 2}) == Point{1, 0, 1});

  const Line mid = midline(Line{1, 0, 0}, Line{1, 0, -2});
  CHECK(mid.a == doctest::Approx(1.0));
  CHECK(mid.c == doctest::Approx(-1.0));
  CHECK(distance(mid, Line{1, 0, 0}).value == doctest::Approx(1.0));
  CHECK(distance(mid, Line{1, 0, -2}).value == doctest::Approx(1.0));

  const Line bis = midline(Line{1, 0, 0}, Line{0, 1, 0});
  CHECK(angle(bis, Line{1, 0, 0}).value == doctest::Approx(kPi / 4));
  CHECK(angle(bis, Line{0, 1, 0}).value == doctest::Approx(kPi / 4));
  CHECK_THROWS_AS(midline(Line{1, 0, 0}, Line{-1, 0, 2}), DomainError);
}

TEST_CASE("projections") {
  const Decomposition d = project(Point{1, 1, 1}, Line{0, 1, 0});
  const auto [fx, fy] = oracle::analytic_foot(1, 1, 0, 1, 0);
  CHECK(d.parallel_part == Point{fx, fy, 1}.to_multivector());
  CHECK(d.orthogonal_part == Point{0, 1, 0}.to_multivector());

  const Decomposition on = project(Point{3, 0, 1}, Line{0, 1, 0});
  CHECK(on.parallel_part == Point{3, 0, 1}.to_multivector());
  CHECK(on.orthogonal_part.is_zero());

  testing::Sampler s(52);
  const Line m = s.line();
  const Decomposition self = project(m, m);
  CHECK(max_diff(self.parallel_part, mv(m)) <= 1e-15);
  CHECK(self.orthogonal_part.is_zero(1e-15));

  // Parallel lines: n plus d times the ideal line.
  const Decomposition par = project(Line{1, 0, -3}, Line{1, 0, -1});
  CHECK(max_diff(par.parallel_part, mv(Line{1, 0, -1})) <= 1e-15);
  CHECK(max_diff(par.orthogonal_part, B(Blade::e0, -2)) <= 1e-15);

  // Line onto point: parallel line through the point, minus d times e0.
  const Decomposition lp = project(Line{0, 1, -2}, Point{5, 0, 1});
  CHECK(max_diff(lp.parallel_part, mv(Line{0, 1, 0})) <= 1e-15);
  CHECK(max_diff(lp.orthogonal_part, B(Blade::e0, -2)) <= 1e-15);

  // Point onto point.
  const Decomposition pp = project(Point{3, 4, 1}, Point{1, 1, 1});
  CHECK(max_diff(pp.parallel_part, mv(Point{1, 1, 1})) <= 1e-15);
  CHECK(max_diff(pp.orthogonal_part, mv(Point{2, 3, 0})) <= 1e-15);

  CHECK_THROWS_AS(project(Point{1, 0, 0}, Line{0, 1, 0}), ClassificationError);
  CHECK_THROWS_AS(project(Point{1, 0, 1}, Line{0, 0, 1}), ClassificationError);
}

TEST_CASE("projections reconstruct their inputs") {
  testing::Sampler s(53);
  for (int i = 0; i < 500; ++i) {
    const double w = s.uniform(0.5, 3);
    const Line m = s.line();
    const Line mw{w * m.a, w * m.b, w * m.c};
    const Point p = s.point();
    const Point pw{w * p.x, w * p.y, w};
    const Line n = s.line();
    const Point q = s.point();
    for (const Decomposition& d : {project(mw, n), project(mw, q)}) {
      CHECK(max_diff(d.parallel_part + d.orthogonal_part, mv(mw)) <= 1e-9 * 15);
    }
    for (const Decomposition& d : {project(pw, n), project(pw, q)}) {
      CHECK(max_diff(d.parallel_part + d.orthogonal_part, mv(pw)) <= 1e-9 * 15);
    }
    const Point foot = normalize(Point::from_multivector(project(p, n).parallel_part));
    const auto [fx, fy] = oracle::analytic_foot(p.x, p.y, n.a, n.b, n.c);
    CHECK(std::abs(foot.x - fx) <= 1e-9);
    CHECK(std::abs(foot.y - fy) <= 1e-9);
  }
}

TEST_CASE("perpendicular through a point") {
  CHECK(perp_line_through(Line{0, 1, 0}, Point{0, 0, 1}) == Line{-1, 0, 0});
  testing::Sampler s(54);
  for (int i = 0; i < 200; ++i) {
    const Line m = s.line();
    const Point p = s.point();
    const Line r = perp_line_through(m, p);
    CHECK(std::abs(signed_magnitude(outer(mv(r), mv(p)))) <= 1e-12);
    CHECK(dot(mv(r), mv(m)).is_zero(1e-14));
    CHECK(norm(r) == doctest::Approx(1.0).epsilon(1e-14));
    // The direction of r is the direction of m turned counter-clockwise.
    const IdealPoint dm = ideal_point_of(m);
    const IdealPoint dr = ideal_point_of(r);
    CHECK(dr.u == doctest::Approx(-dm.v).epsilon(1e-14));
    CHECK(dr.v == doctest::Approx(dm.u).epsilon(1e-14));
  }
}

TEST_CASE("three points") {
  const Point a{0, 0, 1};
  const Point b{1, 0, 1};
  const Point c{0, 1, 1};
  const Multivector expected = oracle_gp(mv(a), oracle_gp(mv(b), mv(c)));
  CHECK(expected == -(B(Blade::E0) - B(Blade::E1) + B(Blade::E2)));
  CHECK(triple_points(a, b, c).to_multivector() == expected);
  const Point tip = normalize(triple_points(a, b, c));
  CHECK(tip == Point{-1, 1, 1});

  CHECK(triple_points(b, b, b).to_multivector() == -mv(b));

  testing::Sampler s(55);
  for (int i = 0; i < 200; ++i) {
    const Point p = s.point(), q = s.point(), r = s.point();
    const Multivector abc = gp(mv(p), gp(mv(q), mv(r)));
    CHECK(max_diff(abc, -(mv(p) - mv(q) + mv(r))) <= 1e-12);
    const Multivector five = oracle_gp(oracle_gp(oracle_gp(oracle_gp(mv(p), mv(q)), mv(r)), mv(q)), mv(p));
    CHECK(max_diff(five, mv(p) - mv(q) + mv(r) - mv(q) + mv(p)) <= 1e-12 * 25);
  }
}

TEST_CASE("three lines") {
  // Equilateral triangle with unit-length sides, lines oriented counter-clockwise.
  const double h = std::sqrt(3.0) / 2.0;
  const Point A{0, 0, 1}, Bp{1, 0, 1}, C{0.5, h, 1};
  auto through = [](const Point& p, const Point& q) { return normalize(Line::from_multivector(join(mv(p), mv(q)))); };
  const Line a = through(Bp, C), b = through(C, A), c = through(A, Bp);
  const TripleLines t = triple_lines(a, b, c);
  CHECK_FALSE(t.degenerate);
  const Multivector left = oracle_gp(oracle_gp(mv(a), mv(b)), mv(c));
  const Multivector right = oracle_gp(mv(a), oracle_gp(mv(b), mv(c)));
  CHECK(max_diff(left, right) <= 1e-15);
  const double altitude = std::abs(oracle::analytic_point_line(C.x, C.y, c.a, c.b, c.c));
  const double sin_gamma = std::sin(kPi / 3);
  CHECK(std::abs(t.grade3.s) == doctest::Approx(sin_gamma * altitude).epsilon(1e-9));
  CHECK(std::abs(left[Blade::I]) == doctest::Approx(sin_gamma * altitude).epsilon(1e-9));

  CHECK(triple_lines(Line{1, 0, 0}, Line{0, 1, 0}, Line{1, 1, 0}).degenerate);
  CHECK(triple_lines(Line{1, 0, 0}, Line{1, 0, 1}, Line{0, 1, 0}).degenerate);
}

TEST_CASE("three-line identities on random triangles") {
  testing::Sampler s(56);
  for (int i = 0; i < 300; ++i) {
    const Line a = s.line(), b = s.line(), c = s.line();
    const Multivector abc = gp(gp(mv(a), mv(b)), mv(c));
    const Multivector cba = gp(gp(mv(c), mv(b)), mv(a));
    const Multivector cab = gp(gp(mv(c), mv(a)), mv(b));
    CHECK(max_diff(triple_lines(a, b, c).grade1.to_multivector(), (0.5 * (abc + cba)).grade(1)) <= 1e-12);
    CHECK(max_diff(0.5 * (abc + cba), abc.grade(1)) <= 1e-12);
    const double cos_gamma = std::cos(oracle::analytic_normal_angle(a.a, a.b, b.a, b.b));
    CHECK(max_diff(0.5 * (cab + cba), cos_gamma * mv(c)) <= 1e-12);
  }
}

TEST_CASE("symmetric line") {
  testing::Sampler s(57);
  for (int i = 0; i < 200; ++i) {
    const Line a = s.line(), b = s.line(), c = s.line();
    const Multivector sum = symmetric_sum(a, b, c);
    CHECK(sum.grade(0).max_abs() <= 1e-12);
    CHECK(sum.grade(2).max_abs() <= 1e-12);
    CHECK(sum.grade(3).max_abs() <= 1e-12);
    CHECK(max_diff(sum, symmetric_sum(c, a, b)) <= 1e-12);
    CHECK(max_diff(sum, symmetric_sum(b, a, c)) <= 1e-12);
  }
  const Line a = s.line();
  CHECK(max_diff(symmetric_sum(a, a, a), 6.0 * mv(a)) <= 1e-14);
  CHECK(max_diff(symmetric_line(a, a, a).to_multivector(), 6.0 * mv(a)) <= 1e-14);
}

TEST_CASE("product of two intersecting lines") {
  testing::Sampler s(58);
  for (int i = 0; i < 500; ++i) {
    const Line m = s.line(), n = s.line();
    const double alpha = oracle::analytic_normal_angle(m.a, m.b, n.a, n.b);
    if (std::abs(std::sin(alpha)) < 1e-3) {
      continue;
    }
    const auto [x, y] = cramer(m, n);
    const Multivector p = Point{x, y, 1}.to_multivector();
    const Multivector mn = gp(mv(m), mv(n));
    CHECK(max_diff(mn, Multivector::scalar(std::cos(alpha)) + std::sin(alpha) * p) <= 1e-9);
    CHECK(angle(m, n).value == doctest::Approx(std::abs(alpha)).epsilon(1e-9));
    for (int k = 2; k <= 4; ++k) {
      CHECK(max_diff(power(mn, k), Multivector::scalar(std::cos(k * alpha)) + std::sin(k * alpha) * p) <= 1e-9);
    }
  }
}

TEST_CASE("product of two parallel lines") {
  testing::Sampler s(59);
  for (int i = 0; i < 500; ++i) {
    const Line m = s.line();
    const Line n{m.a, m.b, s.uniform(-5, 5)};
    const double d = oracle::analytic_parallel_gap(m.c, n.c);
    const Multivector m_inf = Point{m.b, -m.a, 0}.to_multivector();
    for (int k = 1; k <= 4; ++k) {
      CHECK(max_diff(power(gp(mv(m), mv(n)), k), Multivector::scalar(1) + (k * d) * m_inf) <= 1e-9);
    }
    CHECK(distance(m, n).value == doctest::Approx(std::abs(d)).epsilon(1e-9));
  }
}

TEST_CASE("product of two points") {
  testing::Sampler s(60);
  for (int i = 0; i < 500; ++i) {
    const Point p = s.point(), q = s.point();
    const Multivector pq = gp(mv(p), mv(q));
    const Multivector j = join(mv(p), mv(q));
    CHECK(max_diff(pq, Multivector::scalar(-1) - gp(j, B(Blade::I))) <= 1e-12);
    CHECK(max_diff(commutator(mv(p), mv(q)), -gp(j, B(Blade::I))) <= 1e-12);
    CHECK(distance(p, q).value == doctest::Approx(oracle::analytic_distance(p.x, p.y, q.x, q.y)).epsilon(1e-9));
    const Point cross = Point::from_multivector(commutator(mv(p), mv(q)));
    CHECK(ideal_norm(cross) == doctest::Approx(distance(p, q).value).epsilon(1e-12));
  }
}

TEST_CASE("euclidean point times ideal point") {
  testing::Sampler s(61);
  for (int i = 0; i < 300; ++i) {
    const Point p = s.point();
    const IdealPoint q{s.uniform(-3, 3), s.uniform(-3, 3)};
    const Multivector pq = gp(mv(p), q.to_multivector());
    CHECK(pq[Blade::one] == 0.0);
    const Point cross = Point::from_multivector(pq.grade(2));
    CHECK(cross.z == 0.0);
    CHECK(cross.x * q.u + cross.y * q.v == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::hypot(cross.x, cross.y) == doctest::Approx(std::hypot(q.u, q.v)).epsilon(1e-12));
    // Clockwise quarter turn of q, wherever p is.
    CHECK(cross.x == doctest::Approx(q.v).epsilon(1e-12));
    CHECK(cross.y == doctest::Approx(-q.u).epsilon(1e-12));
  }
}

TEST_CASE("euclidean line times ideal point") {
  testing::Sampler s(62);
  for (int i = 0; i < 300; ++i) {
    const Line m = s.line();
    const IdealPoint u = s.direction();
    const Multivector mu = gp(mv(m), u.to_multivector());
    const double cos_a = m.b * u.u - m.a * u.v; // <m_inf, U>
    CHECK(mu[Blade::e0] == doctest::Approx(cos_a).epsilon(1e-12));
    CHECK(mu[Blade::e0] * mu[Blade::e0] + mu[Blade::I] * mu[Blade::I] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_diff(mu, mu.grade(1) + mu.grade(3)) == 0.0);
    CHECK(std::hypot(mu[Blade::e1], mu[Blade::e2]) <= 1e-15);
    CHECK(angle(m, u).value == doctest::Approx(std::acos(std::clamp(cos_a, -1.0, 1.0))).epsilon(1e-9));
  }
}

TEST_CASE("line times euclidean point") {
  testing::Sampler s(63);
  for (int i = 0; i < 500; ++i) {
    const Line m = s.line();
    const Point p = s.point();
    const Multivector mp = gp(mv(m), mv(p));
    CHECK(max_diff(mp.grade(1), mv(perp_line_through(m, p))) <= 1e-12);
    const double d = oracle::analytic_point_line(p.x, p.y, m.a, m.b, m.c);
    CHECK(mp[Blade::I] == doctest::Approx(d).epsilon(1e-9));
    CHECK(distance(m, p).value == doctest::Approx(d).epsilon(1e-9));
    CHECK(distance(p, m).value == doctest::Approx(-d).epsilon(1e-9));
  }
}
