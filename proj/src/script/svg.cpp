#include "pga2d/script/svg.hpp"

#include "pga2d/metric.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace pga2d::script {

namespace {

constexpr double kSize = 512.0;

struct Named {
  std::string name;
  double x = 0.0;
  double y = 0.0;
};

struct NamedLine {
  std::string name;
  Line line;
};

struct View {
  double cx = 0.0;
  double cy = 0.0;
  double half = 1.0;

  double sx(double x) const { return (x - (cx - half)) / (2.0 * half) * kSize; }
  double sy(double y) const { return ((cy + half) - y) / (2.0 * half) * kSize; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") {
    s.erase(0, 1);
  }
  return s;
}

// Liang-Barsky clip of p + t d against the view square.
bool clip(const View& v, double px, double py, double dx, double dy, double& t0, double& t1) {
  t0 = -1e300;
  t1 = 1e300;
  const double lo[2] = {v.cx - v.half, v.cy - v.half};
  const double hi[2] = {v.cx + v.half, v.cy + v.half};
  const double p[2] = {px, py};
  const double d[2] = {dx, dy};
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (p[k] < lo[k] || p[k] > hi[k]) {
        return false;
      }
      continue;
    }
    double a = (lo[k] - p[k]) / d[k];
    double b = (hi[k] - p[k]) / d[k];
    if (a > b) {
      std::swap(a, b);
    }
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  return t0 < t1;
}

std::string label(const std::string& name, double x, double y) {
  return "<text x=\"" + num(x + 6.0) + "\" y=\"" + num(y - 6.0) +
         "\" font-family=\"sans-serif\" font-size=\"14\">" + name + "</text>\n";
}

} // namespace

std::string render_svg(const Environment& env, double tol) {
  std::vector<Named> points;
  std::vector<Named> arrows;
  std::vector<NamedLine> lines;
  for (const Binding& b : env.bindings()) {
    if (const auto* p = std::get_if<Point>(&b.value)) {
      if (p->x == 0.0 && p->y == 0.0 && p->z == 0.0) {
        continue;
      }
      if (is_ideal(*p, tol)) {
        const double w = std::hypot(p->x, p->y);
        arrows.push_back({b.name, p->x / w, p->y / w});
      } else {
        const Point n = normalize(*p, tol);
        points.push_back({b.name, n.x, n.y});
      }
    } else if (const auto* m = std::get_if<Line>(&b.value)) {
      if (!is_ideal(*m, tol)) {
        lines.push_back({b.name, normalize(*m, tol)});
      }
    }
  }
  if (points.empty() && arrows.empty() && lines.empty()) {
    throw Error("nothing to render");
  }

  View view;
  double gx = 0.0;
  double gy = 0.0;
  if (!points.empty()) {
    double x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
    for (const Named& p : points) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
      gx += p.x;
      gy += p.y;
    }
    gx /= static_cast<double>(points.size());
    gy /= static_cast<double>(points.size());
    view.cx = (x0 + x1) / 2.0;
    view.cy = (y0 + y1) / 2.0;
    const double half = std::max(x1 - x0, y1 - y0) / 2.0;
    view.half = half > 0.0 ? 1.2 * half : 1.0;
  } else {
    double reach = 1.0;
    for (const NamedLine& l : lines) {
      reach = std::max(reach, std::abs(l.line.c));
    }
    view.half = 1.2 * reach;
  }

  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" "
      "viewBox=\"0 0 512 512\">\n"
      "<defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"10\" refX=\"9\" refY=\"5\" "
      "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#a03020\"/></marker></defs>\n"
      "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";

  for (const NamedLine& l : lines) {
    const Line& m = l.line;
    const double k = m.a * view.cx + m.b * view.cy + m.c;
    const double px = view.cx - k * m.a;
    const double py = view.cy - k * m.b;
    double t0 = 0.0;
    double t1 = 0.0;
    if (!clip(view, px, py, m.b, -m.a, t0, t1)) {
      continue;
    }
    const double x0 = view.sx(px + t0 * m.b), y0 = view.sy(py - t0 * m.a);
    const double x1 = view.sx(px + t1 * m.b), y1 = view.sy(py - t1 * m.a);
    out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
           "\" stroke=\"#2060a0\" stroke-width=\"1.5\"/>\n";
    out += label(l.name, x0 + 0.2 * (x1 - x0), y0 + 0.2 * (y1 - y0));
  }

  const double reach = 0.5 * view.half;
  for (const Named& a : arrows) {
    const double x0 = view.sx(gx), y0 = view.sy(gy);
    const double x1 = view.sx(gx + reach * a.x), y1 = view.sy(gy + reach * a.y);
    out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
           "\" stroke=\"#a03020\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    out += label(a.name, x1, y1);
  }

  for (const Named& p : points) {
    const double x = view.sx(p.x), y = view.sy(p.y);
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4\" fill=\"black\"/>\n";
    out += label(p.name, x, y);
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const Environment& env, const std::string& path, double tol) {
  const std::string text = render_svg(env, tol);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error("cannot write '" + path + "': " + std::strerror(errno));
  }
  file << text;
  file.flush();
  if (!file) {
    throw Error("cannot write '" + path + "': " + std::strerror(errno));
  }
}

} // namespace pga2d::script
