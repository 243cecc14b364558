#include "pga2d/script/evaluator.hpp"

#include "pga2d/geometry.hpp"
#include "pga2d/isometry.hpp"
#include "pga2d/metric.hpp"
#include "pga2d/script/svg.hpp"

#include <charconv>
#include <cstdio>

namespace pga2d::script {

namespace {

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") {
    s.erase(0, 1);
  }
  return s;
}

const char* kind_name(const Value& v) {
  constexpr const char* names[] = {"a point", "a line", "a motor", "an odd versor", "a scalar"};
  return names[v.index()];
}

struct Versor {
  Multivector element;
  bool odd = false;
};

class Evaluator {
public:
  Evaluator(std::ostream& out, double tol) : out_(out), tol_(tol) {}

  void run(const Statement& st) {
    const std::string& verb = st.verb;
    const auto& a = st.args;
    if (verb == "print") {
      out_ << format_binding(st.result, *env_.find(st.result), tol_) << "\n";
      return;
    }
    if (verb == "svg") {
      write_svg(env_, st.result, tol_);
      return;
    }

    Value result;
    if (verb == "point") {
      result = Point{number(a[0]), number(a[1]), 1.0};
    } else if (verb == "ideal") {
      const Point p{number(a[0]), number(a[1]), 0.0};
      if (p.x == 0.0 && p.y == 0.0) {
        throw DomainError("an ideal point needs a nonzero direction");
      }
      result = p;
    } else if (verb == "line") {
      const Line m{number(a[0]), number(a[1]), number(a[2])};
      if (m.a == 0.0 && m.b == 0.0 && m.c == 0.0) {
        throw DomainError("[0, 0, 0] is not a line");
      }
      result = m;
    } else if (verb == "join") {
      const Line m = Line::from_multivector(join(get<Point>(a[0]).to_multivector(), get<Point>(a[1]).to_multivector()));
      if (m.to_multivector().max_abs() == 0.0) {
        throw DomainError("the points coincide; their join is undefined");
      }
      result = m;
    } else if (verb == "meet") {
      const Point p =
          Point::from_multivector(outer(get<Line>(a[0]).to_multivector(), get<Line>(a[1]).to_multivector()));
      if (p.to_multivector().max_abs() == 0.0) {
        throw DomainError("the lines coincide; their meet is undefined");
      }
      result = p;
    } else if (verb == "dist") {
      result = distance_of(lookup(a[0]), lookup(a[1]));
    } else if (verb == "angle") {
      result = angle_of(lookup(a[0]), lookup(a[1]));
    } else if (verb == "reflect") {
      const Line& mirror = get<Line>(a[0]);
      const Value& x = lookup(a[1]);
      if (const auto* p = std::get_if<Point>(&x)) {
        result = reflect(mirror, *p, tol_);
      } else if (const auto* m = std::get_if<Line>(&x)) {
        result = reflect(mirror, *m, tol_);
      } else {
        throw_kind(a[1], x, "a point or a line");
      }
    } else if (verb == "rotor") {
      result = rotor_from_lines(get<Line>(a[0]), get<Line>(a[1]), tol_);
    } else if (verb == "rotator") {
      result = rotator(get<Point>(a[0]), number(a[1]), tol_);
    } else if (verb == "translator") {
      result = translator(ideal(a[0]), number(a[1]));
    } else if (verb == "apply") {
      result = apply(a[0], a[1]);
    } else if (verb == "solve") {
      result = solve_point_line_transport(get<Point>(a[0]), get<Line>(a[1]), get<Point>(a[2]), get<Line>(a[3]),
                                          tol_);
    } else if (verb == "project") {
      result = project_of(lookup(a[0]), a[1]);
    } else if (verb == "midpoint") {
      result = midpoint(get<Point>(a[0]), get<Point>(a[1]), tol_);
    } else if (verb == "midline") {
      result = midline(get<Line>(a[0]), get<Line>(a[1]), tol_);
    } else {
      throw Error("unknown verb '" + verb + "'");
    }
    env_.bind(st.result, result);
  }

  Environment take() { return std::move(env_); }

private:
  const Value& lookup(const std::string& name) const {
    const Value* v = env_.find(name);
    if (v == nullptr) {
      throw Error("undefined name '" + name + "'");
    }
    return *v;
  }

  [[noreturn]] static void throw_kind(const std::string& name, const Value& v, const std::string& expected) {
    throw Error("'" + name + "' is " + kind_name(v) + ", expected " + expected);
  }

  template <typename T>
  const T& get(const std::string& name) const {
    const Value& v = lookup(name);
    if (const T* t = std::get_if<T>(&v)) {
      return *t;
    }
    throw_kind(name, v, kind_name(Value(T{})));
  }

  double number(const std::string& token) const {
    if (is_number(token)) {
      double value = 0.0;
      const char* first = token.data() + (token[0] == '+' ? 1 : 0);
      std::from_chars(first, token.data() + token.size(), value);
      return value;
    }
    return get<double>(token);
  }

  IdealPoint ideal(const std::string& name) const {
    const Point& p = get<Point>(name);
    if (!is_ideal(p, tol_)) {
      throw ClassificationError("'" + name + "' is a euclidean point, expected an ideal point");
    }
    return {p.x, p.y};
  }

  double distance_of(const Value& x, const Value& y) const {
    if (const auto* p = std::get_if<Point>(&x)) {
      if (const auto* q = std::get_if<Point>(&y)) {
        return distance(*p, *q, tol_).value;
      }
      if (const auto* m = std::get_if<Line>(&y)) {
        return distance(*p, *m, tol_).value;
      }
    } else if (const auto* m = std::get_if<Line>(&x)) {
      if (const auto* q = std::get_if<Point>(&y)) {
        return distance(*m, *q, tol_).value;
      }
      if (const auto* n = std::get_if<Line>(&y)) {
        return distance(*m, *n, tol_).value;
      }
    }
    throw Error("dist needs points and lines");
  }

  double angle_of(const Value& x, const Value& y) const {
    const auto* m = std::get_if<Line>(&x);
    const auto* n = std::get_if<Line>(&y);
    const auto* p = std::get_if<Point>(&x);
    const auto* q = std::get_if<Point>(&y);
    auto as_ideal = [this](const Point& pt) {
      if (!is_ideal(pt, tol_)) {
        throw ClassificationError("angle needs lines or ideal points; got a euclidean point");
      }
      return IdealPoint{pt.x, pt.y};
    };
    if (m && n) {
      return angle(*m, *n, tol_).value;
    }
    if (p && q) {
      return angle(as_ideal(*p), as_ideal(*q)).value;
    }
    if (m && q) {
      return angle(*m, as_ideal(*q), tol_).value;
    }
    if (p && n) {
      return angle(as_ideal(*p), *n, tol_).value;
    }
    throw Error("angle needs lines or ideal points");
  }

  // Operators: motors (even), mirrors and odd versors (odd).
  Versor versor(const std::string& name) const {
    const Value& v = lookup(name);
    if (const auto* g = std::get_if<Motor>(&v)) {
      return {g->to_multivector(), false};
    }
    if (const auto* m = std::get_if<Line>(&v)) {
      if (is_ideal(*m, tol_)) {
        throw DomainError("the ideal line cannot act as a mirror");
      }
      return {normalize(*m, tol_).to_multivector(), true};
    }
    if (const auto* r = std::get_if<OddVersor>(&v)) {
      return {r->to_multivector(), true};
    }
    throw_kind(name, v, "a motor, a line or an odd versor");
  }

  Value apply(const std::string& op, const std::string& operand) const {
    const Versor g = versor(op);
    const Value& x = lookup(operand);
    if (std::holds_alternative<Point>(x) || std::holds_alternative<Line>(x)) {
      const Multivector xm = std::holds_alternative<Point>(x) ? std::get<Point>(x).to_multivector()
                                                              : std::get<Line>(x).to_multivector();
      const Multivector image = gp(g.element, gp(xm, reverse(g.element)));
      if (std::holds_alternative<Point>(x)) {
        return Point::from_multivector(image);
      }
      return Line::from_multivector(image);
    }
    // Composition: operand first, then op.
    const Versor h = versor(operand);
    const Multivector product = gp(g.element, h.element);
    if (g.odd != h.odd) {
      return OddVersor::from_multivector(product);
    }
    return Motor::from_multivector(product);
  }

  Value project_of(const Value& x, const std::string& onto_name) const {
    const Value& onto = lookup(onto_name);
    const auto* p = std::get_if<Point>(&x);
    const auto* m = std::get_if<Line>(&x);
    if (!p && !m) {
      throw Error("project needs a point or a line to project");
    }
    Decomposition d;
    if (const auto* q = std::get_if<Point>(&onto)) {
      d = p ? project(*p, *q, tol_) : project(*m, *q, tol_);
    } else if (const auto* n = std::get_if<Line>(&onto)) {
      d = p ? project(*p, *n, tol_) : project(*m, *n, tol_);
    } else {
      throw_kind(onto_name, onto, "a point or a line");
    }
    if (p) {
      return Point::from_multivector(d.parallel_part);
    }
    return Line::from_multivector(d.parallel_part);
  }

  std::ostream& out_;
  double tol_;
  Environment env_;
};

} // namespace

const Value* Environment::find(std::string_view name) const {
  for (const Binding& b : bindings_) {
    if (b.name == name) {
      return &b.value;
    }
  }
  return nullptr;
}

void Environment::bind(const std::string& name, Value value) {
  if (find(name) != nullptr) {
    throw Error("name '" + name + "' is already assigned");
  }
  bindings_.push_back({name, std::move(value)});
}

EvaluationError::EvaluationError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

Environment evaluate(const Program& program, std::ostream& out, double tol) {
  Evaluator ev(out, tol);
  for (const Statement& st : program.statements) {
    try {
      ev.run(st);
    } catch (const std::exception& e) {
      throw EvaluationError(st.line, e.what());
    }
  }
  return ev.take();
}

std::string format_binding(const std::string& name, const Value& value, double tol) {
  std::string text;
  if (const auto* s = std::get_if<double>(&value)) {
    text = fixed(*s);
  } else if (const auto* p = std::get_if<Point>(&value)) {
    if (is_ideal(*p, tol)) {
      text = "ideal (" + fixed(p->x) + ", " + fixed(p->y) + ")";
    } else {
      const Point n = normalize(*p, tol);
      text = "(" + fixed(n.x) + ", " + fixed(n.y) + ")";
    }
  } else if (const auto* m = std::get_if<Line>(&value)) {
    const Line n = normalize(*m, tol);
    text = "[" + fixed(n.a) + ", " + fixed(n.b) + ", " + fixed(n.c) + "]";
  } else if (const auto* g = std::get_if<Motor>(&value)) {
    Motor h = *g;
    if (h.s < 0.0 || (h.s == 0.0 && h.bz < 0.0)) {
      h = {-h.s, -h.bx, -h.by, -h.bz};
    }
    text = fixed(h.s) + " + (" + fixed(h.bx) + ", " + fixed(h.by) + ", " + fixed(h.bz) + ")";
  } else if (const auto* r = std::get_if<OddVersor>(&value)) {
    const Line& l = r->line;
    text = "[" + fixed(l.a) + ", " + fixed(l.b) + ", " + fixed(l.c) + "] + " + fixed(r->lambda) + " I";
  }
  return name + " = " + text;
}

} // namespace pga2d::script
