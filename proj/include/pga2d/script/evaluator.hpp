#pragma once

#include "pga2d/elements.hpp"
#include "pga2d/errors.hpp"
#include "pga2d/multivector.hpp"
#include "pga2d/script/program.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace pga2d::script {

// Ideal points are stored as Points with z == 0.
using Value = std::variant<Point, Line, Motor, OddVersor, double>;

struct Binding {
  std::string name;
  Value value;
};

// Single-assignment name table, kept in definition order.
class Environment {
public:
  const Value* find(std::string_view name) const;
  void bind(const std::string& name, Value value);
  const std::vector<Binding>& bindings() const { return bindings_; }

private:
  std::vector<Binding> bindings_;
};

class EvaluationError : public Error {
public:
  EvaluationError(int line, const std::string& message);

  int line() const { return line_; }

private:
  int line_;
};

// Runs the statements in order, writing `print` output to `out`. The first
// failing statement throws EvaluationError carrying its line.
Environment evaluate(const Program& program, std::ostream& out, double tol = kDefaultTolerance);

// `name = value` with six decimals; points and lines normalized.
std::string format_binding(const std::string& name, const Value& value, double tol = kDefaultTolerance);

} // namespace pga2d::script
