#pragma once

#include "pga2d/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pga2d::script {

// One line of a construction script: `verb result args...`. For `print` the
// result slot holds the printed name and for `svg` the output path.
struct Statement {
  std::string verb;
  std::string result;
  std::vector<std::string> args;
  int line = 0;

  friend bool operator==(const Statement& x, const Statement& y) {
    return x.verb == y.verb && x.result == y.result && x.args == y.args;
  }
};

struct Program {
  std::vector<Statement> statements;

  friend bool operator==(const Program&, const Program&) = default;
};

class ParseError : public Error {
public:
  ParseError(int line, std::string token, const std::string& message);

  int line() const { return line_; }
  const std::string& token() const { return token_; }

private:
  int line_;
  std::string token_;
};

// One statement per line, '#' starts a comment. Checks the verb, the arity,
// identifier syntax, numeric literals, use of undefined names and repeated
// assignment.
Program parse(std::string_view source);

// Canonical text; parse(to_source(p)) == p.
std::string to_source(const Program& program);

bool is_number(std::string_view token);

} // namespace pga2d::script
