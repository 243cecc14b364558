#include "pga2d/script/program.hpp"

#include <charconv>
#include <cmath>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace pga2d::script {

namespace {

// N = defined name, X = number or scalar name, R = result name.
struct Signature {
  bool binds = true;
  std::string args;
};

const std::map<std::string, Signature, std::less<>>& grammar() {
  static const std::map<std::string, Signature, std::less<>> g = {
      {"point", {true, "XX"}},       {"ideal", {true, "XX"}},      {"line", {true, "XXX"}},
      {"join", {true, "NN"}},        {"meet", {true, "NN"}},       {"dist", {true, "NN"}},
      {"angle", {true, "NN"}},       {"reflect", {true, "NN"}},    {"rotor", {true, "NN"}},
      {"rotator", {true, "NX"}},     {"translator", {true, "NX"}}, {"apply", {true, "NN"}},
      {"solve", {true, "NNNN"}},     {"project", {true, "NN"}},    {"midpoint", {true, "NN"}},
      {"midline", {true, "NN"}},     {"print", {false, ""}},       {"svg", {false, ""}},
  };
  return g;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'')) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) {
    out.push_back(tok);
  }
  return out;
}

} // namespace

ParseError::ParseError(int line, std::string token, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message + (token.empty() ? "" : " at '" + token + "'")),
      line_(line), token_(std::move(token)) {}

bool is_number(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  return first != last && ec == std::errc() && ptr == last && std::isfinite(value);
}

Program parse(std::string_view source) {
  Program program;
  std::set<std::string, std::less<>> defined;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const std::size_t end = std::min(source.find('\n', pos), source.size());
    std::string_view raw = source.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    const std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) {
      if (end == source.size()) {
        break;
      }
      continue;
    }

    const auto found = grammar().find(tokens[0]);
    if (found == grammar().end()) {
      throw ParseError(number, tokens[0], "unknown verb");
    }
    const Signature& sig = found->second;
    const std::size_t arity = 1 + sig.args.size();
    if (tokens.size() - 1 != arity) {
      const std::string token = tokens.size() - 1 > arity ? tokens[arity + 1] : tokens.back();
      throw ParseError(number, token,
                       "'" + tokens[0] + "' expects " + std::to_string(arity) + " operand(s), got " +
                           std::to_string(tokens.size() - 1));
    }

    Statement st{tokens[0], tokens[1], {tokens.begin() + 2, tokens.end()}, number};
    if (st.verb == "print") {
      if (!defined.contains(st.result)) {
        throw ParseError(number, st.result, "undefined name");
      }
    } else if (st.verb != "svg") {
      if (!is_identifier(st.result)) {
        throw ParseError(number, st.result, "invalid name");
      }
      if (defined.contains(st.result)) {
        throw ParseError(number, st.result, "name already assigned");
      }
    }
    for (std::size_t i = 0; i < st.args.size(); ++i) {
      const std::string& arg = st.args[i];
      if (sig.args[i] == 'X' && is_number(arg)) {
        continue;
      }
      if (!is_identifier(arg)) {
        throw ParseError(number, arg, sig.args[i] == 'X' ? "expected a number or name" : "expected a name");
      }
      if (!defined.contains(arg)) {
        throw ParseError(number, arg, "undefined name");
      }
    }
    if (sig.binds) {
      defined.insert(st.result);
    }
    program.statements.push_back(std::move(st));
    if (end == source.size()) {
      break;
    }
  }
  return program;
}

std::string to_source(const Program& program) {
  std::string out;
  for (const Statement& st : program.statements) {
    out += st.verb + " " + st.result;
    for (const std::string& arg : st.args) {
      out += " " + arg;
    }
    out += "\n";
  }
  return out;
}

} // namespace pga2d::script
