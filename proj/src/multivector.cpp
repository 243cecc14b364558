#include "pga2d/multivector.hpp"

#include "pga2d/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pga2d {

namespace {

constexpr SignedBlade P(int i) { return {1, static_cast<Blade>(i)}; }
constexpr SignedBlade N(int i) { return {-1, static_cast<Blade>(i)}; }
constexpr SignedBlade Z{0, Blade::one};

// Storage order: 1, e0, e1, e2, E1, E2, E0, I.
constexpr BladeTable kCayley = {{
    {P(0), P(1), P(2), P(3), P(4), P(5), P(6), P(7)},
    {P(1), Z,    P(5), N(4), Z,    Z,    P(7), Z   },
    {P(2), N(5), P(0), P(6), P(7), N(1), P(3), P(4)},
    {P(3), P(4), N(6), P(0), P(1), P(7), N(2), P(5)},
    {P(4), Z,    P(7), N(1), Z,    Z,    P(5), Z   },
    {P(5), Z,    P(1), P(7), Z,    Z,    N(4), Z   },
    {P(6), P(7), N(3), P(2), N(5), P(4), N(0), N(1)},
    {P(7), Z,    P(4), P(5), Z,    Z,    N(1), Z   },
}};

// For each blade b pick the complementary-grade blade c whose outer product
// with b is a multiple of I, and choose the sign so that b ^ J(b) = +I.
constexpr std::array<SignedBlade, kBladeCount> derive_dual() {
  std::array<SignedBlade, kBladeCount> table{};
  for (Blade b : kAllBlades) {
    for (Blade c : kAllBlades) {
      if (grade_of(b) + grade_of(c) != 3) {
        continue;
      }
      const SignedBlade product = kCayley[index_of(b)][index_of(c)];
      if (product.sign != 0 && product.blade == Blade::I) {
        table[index_of(b)] = {product.sign, c};
      }
    }
  }
  return table;
}

constexpr std::array<SignedBlade, kBladeCount> kDual = derive_dual();

static_assert(kCayley[index_of(Blade::e1)][index_of(Blade::e1)] == P(0));
static_assert(kCayley[index_of(Blade::e0)][index_of(Blade::e0)].sign == 0);
static_assert(kDual[index_of(Blade::one)] == P(7));

template <typename Keep>
Multivector filtered_product(const Multivector& u, const Multivector& v, Keep keep) {
  Multivector::Coefficients out{};
  for (Blade a : kAllBlades) {
    const double ua = u[a];
    if (ua == 0.0) {
      continue;
    }
    for (Blade b : kAllBlades) {
      const SignedBlade cell = kCayley[index_of(a)][index_of(b)];
      if (cell.sign == 0 || !keep(grade_of(a), grade_of(b), grade_of(cell.blade))) {
        continue;
      }
      out[index_of(cell.blade)] += cell.sign * ua * v[b];
    }
  }
  return Multivector(out);
}

} // namespace

std::string_view blade_name(Blade b) {
  constexpr std::array<std::string_view, kBladeCount> names = {
      "1", "e0", "e1", "e2", "E1", "E2", "E0", "I"};
  return names[index_of(b)];
}

const BladeTable& cayley_table() { return kCayley; }

const std::array<SignedBlade, kBladeCount>& dual_table() { return kDual; }

Multivector::Multivector(const Coefficients& coefficients) : c_(coefficients) {
  for (double x : c_) {
    if (!std::isfinite(x)) {
      throw DomainError("multivector coefficient is not finite");
    }
  }
}

Multivector Multivector::scalar(double s) { return basis(Blade::one, s); }

Multivector Multivector::basis(Blade b, double weight) {
  Coefficients c{};
  c[index_of(b)] = weight;
  return Multivector(c);
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double x : c_) {
    m = std::max(m, std::abs(x));
  }
  return m;
}

Multivector Multivector::grade(int k) const {
  if (k < 0 || k > 3) {
    throw std::out_of_range("grade must lie in 0..3");
  }
  Coefficients c{};
  for (Blade b : kAllBlades) {
    if (grade_of(b) == k) {
      c[index_of(b)] = c_[index_of(b)];
    }
  }
  return Multivector(c);
}

Multivector Multivector::operator-() const { return -1.0 * *this; }

Multivector operator+(const Multivector& u, const Multivector& v) {
  Multivector::Coefficients c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    c[i] = u.c_[i] + v.c_[i];
  }
  return Multivector(c);
}

Multivector operator-(const Multivector& u, const Multivector& v) {
  Multivector::Coefficients c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    c[i] = u.c_[i] - v.c_[i];
  }
  return Multivector(c);
}

Multivector operator*(double s, const Multivector& u) {
  Multivector::Coefficients c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    c[i] = s * u.c_[i];
  }
  return Multivector(c);
}

Multivector operator/(const Multivector& u, double s) {
  if (s == 0.0) {
    throw DomainError("division of a multivector by zero");
  }
  return (1.0 / s) * u;
}

Multivector gp(const Multivector& u, const Multivector& v) {
  return filtered_product(u, v, [](int, int, int) { return true; });
}

Multivector outer(const Multivector& u, const Multivector& v) {
  return filtered_product(u, v, [](int k, int m, int r) { return r == k + m; });
}

Multivector dot(const Multivector& u, const Multivector& v) {
  return filtered_product(u, v, [](int k, int m, int r) { return r == std::abs(k - m); });
}

Multivector commutator(const Multivector& u, const Multivector& v) {
  return filtered_product(u, v, [](int, int, int r) { return r == 2; });
}

Multivector dual(const Multivector& u) {
  Multivector::Coefficients c{};
  for (Blade b : kAllBlades) {
    const SignedBlade d = kDual[index_of(b)];
    c[index_of(d.blade)] += d.sign * u[b];
  }
  return Multivector(c);
}

Multivector join(const Multivector& u, const Multivector& v) {
  return dual(outer(dual(u), dual(v)));
}

Multivector reverse(const Multivector& u) {
  Multivector::Coefficients c{};
  for (Blade b : kAllBlades) {
    c[index_of(b)] = grade_of(b) >= 2 ? -u[b] : u[b];
  }
  return Multivector(c);
}

double max_abs_diff(const Multivector& u, const Multivector& v) {
  double m = 0.0;
  for (Blade b : kAllBlades) {
    m = std::max(m, std::abs(u[b] - v[b]));
  }
  return m;
}

std::string to_string(const Multivector& u) {
  std::string out;
  for (Blade b : kAllBlades) {
    const double x = u[b];
    if (x == 0.0) {
      continue;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(x));
    if (out.empty()) {
      out += x < 0 ? "-" : "";
    } else {
      out += x < 0 ? " - " : " + ";
    }
    out += buf;
    if (b != Blade::one) {
      out += "*";
      out += blade_name(b);
    }
  }
  return out.empty() ? "0" : out;
}

std::string describe_tables() {
  auto cell = [](SignedBlade e) {
    if (e.sign == 0) {
      return std::string("0");
    }
    return std::string(e.sign < 0 ? "-" : "") + std::string(blade_name(e.blade));
  };
  auto pad = [](std::string s) {
    s.resize(std::max<std::size_t>(s.size(), 5), ' ');
    return s;
  };

  std::string out = "# geometric product, row * column\n";
  out += pad("");
  for (Blade b : kAllBlades) {
    out += pad(std::string(blade_name(b)));
  }
  out += "\n";
  for (Blade a : kAllBlades) {
    out += pad(std::string(blade_name(a)));
    for (Blade b : kAllBlades) {
      out += pad(cell(kCayley[index_of(a)][index_of(b)]));
    }
    out += "\n";
  }
  out += "# dual J, fixed by b ^ J(b) = I\n";
  for (Blade b : kAllBlades) {
    const SignedBlade d = kDual[index_of(b)];
    out += pad(std::string(blade_name(b))) + (d.sign < 0 ? "-" : "+") + std::string(blade_name(d.blade)) +
           "\n";
  }
  return out;
}

} // namespace pga2d
