#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pga2d {

// Absolute tolerance applied to coefficients scaled to unit max magnitude.
inline constexpr double kDefaultTolerance = 1e-9;

// Canonical basis of Cl*(2,0,1) in storage order.
//   E0 = e1e2 (origin), E1 = e2e0 (ideal x point), E2 = e0e1 (ideal y point),
//   I  = e0e1e2.
// Lines [a,b,c] = c*e0 + a*e1 + b*e2 and points (x,y,z) = x*E1 + y*E2 + z*E0
// occupy contiguous slots 1..3 and 4..6.
enum class Blade : std::uint8_t { one = 0, e0, e1, e2, E1, E2, E0, I };

inline constexpr std::size_t kBladeCount = 8;

inline constexpr std::array<Blade, kBladeCount> kAllBlades = {
    Blade::one, Blade::e0, Blade::e1, Blade::e2,
    Blade::E1,  Blade::E2, Blade::E0, Blade::I};

constexpr std::size_t index_of(Blade b) { return static_cast<std::size_t>(b); }

constexpr int grade_of(Blade b) {
  constexpr std::array<int, kBladeCount> grades = {0, 1, 1, 1, 2, 2, 2, 3};
  return grades[index_of(b)];
}

std::string_view blade_name(Blade b);

// One cell of a signed-index multiplication table: the product of two basis
// blades is `sign * blade`, with sign 0 marking a vanishing product.
struct SignedBlade {
  std::int8_t sign = 0;
  Blade blade = Blade::one;

  friend constexpr bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

using BladeTable = std::array<std::array<SignedBlade, kBladeCount>, kBladeCount>;

// Geometric product of basis blades, row = left factor, column = right factor.
const BladeTable& cayley_table();

// Poincare duality on basis blades, fixed by blade ^ J(blade) = I.
const std::array<SignedBlade, kBladeCount>& dual_table();

class Multivector {
public:
  using Coefficients = std::array<double, kBladeCount>;

  constexpr Multivector() = default;

  // Throws DomainError if any coefficient is NaN or infinite.
  explicit Multivector(const Coefficients& coefficients);

  static Multivector scalar(double s);
  static Multivector basis(Blade b, double weight = 1.0);

  double operator[](Blade b) const { return c_[index_of(b)]; }
  std::span<const double, kBladeCount> coefficients() const { return c_; }

  double max_abs() const;
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  // Grade-k part; k outside 0..3 throws std::out_of_range.
  Multivector grade(int k) const;

  Multivector operator-() const;
  friend Multivector operator+(const Multivector& u, const Multivector& v);
  friend Multivector operator-(const Multivector& u, const Multivector& v);
  friend Multivector operator*(double s, const Multivector& u);
  friend Multivector operator*(const Multivector& u, double s) { return s * u; }
  friend Multivector operator/(const Multivector& u, double s);

  friend bool operator==(const Multivector&, const Multivector&) = default;

private:
  Coefficients c_{};
};

// Geometric product.
Multivector gp(const Multivector& u, const Multivector& v);
inline Multivector operator*(const Multivector& u, const Multivector& v) { return gp(u, v); }

// Highest-grade part <uv>_{k+m} of each pair of homogeneous components (meet).
Multivector outer(const Multivector& u, const Multivector& v);

// Lowest-grade part <uv>_{|k-m|} of each pair of homogeneous components.
Multivector dot(const Multivector& u, const Multivector& v);

// <uv>_2. Intended for two bivectors, where it is the cross product P x Q.
Multivector commutator(const Multivector& u, const Multivector& v);

// Poincare duality J, grade k -> grade 3-k. J(J(u)) == u.
Multivector dual(const Multivector& u);

// Join J(J(u) ^ J(v)).
Multivector join(const Multivector& u, const Multivector& v);

// Grades 2 and 3 change sign.
Multivector reverse(const Multivector& u);

inline Multivector grade(const Multivector& u, int k) { return u.grade(k); }

// S(u): the I coefficient.
inline double signed_magnitude(const Multivector& u) { return u[Blade::I]; }

double max_abs_diff(const Multivector& u, const Multivector& v);

// "2*e1 - 0.5*E0", or "0" for the zero element. Full precision.
std::string to_string(const Multivector& u);

// Human-readable dump of cayley_table() and dual_table().
std::string describe_tables();

} // namespace pga2d
