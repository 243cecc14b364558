#include "pga2d/elements.hpp"

namespace pga2d {

Multivector Line::to_multivector() const {
  return Multivector({0.0, c, a, b, 0.0, 0.0, 0.0, 0.0});
}

Line Line::from_multivector(const Multivector& u) {
  return {u[Blade::e1], u[Blade::e2], u[Blade::e0]};
}

Multivector Point::to_multivector() const {
  return Multivector({0.0, 0.0, 0.0, 0.0, x, y, z, 0.0});
}

Point Point::from_multivector(const Multivector& u) {
  return {u[Blade::E1], u[Blade::E2], u[Blade::E0]};
}

Multivector Motor::to_multivector() const {
  return Multivector({s, 0.0, 0.0, 0.0, bx, by, bz, 0.0});
}

Motor Motor::from_multivector(const Multivector& u) {
  return {u[Blade::one], u[Blade::E1], u[Blade::E2], u[Blade::E0]};
}

Multivector OddVersor::to_multivector() const {
  return line.to_multivector() + Multivector::basis(Blade::I, lambda);
}

OddVersor OddVersor::from_multivector(const Multivector& u) {
  return {Line::from_multivector(u), u[Blade::I]};
}

} // namespace pga2d
