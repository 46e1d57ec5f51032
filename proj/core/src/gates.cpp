#include "mzsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mzsim/errors.hpp"

namespace mzsim {

namespace {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw InvalidInput(std::string(what) + " must be finite");
}

}  // namespace

GateMatrix hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return GateMatrix(ComplexMatrix(2, {s, s, s, -s}));
}

GateMatrix phase_gate(double phi) {
  require_finite(phi, "phase_gate: phi");
  return GateMatrix(ComplexMatrix::diagonal({1.0, std::polar(1.0, phi)}));
}

GateMatrix y_rotation(double alpha) {
  require_finite(alpha, "y_rotation: alpha");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return GateMatrix(ComplexMatrix(2, {c, -s, s, c}));
}

GateMatrix controlled_hadamard() {
  // |t a>: ancilla=0 rows/cols {0, 2} get identity, ancilla=1 rows/cols {1, 3} get H.
  const double s = std::numbers::sqrt2 / 2.0;
  ComplexMatrix m(4);
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(1, 1) = s;
  m(1, 3) = s;
  m(3, 1) = s;
  m(3, 3) = -s;
  return GateMatrix(m);
}

GateMatrix rf_pulse(double angle, Axis axis, Qubit qubit) {
  require_finite(angle, "rf_pulse: angle");
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex mis(0.0, -s);
  // cos(a/2) I - i sin(a/2) sigma
  const ComplexMatrix rot = axis == Axis::x ? ComplexMatrix(2, {c, mis, mis, c})
                                            : ComplexMatrix(2, {c, -s, s, c});
  return embed(GateMatrix(rot), qubit);
}

GateMatrix embed(const GateMatrix& u, Qubit qubit) {
  if (u.dim() != 2) throw InvalidInput("embed: expected a single-qubit gate");
  const GateMatrix id = GateMatrix::identity(2);
  return qubit == Qubit::target ? tensor(u, id) : tensor(id, u);
}

}  // namespace mzsim
