#pragma once

#include "mzsim/linalg.hpp"

namespace mzsim {

enum class Axis { x, y };
enum class Qubit { target, ancilla };

/// (1/sqrt2)[[1, 1], [1, -1]]; the first beam splitter.
GateMatrix hadamard();

/// diag(1, e^{i phi}); the phase shifter acting on path |1>.
GateMatrix phase_gate(double phi);

/// Full-angle rotation e^{-i alpha sigma_y} = [[cos a, -sin a], [sin a, cos a]].
/// Takes |0> to cos(alpha)|0> + sin(alpha)|1>; used to prepare the ancilla.
GateMatrix y_rotation(double alpha);

/// Hadamard on the target iff the ancilla is |1>, identity otherwise.
GateMatrix controlled_hadamard();

/// Half-angle rf rotation e^{-i (angle/2) sigma_axis} on one qubit of the
/// two-qubit register. A "pi pulse" is rf_pulse(pi, ...).
GateMatrix rf_pulse(double angle, Axis axis, Qubit qubit);

/// Single-qubit `u` lifted onto the named qubit: u x I or I x u.
GateMatrix embed(const GateMatrix& u, Qubit qubit);

}  // namespace mzsim
