#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mzsim/gates.hpp"
#include "mzsim/linalg.hpp"
#include "mzsim/nmr.hpp"

namespace mzsim {

/// Hard rf rotation on one spin (half-angle convention).
struct RfPulse {
  double angle = 0.0;
  Axis axis = Axis::x;
  Qubit qubit = Qubit::target;
};

/// Free precession for `tau` seconds.
struct Delay {
  double tau = 0.0;
  bool j_active = true;
};

/// Pulsed field gradient; destroys all coherences.
struct Gradient {};

/// A composite gate applied as its exact propagator (stands in for a shaped pulse).
struct ShapedGate {
  GateMatrix propagator;
  std::string label;
};

using PulseEvent = std::variant<RfPulse, Delay, Gradient, ShapedGate>;
using PulseSequence = std::vector<PulseEvent>;

/// Applies the events in order.
DensityOperator run_sequence(const DensityOperator& rho, const PulseSequence& events,
                             const SpinSystem& sys);

/// Net propagator of a sequence without gradients. Throws InvalidInput if a
/// Gradient is present (it is not unitary).
GateMatrix sequence_propagator(const PulseSequence& events, const SpinSystem& sys);

/// Delay tau/2, pi_x(ancilla), delay tau/2, pi_x(ancilla) with
/// tau = phi / (2 pi offset_target). The coupling and the ancilla offset are
/// refocused, the ancilla ends where it started, and the target picks up
/// diag(1, e^{i phi}) up to a global phase.
///
/// Throws CannotRealize when offset_target is not positive and InvalidInput
/// for negative or non-finite phi.
PulseSequence echo_sequence(const SpinSystem& sys, double phi);

/// run_sequence(rho, echo_sequence(sys, phi), sys).
DensityOperator echo_phase_shift(const DensityOperator& rho, const SpinSystem& sys, double phi);

}  // namespace mzsim
