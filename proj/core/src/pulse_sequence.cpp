#include "mzsim/pulse_sequence.hpp"

#include <cmath>
#include <numbers>

#include "mzsim/errors.hpp"

namespace mzsim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

GateMatrix event_propagator(const PulseEvent& event, const SpinSystem& sys) {
  return std::visit(
      overloaded{
          [](const RfPulse& p) { return rf_pulse(p.angle, p.axis, p.qubit); },
          [&](const Delay& d) { return free_evolution_propagator(sys, d.tau, d.j_active); },
          [](const Gradient&) -> GateMatrix {
            throw InvalidInput("sequence_propagator: gradients have no propagator");
          },
          [](const ShapedGate& g) { return g.propagator; },
      },
      event);
}

}  // namespace

DensityOperator run_sequence(const DensityOperator& rho, const PulseSequence& events,
                             const SpinSystem& sys) {
  if (rho.dim() != 4) throw InvalidInput("run_sequence: expected a two-qubit state");
  DensityOperator state = rho;
  for (const PulseEvent& event : events) {
    if (std::holds_alternative<Gradient>(event)) {
      state = pfg_dephase(state);
    } else {
      state = apply_unitary(state, event_propagator(event, sys));
    }
  }
  return state;
}

GateMatrix sequence_propagator(const PulseSequence& events, const SpinSystem& sys) {
  GateMatrix total = GateMatrix::identity(4);
  for (const PulseEvent& event : events) total = event_propagator(event, sys) * total;
  return total;
}

PulseSequence echo_sequence(const SpinSystem& sys, double phi) {
  if (!(phi >= 0.0) || !std::isfinite(phi)) {
    throw InvalidInput("echo_phase_shift: phi must be non-negative and finite");
  }
  if (!(sys.offset_target > 0.0)) {
    throw CannotRealize("echo_phase_shift: a phase shift needs a positive target resonance offset");
  }
  // phi(tau) = 2 pi offset_target tau
  const double tau = phi / (2.0 * std::numbers::pi * sys.offset_target);
  const RfPulse refocus{std::numbers::pi, Axis::x, Qubit::ancilla};
  return {Delay{tau / 2.0, true}, refocus, Delay{tau / 2.0, true}, refocus};
}

DensityOperator echo_phase_shift(const DensityOperator& rho, const SpinSystem& sys, double phi) {
  return run_sequence(rho, echo_sequence(sys, phi), sys);
}

}  // namespace mzsim
