#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "mzsim/errors.hpp"
#include "mzsim/gates.hpp"
#include "mzsim/nmr.hpp"
#include "oracles.hpp"

using namespace mzsim;
using oracle::kPi;

namespace {

double unitarity_defect(const GateMatrix& u) {
  return max_abs_diff(u.matrix().adjoint() * u.matrix(), ComplexMatrix::identity(u.dim()));
}

}  // namespace

TEST_SUITE("gates") {

TEST_CASE("hadamard") {
  const GateMatrix h = hadamard();
  CHECK(max_abs_diff((h * h).matrix(), ComplexMatrix::identity(2)) <= 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(mzsim::apply(h.matrix(), Ket{1.0, 0.0}), Ket{s, s}) <= 1e-15);
  CHECK(max_abs_diff(mzsim::apply(h.matrix(), Ket{0.0, 1.0}), Ket{s, -s}) <= 1e-15);
}

TEST_CASE("phase_gate") {
  CHECK(phase_gate(0.0).matrix() == ComplexMatrix::identity(2));
  CHECK(max_abs_diff(phase_gate(kPi).matrix(), pauli::z()) <= 1e-15);
  for (double phi : {0.3, 1.0, 2.5, 5.9}) {
    const Ket out = mzsim::apply(phase_gate(phi).matrix(), mzsim::apply(hadamard().matrix(), Ket{1.0, 0.0}));
    CHECK(max_abs_diff(out, oracle::psi_p(phi)) <= 1e-15);
    CHECK(max_abs_diff(phase_gate(phi + 2.0 * kPi).matrix(), phase_gate(phi).matrix()) <= 1e-12);
  }
  CHECK_THROWS_AS(phase_gate(std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST_CASE("y_rotation") {
  CHECK(y_rotation(0.0).matrix() == ComplexMatrix::identity(2));
  CHECK(max_abs_diff(mzsim::apply(y_rotation(kPi / 2.0).matrix(), Ket{1.0, 0.0}), Ket{0.0, 1.0}) <= 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(mzsim::apply(y_rotation(kPi / 4.0).matrix(), Ket{1.0, 0.0}), Ket{s, s}) <= 1e-15);

  // Full-angle convention: e^{-i a sigma_y} = cos(a) I - i sin(a) sigma_y.
  const double a = 0.77;
  const ComplexMatrix expected =
      ComplexMatrix::identity(2) * Complex(std::cos(a)) - pauli::y() * Complex(0.0, std::sin(a));
  CHECK(max_abs_diff(y_rotation(a).matrix(), expected) <= 1e-15);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double x = ang(rng);
    const double y = ang(rng);
    CHECK(max_abs_diff((y_rotation(x) * y_rotation(y)).matrix(), y_rotation(x + y).matrix()) <= 1e-12);
  }
  CHECK_THROWS_AS(y_rotation(std::nan("")), InvalidInput);
}

TEST_CASE("controlled_hadamard") {
  const GateMatrix ch = controlled_hadamard();
  CHECK(is_hermitian(ch.matrix()));
  CHECK(max_abs_diff((ch * ch).matrix(), ComplexMatrix::identity(4)) <= 1e-12);

  for (double phi : {0.0, 0.9, kPi, 4.0}) {
    const Ket p = oracle::psi_p(phi);
    const Ket control_off = tensor(p, Ket{1.0, 0.0});
    CHECK(max_abs_diff(mzsim::apply(ch.matrix(), control_off), control_off) <= 1e-15);

    const Ket control_on = mzsim::apply(ch.matrix(), tensor(p, Ket{0.0, 1.0}));
    CHECK(diff_up_to_global_phase(control_on, tensor(oracle::psi_w(phi), Ket{0.0, 1.0})) <= 1e-12);
  }

  SUBCASE("full circuit reproduces the entangled state element by element") {
    for (double alpha : {0.0, 0.3, kPi / 4.0, 1.2, kPi / 2.0}) {
      for (double phi : {0.0, 1.1, kPi, 5.0}) {
        Ket psi{1.0, 0.0, 0.0, 0.0};
        psi = mzsim::apply(embed(y_rotation(alpha), Qubit::ancilla).matrix(), psi);
        psi = mzsim::apply(embed(hadamard(), Qubit::target).matrix(), psi);
        psi = mzsim::apply(embed(phase_gate(phi), Qubit::target).matrix(), psi);
        psi = mzsim::apply(ch.matrix(), psi);
        CHECK(max_abs_diff(psi, oracle::entangled_state(alpha, phi)) <= 1e-14);
      }
    }
  }
}

TEST_CASE("rf_pulse") {
  const GateMatrix pi_x = rf_pulse(kPi, Axis::x, Qubit::ancilla);
  CHECK(max_abs_diff((pi_x * pi_x).matrix(), ComplexMatrix::identity(4) * Complex(-1.0)) <= 1e-15);
  CHECK(max_abs_diff(rf_pulse(0.0, Axis::y, Qubit::target).matrix(), ComplexMatrix::identity(4)) == 0.0);

  // Half-angle: e^{-i (theta/2) sigma_x} on the target only.
  const double th = 1.3;
  const ComplexMatrix rx = ComplexMatrix::identity(2) * Complex(std::cos(th / 2.0)) -
                           pauli::x() * Complex(0.0, std::sin(th / 2.0));
  CHECK(max_abs_diff(rf_pulse(th, Axis::x, Qubit::target).matrix(),
                     oracle::kron(rx, ComplexMatrix::identity(2))) <= 1e-15);

  SUBCASE("(pi/2)_y turns longitudinal deviation c into transverse signal c") {
    for (double c : {-0.2, 0.05, 0.25}) {
      const ComplexMatrix rho = ComplexMatrix::identity(4) * Complex(0.25) +
                                tensor(pauli::z(), ComplexMatrix::identity(2)) * Complex(c);
      const DensityOperator out = apply_unitary(DensityOperator(rho), rf_pulse(kPi / 2.0, Axis::y, Qubit::target));
      const ComplexMatrix sx = tensor(pauli::x(), ComplexMatrix::identity(2));
      // tr(rho' (X x I)) = 4c; no residual Z component.
      CHECK(std::abs(expectation(out, sx) - 4.0 * c) <= 1e-15);
      CHECK(std::abs(expectation(out, tensor(pauli::z(), ComplexMatrix::identity(2)))) <= 1e-15);
    }
  }
}

TEST_CASE("every constructor output is unitary") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(-20.0, 20.0);
  CHECK(unitarity_defect(hadamard()) <= 1e-12);
  CHECK(unitarity_defect(controlled_hadamard()) <= 1e-12);
  for (int i = 0; i < 200; ++i) {
    const double a = ang(rng);
    CHECK(unitarity_defect(phase_gate(a)) <= 1e-12);
    CHECK(unitarity_defect(y_rotation(a)) <= 1e-12);
    for (Axis ax : {Axis::x, Axis::y}) {
      for (Qubit q : {Qubit::target, Qubit::ancilla}) CHECK(unitarity_defect(rf_pulse(a, ax, q)) <= 1e-12);
    }
  }
}

}  // TEST_SUITE
