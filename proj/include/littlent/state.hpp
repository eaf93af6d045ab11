#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>

#include "littlent/gate.hpp"
#include "littlent/types.hpp"

namespace littlent {

// Unit-norm pure state on n qubits. Amplitude index i is read as the n-bit
// string of i with qubit 0 as the most significant bit.
class StateVector {
 public:
  StateVector(int n, Eigen::VectorXcd amplitudes);

  int num_qubits() const { return n_; }
  std::int64_t dim() const { return std::int64_t(1) << n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  // Bit value of qubit q in basis index idx.
  int qubit_bit(std::int64_t idx, int q) const {
    return int((idx >> (n_ - 1 - q)) & 1);
  }
  static std::int64_t qubit_mask(int n, int q) {
    return std::int64_t(1) << (n - 1 - q);
  }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

// |bits> with bits[0] the state of qubit 0.
StateVector make_basis_state(int n, std::string_view bits);

StateVector zero_state(int n);

// U|psi> with U the gate's unitary extended by identity; controls gate the
// action on the all-ones control subspace.
StateVector apply_gate(const StateVector& state, const GateInstance& g);

// <psi|phi>
cplx overlap(const StateVector& psi, const StateVector& phi);

// sqrt(1 - |<psi|phi>|^2)
double trace_distance_pure(const StateVector& psi, const StateVector& phi);

// |psi*>: every amplitude conjugated in the computational basis.
StateVector conjugate(const StateVector& psi);

}  // namespace littlent
