#pragma once

#include <optional>
#include <vector>

#include "littlent/circuit.hpp"
#include "littlent/state.hpp"

namespace littlent {

// The closeness parameters: epsilon is the squared amplitude weight placed on
// the computing branch, epsilon_bar = sqrt(epsilon) the trace-distance radius
// the transformed register stays within.
struct EpsilonParams {
  double epsilon;
  double epsilon_bar;
  std::optional<double> delta;

  explicit EpsilonParams(double eps, std::optional<double> delta = {});
};

// Ancilla-controlled transform of a base circuit: one RY on the appended
// ancilla qubit m, then every base gate controlled on it.
struct DilutedCircuit {
  Circuit base;
  EpsilonParams epsilon;
  Circuit transformed;
};

// Builds the transformed circuit. Purely structural; never evaluates
// amplitudes. Requires every base gate to touch <= 2 qubits.
DilutedCircuit dilute(const Circuit& c, const EpsilonParams& eps);

// Register states after gate 0 (the ancilla rotation) and after each
// subsequent gate; index t corresponds to t base gates applied.
std::vector<StateVector> step_states(const DilutedCircuit& d);

struct StepDistance {
  int step;
  double distance;  // trace distance to |0>^n
  bool pass;        // distance <= radius + 1e-9
};

// Runs c from |0>^n and reports the per-step distance to |0>^n; step 0 is the
// initial state.
std::vector<StepDistance> verify_s_epsilon(const Circuit& c, double radius);

}  // namespace littlent
