#include "littlent/dilution.hpp"

#include <cmath>
#include <stdexcept>

namespace littlent {

EpsilonParams::EpsilonParams(double eps, std::optional<double> d)
    : epsilon(eps), epsilon_bar(std::sqrt(eps)), delta(d) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("EpsilonParams: epsilon must be in (0, 1]");
}

DilutedCircuit dilute(const Circuit& c, const EpsilonParams& eps) {
  for (const GateInstance& g : c.gates)
    if (g.touched_qubits() > 2)
      throw std::invalid_argument(
          "dilute: base gate touches more than 2 qubits; cannot add the "
          "ancilla control");

  const int ancilla = c.n;
  Circuit transformed;
  transformed.n = c.n + 1;
  transformed.name = c.name;
  transformed.gates.reserve(c.gates.size() + 1);
  // sin(theta/2) = sqrt(eps) puts amplitude sqrt(eps) on |1> of the ancilla.
  transformed.gates.push_back(GateInstance::rotation_y(
      2.0 * std::asin(eps.epsilon_bar), ancilla));
  for (const GateInstance& g : c.gates) {
    GateInstance controlled = g;
    controlled.controls.push_back(ancilla);
    transformed.gates.push_back(std::move(controlled));
  }
  return DilutedCircuit{c, eps, std::move(transformed)};
}

std::vector<StateVector> step_states(const DilutedCircuit& d) {
  const Circuit& t = d.transformed;
  if (t.n > statevector_cap())
    throw cap_exceeded("step_states: circuit exceeds the statevector cap");
  std::vector<StateVector> out;
  out.reserve(t.gates.size());
  StateVector state = zero_state(t.n);
  for (const GateInstance& g : t.gates) {
    state = apply_gate(state, g);
    out.push_back(state);
  }
  return out;
}

std::vector<StepDistance> verify_s_epsilon(const Circuit& c, double radius) {
  if (c.n > statevector_cap())
    throw cap_exceeded("verify_s_epsilon: circuit exceeds the statevector cap");
  std::vector<StepDistance> out;
  StateVector zero = zero_state(c.n);
  StateVector state = zero;
  auto record = [&](int step) {
    double dist = trace_distance_pure(state, zero);
    out.push_back({step, dist, dist <= radius + 1e-9});
  };
  record(0);
  for (size_t i = 0; i < c.gates.size(); ++i) {
    state = apply_gate(state, c.gates[i]);
    record(int(i + 1));
  }
  return out;
}

}  // namespace littlent
