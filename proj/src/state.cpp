#include "littlent/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace littlent {

StateVector::StateVector(int n, Eigen::VectorXcd amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (n < 1) throw std::invalid_argument("StateVector: need n >= 1");
  if (n > statevector_cap())
    throw cap_exceeded("StateVector: " + std::to_string(n) +
                       " qubits exceeds the statevector cap of " +
                       std::to_string(statevector_cap()));
  if (amps_.size() != (Eigen::Index(1) << n))
    throw std::invalid_argument("StateVector: amplitude length is not 2^n");
  double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw std::invalid_argument("StateVector: squared norm " +
                                std::to_string(norm2) + " is not 1");
}

StateVector make_basis_state(int n, std::string_view bits) {
  if (int(bits.size()) != n)
    throw std::invalid_argument("make_basis_state: bit string length " +
                                std::to_string(bits.size()) +
                                " does not match n = " + std::to_string(n));
  std::int64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("make_basis_state: bits must be 0 or 1");
    idx = (idx << 1) | (c == '1' ? 1 : 0);
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  amps(idx) = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector zero_state(int n) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  amps(0) = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector apply_gate(const StateVector& state, const GateInstance& g) {
  const int n = state.num_qubits();
  std::vector<int> seen;
  for (int q : g.targets) seen.push_back(q);
  for (int q : g.controls) seen.push_back(q);
  for (int q : seen)
    if (q < 0 || q >= n)
      throw std::invalid_argument("apply_gate: qubit index " +
                                  std::to_string(q) + " out of range");
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("apply_gate: repeated qubit in one gate");
  if (g.touched_qubits() > 3)
    throw std::invalid_argument("apply_gate: gate touches more than 3 qubits");

  const Eigen::MatrixXcd u = gate_matrix(g);
  const int kt = int(g.targets.size());
  const std::int64_t dim = state.dim();

  std::int64_t ctrl_mask = 0;
  for (int q : g.controls) ctrl_mask |= StateVector::qubit_mask(n, q);
  std::int64_t target_mask = 0;
  std::vector<std::int64_t> tbit(kt);
  for (int j = 0; j < kt; ++j) {
    tbit[j] = StateVector::qubit_mask(n, g.targets[j]);
    target_mask |= tbit[j];
  }

  const int sub = 1 << kt;
  Eigen::VectorXcd out = state.amplitudes();
  std::vector<std::int64_t> idx(sub);
  Eigen::VectorXcd in_block(sub);
  for (std::int64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    if ((base & ctrl_mask) != ctrl_mask) continue;
    for (int s = 0; s < sub; ++s) {
      std::int64_t id = base;
      for (int j = 0; j < kt; ++j)
        if ((s >> (kt - 1 - j)) & 1) id |= tbit[j];
      idx[s] = id;
      in_block(s) = out(id);
    }
    Eigen::VectorXcd out_block = u * in_block;
    for (int s = 0; s < sub; ++s) out(idx[s]) = out_block(s);
  }
  return StateVector(n, std::move(out));
}

cplx overlap(const StateVector& psi, const StateVector& phi) {
  if (psi.num_qubits() != phi.num_qubits())
    throw std::invalid_argument("overlap: qubit counts differ");
  return psi.amplitudes().dot(phi.amplitudes());
}

double trace_distance_pure(const StateVector& psi, const StateVector& phi) {
  cplx ov = overlap(psi, phi);
  double f = std::norm(ov);
  return std::sqrt(std::max(0.0, 1.0 - f));
}

StateVector conjugate(const StateVector& psi) {
  return StateVector(psi.num_qubits(), psi.amplitudes().conjugate());
}

}  // namespace littlent
