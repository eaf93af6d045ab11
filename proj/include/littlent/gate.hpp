#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "littlent/types.hpp"

namespace littlent {

enum class GateKind { X, Y, Z, H, S, T, RY, CNOT, Unitary };

const char* gate_name(GateKind kind);

// A gate instance: a fixed kind (or explicit unitary matrix) applied to
// `targets`, conditioned on every qubit in `controls` being |1>. For CNOT the
// two targets are (control, target) in that order; `controls` holds any
// additional controls on top of that.
struct GateInstance {
  GateKind kind = GateKind::X;
  std::vector<double> params;    // RY: one angle in radians
  std::vector<int> targets;
  std::vector<int> controls;
  Eigen::MatrixXcd matrix;       // Unitary kind only: 2x2 or 4x4

  int touched_qubits() const { return int(targets.size() + controls.size()); }

  static GateInstance simple(GateKind kind, std::vector<int> targets,
                             std::vector<int> controls = {});
  static GateInstance rotation_y(double theta, int target,
                                 std::vector<int> controls = {});
  static GateInstance unitary(Eigen::MatrixXcd u, std::vector<int> targets,
                              std::vector<int> controls = {});
};

// Unitary acting on the target subspace, with targets[0] as the most
// significant sub-index bit. Throws std::invalid_argument on malformed gates
// (wrong param/target count, non-unitary explicit matrix).
Eigen::MatrixXcd gate_matrix(const GateInstance& g);

bool is_unitary(const Eigen::MatrixXcd& m, double tol = 1e-10);

}  // namespace littlent
