#include "littlent/gate.hpp"

#include <cmath>
#include <stdexcept>

namespace littlent {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::RY: return "ry";
    case GateKind::CNOT: return "cnot";
    case GateKind::Unitary: return "unitary";
  }
  return "?";
}

GateInstance GateInstance::simple(GateKind kind, std::vector<int> targets,
                                  std::vector<int> controls) {
  GateInstance g;
  g.kind = kind;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  return g;
}

GateInstance GateInstance::rotation_y(double theta, int target,
                                      std::vector<int> controls) {
  GateInstance g;
  g.kind = GateKind::RY;
  g.params = {theta};
  g.targets = {target};
  g.controls = std::move(controls);
  return g;
}

GateInstance GateInstance::unitary(Eigen::MatrixXcd u, std::vector<int> targets,
                                   std::vector<int> controls) {
  GateInstance g;
  g.kind = GateKind::Unitary;
  g.matrix = std::move(u);
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  return g;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  Eigen::MatrixXcd delta =
      m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXcd gate_matrix(const GateInstance& g) {
  const cplx i(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto expect = [&](size_t n_targets, size_t n_params) {
    if (g.targets.size() != n_targets)
      throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                  ": wrong target count");
    if (g.params.size() != n_params)
      throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                  ": wrong parameter count");
  };

  Eigen::MatrixXcd u;
  switch (g.kind) {
    case GateKind::X:
      expect(1, 0);
      u = Eigen::MatrixXcd{{0, 1}, {1, 0}};
      break;
    case GateKind::Y:
      expect(1, 0);
      u = Eigen::MatrixXcd{{0, -i}, {i, 0}};
      break;
    case GateKind::Z:
      expect(1, 0);
      u = Eigen::MatrixXcd{{1, 0}, {0, -1}};
      break;
    case GateKind::H:
      expect(1, 0);
      u = inv_sqrt2 * Eigen::MatrixXcd{{1, 1}, {1, -1}};
      break;
    case GateKind::S:
      expect(1, 0);
      u = Eigen::MatrixXcd{{1, 0}, {0, i}};
      break;
    case GateKind::T:
      expect(1, 0);
      u = Eigen::MatrixXcd{{1, 0}, {0, std::exp(i * (kPi / 4.0))}};
      break;
    case GateKind::RY: {
      expect(1, 1);
      double c = std::cos(g.params[0] / 2.0);
      double s = std::sin(g.params[0] / 2.0);
      // RY(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>
      u = Eigen::MatrixXcd{{c, -s}, {s, c}};
      break;
    }
    case GateKind::CNOT:
      expect(2, 0);
      // targets are (control, target); sub-basis |ct|
      u = Eigen::MatrixXcd{{1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 0, 1},
                           {0, 0, 1, 0}};
      break;
    case GateKind::Unitary: {
      if (g.params.size() != 0)
        throw std::invalid_argument("unitary: unexpected parameters");
      Eigen::Index want = Eigen::Index(1) << g.targets.size();
      if (g.matrix.rows() != want || g.matrix.cols() != want)
        throw std::invalid_argument("unitary: matrix/target size mismatch");
      if (!is_unitary(g.matrix))
        throw std::invalid_argument("unitary: matrix is not unitary");
      u = g.matrix;
      break;
    }
  }
  return u;
}

}  // namespace littlent
