#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "littlent/circuit.hpp"
#include "littlent/rng.hpp"
#include "littlent/state.hpp"

namespace testutil {

inline littlent::StateVector haar_state(int n, littlent::Rng& rng) {
  Eigen::VectorXcd v(Eigen::Index(1) << n);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = littlent::cplx(rng.next_normal(), rng.next_normal());
  return littlent::StateVector(n, v / v.norm());
}

inline littlent::StateVector ghz_state(int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  v(0) = 1.0 / std::sqrt(2.0);
  v(v.size() - 1) = 1.0 / std::sqrt(2.0);
  return littlent::StateVector(n, std::move(v));
}

inline littlent::StateVector bell_state() {
  Eigen::VectorXcd v(4);
  v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return littlent::StateVector(2, std::move(v));
}

// Random circuit over the H/T/CNOT set.
inline littlent::Circuit random_htcnot_circuit(int n, int depth,
                                               littlent::Rng& rng) {
  littlent::Circuit c;
  c.n = n;
  for (int i = 0; i < depth; ++i) {
    double pick = rng.next_double();
    if (pick < 1.0 / 3.0) {
      c.gates.push_back(littlent::GateInstance::simple(
          littlent::GateKind::H, {int(rng.next_double() * n)}));
    } else if (pick < 2.0 / 3.0) {
      c.gates.push_back(littlent::GateInstance::simple(
          littlent::GateKind::T, {int(rng.next_double() * n)}));
    } else {
      int a = int(rng.next_double() * n);
      int b = int(rng.next_double() * (n - 1));
      if (b >= a) ++b;
      c.gates.push_back(
          littlent::GateInstance::simple(littlent::GateKind::CNOT, {a, b}));
    }
  }
  return c;
}

}  // namespace testutil
