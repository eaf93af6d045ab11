#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "helpers.hpp"
#include "littlent/density.hpp"
#include "littlent/state.hpp"

using namespace littlent;
using testutil::bell_state;
using testutil::ghz_state;
using testutil::haar_state;

namespace {

// Independent partial-trace oracle: builds the full density matrix and sums
// over the complement indices directly.
Eigen::MatrixXcd brute_force_reduced(const StateVector& psi,
                                     const std::vector<int>& a) {
  const int n = psi.num_qubits();
  const auto& amps = psi.amplitudes();
  Eigen::MatrixXcd rho = amps * amps.adjoint();
  const int size_a = int(a.size());
  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(1 << size_a, 1 << size_a);
  auto a_bits = [&](std::int64_t idx) {
    std::int64_t r = 0;
    for (int q : a) r = (r << 1) | ((idx >> (n - 1 - q)) & 1);
    return r;
  };
  auto b_bits = [&](std::int64_t idx) {
    std::int64_t r = 0;
    for (int q = 0; q < n; ++q) {
      bool in_a = false;
      for (int x : a) in_a = in_a || x == q;
      if (!in_a) r = (r << 1) | ((idx >> (n - 1 - q)) & 1);
    }
    return r;
  };
  for (std::int64_t i = 0; i < psi.dim(); ++i)
    for (std::int64_t j = 0; j < psi.dim(); ++j)
      if (b_bits(i) == b_bits(j)) out(a_bits(i), a_bits(j)) += rho(i, j);
  return out;
}

}  // namespace

TEST_CASE("basis states") {
  CHECK(make_basis_state(1, "1").amplitudes()(0) == cplx(0.0));
  CHECK(make_basis_state(1, "1").amplitudes()(1) == cplx(1.0));
  auto two = make_basis_state(2, "00");
  CHECK(two.amplitudes()(0) == cplx(1.0));
  CHECK(two.amplitudes().tail(3).cwiseAbs().maxCoeff() == 0.0);
  CHECK(make_basis_state(3, "010").amplitudes()(2) == cplx(1.0));
  CHECK_THROWS_AS(make_basis_state(2, "0"), std::invalid_argument);
  CHECK_THROWS_AS(make_basis_state(2, "02"), std::invalid_argument);
}

TEST_CASE("gate application") {
  StateVector h0 = apply_gate(zero_state(1),
                              GateInstance::simple(GateKind::H, {0}));
  CHECK(std::abs(h0.amplitudes()(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(h0.amplitudes()(1) - 1.0 / std::sqrt(2.0)) < 1e-15);

  StateVector flipped = apply_gate(
      make_basis_state(2, "10"), GateInstance::simple(GateKind::CNOT, {0, 1}));
  CHECK(std::abs(flipped.amplitudes()(3) - 1.0) < 1e-15);

  // inactive control leaves the state unchanged
  StateVector controlled = apply_gate(
      make_basis_state(2, "00"), GateInstance::simple(GateKind::H, {0}, {1}));
  CHECK(std::abs(controlled.amplitudes()(0) - 1.0) < 1e-15);

  CHECK_THROWS_AS(
      apply_gate(zero_state(1), GateInstance::simple(GateKind::X, {3})),
      std::invalid_argument);
  Eigen::MatrixXcd bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(
      apply_gate(zero_state(1), GateInstance::unitary(bad, {0})),
      std::invalid_argument);
}

TEST_CASE("gate application preserves norm") {
  Rng rng(42);
  StateVector state = haar_state(4, rng);
  for (int i = 0; i < 50; ++i) {
    auto c = testutil::random_htcnot_circuit(4, 1, rng);
    state = apply_gate(state, c.gates[0]);
    CHECK(std::abs(state.amplitudes().norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("overlap and pure trace distance") {
  CHECK(overlap(zero_state(1), zero_state(1)) == cplx(1.0));
  CHECK(overlap(zero_state(1), make_basis_state(1, "1")) == cplx(0.0));
  CHECK(trace_distance_pure(zero_state(3), zero_state(3)) == 0.0);
  CHECK(trace_distance_pure(zero_state(1), make_basis_state(1, "1")) == 1.0);
  CHECK_THROWS_AS(overlap(zero_state(1), zero_state(2)),
                  std::invalid_argument);
}

TEST_CASE("pure and mixed trace distances agree") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    StateVector psi = haar_state(3, rng);
    StateVector phi = haar_state(3, rng);
    double pure = trace_distance_pure(psi, phi);
    double mixed = trace_distance_mixed(DensityOperator::pure(psi),
                                        DensityOperator::pure(phi));
    CHECK(std::abs(pure - mixed) < 1e-10);
  }
}

TEST_CASE("mixed trace distance") {
  DensityOperator rho = DensityOperator::pure(zero_state(2));
  CHECK(trace_distance_mixed(rho, rho) == 0.0);
  DensityOperator sigma = DensityOperator::pure(make_basis_state(2, "11"));
  CHECK(std::abs(trace_distance_mixed(rho, sigma) - 1.0) < 1e-12);

  // |0><0|^n against the pseudo-pure mixture: eigenvalues give eps(1 - 2^-n)
  const int n = 3;
  const double eps = 0.2;
  Eigen::MatrixXcd m = (eps / 8.0) * Eigen::MatrixXcd::Identity(8, 8);
  m(0, 0) += 1.0 - eps;
  DensityOperator mix(n, m);
  double expected = eps * (1.0 - std::exp2(-n));
  CHECK(std::abs(trace_distance_mixed(DensityOperator::pure(zero_state(n)),
                                      mix) -
                 expected) < 1e-12);
  CHECK(expected <= eps);
}

TEST_CASE("reduced density") {
  auto pure01 = reduced_density(make_basis_state(2, "10"),
                                Bipartition(2, {0}));
  CHECK(std::abs(pure01.matrix()(1, 1) - 1.0) < 1e-14);

  auto bell_half = reduced_density(bell_state(), Bipartition(2, {0}));
  CHECK(std::abs(bell_half.matrix()(0, 0) - 0.5) < 1e-14);
  CHECK(std::abs(bell_half.matrix()(1, 1) - 0.5) < 1e-14);
  CHECK(std::abs(bell_half.matrix()(0, 1)) < 1e-14);

  auto ghz_part = reduced_density(ghz_state(3), Bipartition(3, {0}));
  CHECK(std::abs(ghz_part.matrix()(0, 0) - 0.5) < 1e-14);
  CHECK(std::abs(ghz_part.matrix()(1, 1) - 0.5) < 1e-14);

  // cross-check against the brute-force partial trace on random states
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    StateVector psi = haar_state(4, rng);
    for (auto a : {std::vector<int>{0}, {1, 3}, {0, 2}}) {
      Eigen::MatrixXcd expected = brute_force_reduced(psi, a);
      Eigen::MatrixXcd got =
          reduced_density(psi, Bipartition(4, a)).matrix();
      CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("schmidt spectrum") {
  auto product = schmidt_spectrum(make_basis_state(2, "10"),
                                  Bipartition(2, {0}));
  REQUIRE(product.size() == 1);
  CHECK(std::abs(product[0] - 1.0) < 1e-12);

  auto bell = schmidt_spectrum(bell_state(), Bipartition(2, {0}));
  REQUIRE(bell.size() == 2);
  CHECK(std::abs(bell[0] - 0.5) < 1e-12);
  CHECK(std::abs(bell[1] - 0.5) < 1e-12);

  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    StateVector psi = haar_state(5, rng);
    for (const Bipartition& split : Bipartition::contiguous(5)) {
      auto spec = schmidt_spectrum(psi, split);
      double sum = 0.0;
      for (double v : spec) sum += v;
      CHECK(std::abs(sum - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("partial traces of a pure state share a spectrum") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    StateVector psi = haar_state(5, rng);
    Bipartition split(5, {0, 3});
    auto a_eigs = reduced_density(psi, split).eigenvalues();
    auto b_eigs =
        reduced_density(psi, Bipartition(5, split.b_side())).eigenvalues();
    // pad the shorter list with zeros
    while (a_eigs.size() < b_eigs.size()) a_eigs.push_back(0.0);
    while (b_eigs.size() < a_eigs.size()) b_eigs.push_back(0.0);
    for (size_t k = 0; k < a_eigs.size(); ++k)
      CHECK(std::abs(a_eigs[k] - b_eigs[k]) < 1e-10);
  }
}

TEST_CASE("operator norm") {
  CHECK(std::abs(operator_norm(Eigen::MatrixXcd::Identity(4, 4)) - 1.0) <
        1e-12);
  Eigen::MatrixXcd y(2, 2);
  y << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  CHECK(std::abs(operator_norm(y) - 1.0) < 1e-12);
  Eigen::MatrixXcd d(2, 2);
  d << 3.0, 0.0, 0.0, -5.0;
  CHECK(std::abs(operator_norm(d) - 5.0) < 1e-12);
}

TEST_CASE("trace inner product is bounded by norm products") {
  Rng rng(19);
  for (int i = 0; i < 25; ++i) {
    int dim = 2 + int(rng.next_double() * 7);
    Eigen::MatrixXcd a(dim, dim), b(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        a(r, c) = cplx(rng.next_normal(), rng.next_normal());
        b(r, c) = cplx(rng.next_normal(), rng.next_normal());
      }
    double lhs = std::abs((a * b).trace());
    double rhs = operator_norm(a) * trace_norm(b);
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("state conjugation") {
  Rng rng(23);
  StateVector psi = haar_state(3, rng);
  StateVector conj = conjugate(psi);
  for (Eigen::Index i = 0; i < psi.dim(); ++i)
    CHECK(conj.amplitudes()(i) == std::conj(psi.amplitudes()(i)));
}
