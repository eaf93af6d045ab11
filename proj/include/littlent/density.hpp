#pragma once

#include <Eigen/Dense>
#include <vector>

#include "littlent/bipartition.hpp"
#include "littlent/state.hpp"
#include "littlent/types.hpp"

namespace littlent {

// Hermitian, PSD, unit-trace operator on n qubits (small n only).
class DensityOperator {
 public:
  DensityOperator(int n, Eigen::MatrixXcd matrix);

  static DensityOperator pure(const StateVector& psi);
  static DensityOperator maximally_mixed(int n);

  int num_qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  // Real eigenvalues, descending, negatives above -1e-10 clamped to 0.
  std::vector<double> eigenvalues() const;

 private:
  int n_;
  Eigen::MatrixXcd m_;
};

// Amplitude matrix of psi with rows indexed by the `rows` qubits (ascending
// order, first listed qubit most significant) and columns by the rest.
Eigen::MatrixXcd amplitude_matrix(const StateVector& psi,
                                  const std::vector<int>& rows);

// rho^A = Tr_B |psi><psi|. Requires |A| <= kDensityCap.
DensityOperator reduced_density(const StateVector& psi, const Bipartition& a);

// (1/2)||rho - sigma||_1 via eigenvalues of the difference.
double trace_distance_mixed(const DensityOperator& rho,
                            const DensityOperator& sigma);

// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& a);

// Trace norm: sum of singular values.
double trace_norm(const Eigen::MatrixXcd& a);

// Squared singular values of the A|B amplitude-matrix reshaping of psi,
// descending, entries below 1e-12 dropped. Equals the spectrum of rho^A.
std::vector<double> schmidt_spectrum(const StateVector& psi,
                                     const Bipartition& a);

// -sum lambda log2 lambda over a spectrum (zeros contribute nothing).
double entropy_of_spectrum(const std::vector<double>& spectrum);

}  // namespace littlent
