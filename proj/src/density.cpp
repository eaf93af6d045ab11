#include "littlent/density.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace littlent {

namespace {

constexpr double kSpectrumFloor = 1e-12;

// Amplitude matrix of psi with rows indexed by the `rows` qubits (MSB first,
// ascending qubit order) and columns by the remaining qubits.
Eigen::MatrixXcd reshape_amplitudes(const StateVector& psi,
                                    const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
  const int n = psi.num_qubits();
  Eigen::MatrixXcd m(Eigen::Index(1) << rows.size(),
                     Eigen::Index(1) << cols.size());
  const auto& amps = psi.amplitudes();
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    std::int64_t r = 0, c = 0;
    for (size_t j = 0; j < rows.size(); ++j)
      r = (r << 1) | psi.qubit_bit(i, rows[j]);
    for (size_t j = 0; j < cols.size(); ++j)
      c = (c << 1) | psi.qubit_bit(i, cols[j]);
    m(r, c) = amps(i);
  }
  (void)n;
  return m;
}

}  // namespace

Eigen::MatrixXcd amplitude_matrix(const StateVector& psi,
                                  const std::vector<int>& rows) {
  std::vector<int> sorted_rows = rows;
  std::sort(sorted_rows.begin(), sorted_rows.end());
  std::vector<int> cols;
  for (int q = 0; q < psi.num_qubits(); ++q)
    if (!std::binary_search(sorted_rows.begin(), sorted_rows.end(), q))
      cols.push_back(q);
  return reshape_amplitudes(psi, sorted_rows, cols);
}

DensityOperator::DensityOperator(int n, Eigen::MatrixXcd matrix)
    : n_(n), m_(std::move(matrix)) {
  if (n < 1) throw std::invalid_argument("DensityOperator: need n >= 1");
  if (n > kDensityCap)
    throw cap_exceeded("DensityOperator: " + std::to_string(n) +
                       " qubits exceeds the density cap of " +
                       std::to_string(kDensityCap));
  Eigen::Index dim = Eigen::Index(1) << n;
  if (m_.rows() != dim || m_.cols() != dim)
    throw std::invalid_argument("DensityOperator: matrix is not 2^n x 2^n");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > 1e-10 ||
      std::abs(m_.trace().imag()) > 1e-10)
    throw std::invalid_argument("DensityOperator: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument(
        "DensityOperator: matrix is not positive semidefinite");
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  const auto& a = psi.amplitudes();
  return DensityOperator(psi.num_qubits(), a * a.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int n) {
  Eigen::Index dim = Eigen::Index(1) << n;
  return DensityOperator(
      n, Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
}

std::vector<double> DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_,
                                                     Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  for (double& v : out)
    if (v < 0.0) v = 0.0;
  std::sort(out.rbegin(), out.rend());
  return out;
}

DensityOperator reduced_density(const StateVector& psi, const Bipartition& a) {
  if (a.num_qubits() != psi.num_qubits())
    throw std::invalid_argument("reduced_density: qubit counts differ");
  if (a.a_size() > kDensityCap)
    throw cap_exceeded("reduced_density: |A| exceeds the density cap");
  Eigen::MatrixXcd m = reshape_amplitudes(psi, a.a_side(), a.b_side());
  return DensityOperator(a.a_size(), m * m.adjoint());
}

double trace_distance_mixed(const DensityOperator& rho,
                            const DensityOperator& sigma) {
  if (rho.num_qubits() != sigma.num_qubits())
    throw std::invalid_argument("trace_distance_mixed: qubit counts differ");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      rho.matrix() - sigma.matrix(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double operator_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

double trace_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues().sum();
}

std::vector<double> schmidt_spectrum(const StateVector& psi,
                                     const Bipartition& a) {
  if (a.num_qubits() != psi.num_qubits())
    throw std::invalid_argument("schmidt_spectrum: qubit counts differ");
  // Work on the smaller side; its Gram matrix carries the same spectrum.
  const bool a_small = a.a_size() <= psi.num_qubits() - a.a_size();
  const auto& rows = a_small ? a.a_side() : a.b_side();
  const auto& cols = a_small ? a.b_side() : a.a_side();
  Eigen::MatrixXcd m = reshape_amplitudes(psi, rows, cols);

  std::vector<double> spec;
  if (m.rows() <= 64) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      double s = svd.singularValues()(i);
      spec.push_back(s * s);
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m * m.adjoint(),
                                                       Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      spec.push_back(std::max(0.0, es.eigenvalues()(i)));
  }
  std::sort(spec.rbegin(), spec.rend());
  while (!spec.empty() && spec.back() < kSpectrumFloor) spec.pop_back();
  return spec;
}

double entropy_of_spectrum(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double lambda : spectrum) s -= xlog2x(lambda);
  return std::max(0.0, s);
}

}  // namespace littlent
