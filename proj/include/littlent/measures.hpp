#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "littlent/bipartition.hpp"
#include "littlent/density.hpp"
#include "littlent/dilution.hpp"
#include "littlent/state.hpp"

namespace littlent {

enum class MeasureKind { Exact, UpperBound, LowerBound };

const char* measure_kind_name(MeasureKind k);

// A complete product state |a_1> x ... x |a_n>, one unit 2-vector per site.
struct ProductState {
  std::vector<Eigen::Vector2cd> sites;

  StateVector to_state() const;
  cplx overlap_with(const StateVector& psi) const;  // <a|psi>
};

struct MeasureValue {
  std::string name;
  double value = 0.0;
  MeasureKind kind = MeasureKind::Exact;
  std::optional<ProductState> product_certificate;
  std::string certificate_note;
  bool converged = true;
};

// --- bipartite spectra -----------------------------------------------------

// Von Neumann entropy of rho^A (symmetric in A <-> B).
MeasureValue entanglement_entropy(const StateVector& psi, const Bipartition& a);

// alpha-Renyi entropy of a spectrum; alpha = 1 gives the von Neumann entropy.
double renyi_entropy(const std::vector<double>& spectrum, double alpha);

struct SchmidtRank {
  int rank;
  double chi;  // log2(rank)
};

// Count of Schmidt values above tol * (largest value).
SchmidtRank schmidt_rank(const StateVector& psi, const Bipartition& a,
                         double tol = 1e-10);

// --- product-state optimization --------------------------------------------

struct GeoOptions {
  int restarts = 32;       // random restarts on top of one aligned start
  int max_iters = 1000;    // sweeps per restart
  double conv_tol = 1e-12;
  std::uint64_t seed = 1;
  int threads = 1;
};

// -log2 of the best product overlap found by alternating single-site
// optimization; an upper bound on the geometric measure, with the achieving
// product state as certificate.
MeasureValue geometric_measure(const StateVector& psi,
                               const GeoOptions& opts = {});

// --- polynomial-form measures ----------------------------------------------

// <psi x psi| P_1 x ... x P_n |psi x psi> via the subset-purity expansion
// 2^-n sum_S Tr(rho_S^2). Requires n <= kDensityCap.
double symmetric_projector_overlap(const StateVector& psi);

// Same quantity evaluated literally on the doubled space; n <= 5.
double symmetric_projector_overlap_doubled(const StateVector& psi);

// C = 2 sqrt(1 - symmetric_projector_overlap).
MeasureValue concurrence(const StateVector& psi);

// <psi| Y x...x Y |psi*>; defined for every n (the n-tangle squares it).
cplx y_tensor_overlap(const StateVector& psi);

// |<psi| Y^n |psi*>|^2, even n only.
MeasureValue n_tangle(const StateVector& psi);

// --- multipartite ------------------------------------------------------------

// Sum of subsystem von Neumann entropies; exact for pure states.
MeasureValue squashed_entanglement_pure(const StateVector& psi,
                                        const Partition& parts);

struct LocalizableOptions {
  int grid = 24;          // grid points per angle
  int refine_iters = 40;  // step-halving refinement passes
};

struct LocalizableResult {
  MeasureValue lower;  // best explicit measurement protocol found
  MeasureValue upper;  // min single-qubit entanglement entropy
  std::vector<std::pair<double, double>> angles;  // per measured qubit
};

// Non-adaptive single-qubit projective protocols on the qubits outside
// {i, j}; lower-bound search requires n <= 6.
LocalizableResult localizable_entanglement(const StateVector& psi, int i,
                                           int j,
                                           const LocalizableOptions& opts = {});

// The entropy side alone; any n within the statevector cap.
MeasureValue localizable_upper_bound(const StateVector& psi, int i, int j);

// Average entanglement of the explicit protocol with the given measurement
// bases (theta, phi) per qubit outside {i, j}.
double protocol_average_entanglement(
    const StateVector& psi, int i, int j,
    const std::vector<std::pair<double, double>>& angles);

// --- relative entropy --------------------------------------------------------

struct RelativeEntropyResult {
  MeasureValue bound;           // continuity bound at T = 2 eps
  std::optional<double> exact;  // S(rho || sigma), n <= kDensityCap only
  double t_used;
  double lambda_used;
};

// Upper bounds on the relative entropy of entanglement against the separable
// state sigma = (1-eps)|0><0|^n + eps M. Requires T(psi, |0>^n) <= eps.
RelativeEntropyResult relative_entropy_ub(const StateVector& psi,
                                          const EpsilonParams& eps);

// --- epsilon-measures --------------------------------------------------------

enum class BaseMeasure { SchmidtRankChi, EntanglementEntropy };

// Minimum of the base measure over explicit candidates within trace distance
// eps_ball of psi; an upper bound on the ball infimum.
MeasureValue epsilon_measure_ub(const StateVector& psi, double eps_ball,
                                BaseMeasure base, const Bipartition& a);

// --- witness measures ---------------------------------------------------------

// Hermitian operator on a subset of qubits, extended by identity elsewhere.
// Entanglement witnesses additionally have nonnegative expectation on every
// product state; spot-check with sampled_product_expectations.
class Witness {
 public:
  Witness(Eigen::MatrixXcd matrix, std::vector<int> support);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  const std::vector<int>& support() const { return support_; }
  double norm() const { return norm_; }

 private:
  Eigen::MatrixXcd m_;
  std::vector<int> support_;
  double norm_;
};

double witness_expectation(const StateVector& psi, const Witness& w);

// max(0, -max_W <psi|W|psi>) over the supplied family.
MeasureValue witness_measure(const StateVector& psi,
                             const std::vector<Witness>& family);

// (1/2)I - |Phi+><Phi+| on two qubits; operator norm 1/2.
Witness bell_witness(int q0, int q1);

// Minimum of <a|W|a> over `samples` random product states on the support.
double sampled_product_expectation_min(const Witness& w, std::uint64_t seed,
                                       int samples);

}  // namespace littlent
