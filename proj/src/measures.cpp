#include "littlent/measures.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "littlent/parallel.hpp"
#include "littlent/rng.hpp"

namespace littlent {

namespace {

Eigen::Vector2cd random_bloch_site(Rng& rng) {
  Eigen::Vector2cd v;
  v(0) = cplx(rng.next_normal(), rng.next_normal());
  v(1) = cplx(rng.next_normal(), rng.next_normal());
  double nm = v.norm();
  if (nm < 1e-12) return Eigen::Vector2cd(1.0, 0.0);
  return v / nm;
}

// Measurement basis on the Bloch sphere: outcome 0 projects onto
// (cos(t/2), e^{i p} sin(t/2)), outcome 1 onto the orthogonal vector.
Eigen::Vector2cd bloch_basis_vector(double theta, double phi, int outcome) {
  double c = std::cos(theta / 2.0);
  double s = std::sin(theta / 2.0);
  cplx ph = std::exp(cplx(0.0, phi));
  if (outcome == 0) return Eigen::Vector2cd(c, ph * s);
  return Eigen::Vector2cd(s, -ph * c);
}

// Entropy across the (first|second) split of an unnormalized 2-qubit vector
// with squared norm p.
double two_qubit_entropy(const Eigen::Vector4cd& v, double p) {
  cplx det = (v(0) * v(3) - v(1) * v(2)) / p;
  double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * std::norm(det)));
  double hi = (1.0 + disc) / 2.0;
  double lo = (1.0 - disc) / 2.0;
  return -xlog2x(hi) - xlog2x(lo);
}

double subset_purity(const StateVector& psi, const std::vector<int>& subset) {
  if (subset.empty()) return 1.0;
  Eigen::MatrixXcd m = amplitude_matrix(psi, subset);
  return (m * m.adjoint()).squaredNorm();
}

}  // namespace

const char* measure_kind_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::Exact: return "exact";
    case MeasureKind::UpperBound: return "upper_bound";
    case MeasureKind::LowerBound: return "lower_bound";
  }
  return "?";
}

StateVector ProductState::to_state() const {
  const int n = int(sites.size());
  Eigen::VectorXcd amps(Eigen::Index(1) << n);
  for (std::int64_t idx = 0; idx < (std::int64_t(1) << n); ++idx) {
    cplx p = 1.0;
    for (int q = 0; q < n; ++q) p *= sites[q]((idx >> (n - 1 - q)) & 1);
    amps(idx) = p;
  }
  return StateVector(n, std::move(amps));
}

cplx ProductState::overlap_with(const StateVector& psi) const {
  const int n = psi.num_qubits();
  if (int(sites.size()) != n)
    throw std::invalid_argument("ProductState: site count mismatch");
  cplx total = 0.0;
  const auto& amps = psi.amplitudes();
  for (std::int64_t idx = 0; idx < psi.dim(); ++idx) {
    cplx p = amps(idx);
    for (int q = 0; q < n; ++q)
      p *= std::conj(sites[q]((idx >> (n - 1 - q)) & 1));
    total += p;
  }
  return total;
}

MeasureValue entanglement_entropy(const StateVector& psi,
                                  const Bipartition& a) {
  MeasureValue v;
  v.name = "entropy";
  v.value = entropy_of_spectrum(schmidt_spectrum(psi, a));
  v.kind = MeasureKind::Exact;
  return v;
}

double renyi_entropy(const std::vector<double>& spectrum, double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("renyi_entropy: alpha must be > 0");
  if (alpha == 1.0) return entropy_of_spectrum(spectrum);
  double sum = 0.0;
  for (double lambda : spectrum)
    if (lambda > 0.0) sum += std::pow(lambda, alpha);
  return std::max(0.0, std::log2(sum) / (1.0 - alpha));
}

SchmidtRank schmidt_rank(const StateVector& psi, const Bipartition& a,
                         double tol) {
  if (!(tol > 0.0) || tol >= 1.0)
    throw std::invalid_argument("schmidt_rank: tol must be in (0, 1)");
  std::vector<double> spec = schmidt_spectrum(psi, a);
  double top = spec.empty() ? 0.0 : spec.front();
  int rank = 0;
  for (double lambda : spec)
    if (lambda > tol * top) ++rank;
  rank = std::max(rank, 1);
  return {rank, std::log2(double(rank))};
}

// --- geometric measure -------------------------------------------------------

namespace {

struct GeoRun {
  double overlap = 0.0;
  std::vector<Eigen::Vector2cd> sites;
  bool converged = false;
};

GeoRun geometric_sweep(const StateVector& psi,
                       std::vector<Eigen::Vector2cd> sites, int max_iters,
                       double conv_tol) {
  const int n = psi.num_qubits();
  const auto& amps = psi.amplitudes();
  GeoRun run;
  run.sites = std::move(sites);
  double prev = 0.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    double ov = prev;
    for (int site = 0; site < n; ++site) {
      // Optimal site vector is the normalized partial contraction of psi
      // with the conjugated remaining sites.
      Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
      for (std::int64_t idx = 0; idx < psi.dim(); ++idx) {
        cplx p = amps(idx);
        for (int q = 0; q < n; ++q) {
          if (q == site) continue;
          p *= std::conj(run.sites[q]((idx >> (n - 1 - q)) & 1));
        }
        v(psi.qubit_bit(idx, site)) += p;
      }
      double nm = v.norm();
      if (nm > 1e-300) {
        run.sites[site] = v / nm;
        ov = nm;
      }
    }
    if (ov - prev < conv_tol) {
      run.overlap = ov;
      run.converged = true;
      return run;
    }
    prev = ov;
  }
  run.overlap = prev;
  return run;
}

}  // namespace

MeasureValue geometric_measure(const StateVector& psi, const GeoOptions& opts) {
  const int n = psi.num_qubits();
  const auto& amps = psi.amplitudes();

  // Restart 0 aligns with the dominant computational basis state; the rest
  // start from uniformly random product states.
  std::int64_t top_idx = 0;
  amps.cwiseAbs().maxCoeff(&top_idx);

  const int total = opts.restarts + 1;
  std::vector<GeoRun> runs(total);
  parallel_for(total, opts.threads, [&](int r) {
    std::vector<Eigen::Vector2cd> sites(n);
    if (r == 0) {
      for (int q = 0; q < n; ++q) {
        int b = int((top_idx >> (n - 1 - q)) & 1);
        sites[q] = Eigen::Vector2cd(b == 0 ? 1.0 : 0.0, b == 1 ? 1.0 : 0.0);
      }
    } else {
      Rng rng = Rng::substream(opts.seed, std::uint64_t(r));
      for (int q = 0; q < n; ++q) sites[q] = random_bloch_site(rng);
    }
    runs[r] = geometric_sweep(psi, std::move(sites), opts.max_iters,
                              opts.conv_tol);
  });

  int best = 0;
  for (int r = 1; r < total; ++r)
    if (runs[r].overlap > runs[best].overlap) best = r;

  MeasureValue v;
  v.name = "geometric";
  v.kind = MeasureKind::UpperBound;
  v.converged = runs[best].converged;
  double ov = std::min(1.0, runs[best].overlap);
  v.value = ov > 0.0 ? std::max(0.0, -std::log2(ov))
                     : std::numeric_limits<double>::infinity();
  v.product_certificate = ProductState{runs[best].sites};
  return v;
}

// --- polynomial-form measures ----------------------------------------------

double symmetric_projector_overlap(const StateVector& psi) {
  const int n = psi.num_qubits();
  if (n > kDensityCap)
    throw cap_exceeded("symmetric_projector_overlap: n exceeds density cap");
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int s = std::popcount(mask);
    if (2 * s > n) continue;  // complements carry equal purity
    double weight = 2 * s < n ? 2.0 : 1.0;
    std::vector<int> subset;
    for (int q = 0; q < n; ++q)
      if ((mask >> q) & 1) subset.push_back(q);
    total += weight * subset_purity(psi, subset);
  }
  return total / double(std::int64_t(1) << n);
}

double symmetric_projector_overlap_doubled(const StateVector& psi) {
  const int n = psi.num_qubits();
  if (n > 5)
    throw cap_exceeded("symmetric_projector_overlap_doubled: n > 5");
  const std::int64_t dim = psi.dim();
  const auto& a = psi.amplitudes();
  Eigen::VectorXcd doubled(dim * dim);
  for (std::int64_t x = 0; x < dim; ++x)
    for (std::int64_t y = 0; y < dim; ++y) doubled(x * dim + y) = a(x) * a(y);

  Eigen::VectorXcd phi = doubled;
  for (int q = 0; q < n; ++q) {
    // P_q = (I + SWAP_q)/2 with SWAP_q exchanging qubit q across the copies.
    const std::int64_t m1 = std::int64_t(1) << (2 * n - 1 - q);
    const std::int64_t m2 = std::int64_t(1) << (n - 1 - q);
    Eigen::VectorXcd next(dim * dim);
    for (std::int64_t idx = 0; idx < dim * dim; ++idx) {
      std::int64_t b1 = (idx & m1) ? 1 : 0;
      std::int64_t b2 = (idx & m2) ? 1 : 0;
      std::int64_t swapped = (idx & ~(m1 | m2)) | (b2 ? m1 : 0) | (b1 ? m2 : 0);
      next(idx) = 0.5 * (phi(idx) + phi(swapped));
    }
    phi = std::move(next);
  }
  return doubled.dot(phi).real();
}

MeasureValue concurrence(const StateVector& psi) {
  MeasureValue v;
  v.name = "concurrence";
  v.kind = MeasureKind::Exact;
  double f = symmetric_projector_overlap(psi);
  v.value = 2.0 * std::sqrt(std::max(0.0, 1.0 - f));
  return v;
}

cplx y_tensor_overlap(const StateVector& psi) {
  const int n = psi.num_qubits();
  const std::int64_t dim = psi.dim();
  const std::int64_t full = dim - 1;
  const auto& a = psi.amplitudes();
  cplx i_pow_n;
  switch (n % 4) {
    case 0: i_pow_n = {1, 0}; break;
    case 1: i_pow_n = {0, 1}; break;
    case 2: i_pow_n = {-1, 0}; break;
    default: i_pow_n = {0, -1}; break;
  }
  cplx g = 0.0;
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::int64_t comp = full ^ idx;
    double sign = std::popcount(std::uint64_t(comp)) % 2 == 0 ? 1.0 : -1.0;
    g += std::conj(a(idx)) * std::conj(a(comp)) * sign;
  }
  return i_pow_n * g;
}

MeasureValue n_tangle(const StateVector& psi) {
  if (psi.num_qubits() % 2 != 0)
    throw std::domain_error("n_tangle: defined for even qubit counts only");
  MeasureValue v;
  v.name = "n_tangle";
  v.kind = MeasureKind::Exact;
  v.value = std::norm(y_tensor_overlap(psi));
  return v;
}

// --- multipartite ------------------------------------------------------------

MeasureValue squashed_entanglement_pure(const StateVector& psi,
                                        const Partition& parts) {
  if (parts.num_qubits() != psi.num_qubits())
    throw std::invalid_argument(
        "squashed_entanglement_pure: qubit counts differ");
  MeasureValue v;
  v.name = "squashed";
  v.kind = MeasureKind::Exact;
  for (const auto& part : parts.parts()) {
    if (int(part.size()) == psi.num_qubits()) continue;  // pure, entropy 0
    Bipartition split(psi.num_qubits(), part);
    v.value += entropy_of_spectrum(schmidt_spectrum(psi, split));
  }
  return v;
}

double protocol_average_entanglement(
    const StateVector& psi, int i, int j,
    const std::vector<std::pair<double, double>>& angles) {
  const int n = psi.num_qubits();
  std::vector<int> measured;
  for (int q = 0; q < n; ++q)
    if (q != i && q != j) measured.push_back(q);
  if (angles.size() != measured.size())
    throw std::invalid_argument("protocol: angle count mismatch");

  const int nm = int(measured.size());
  const auto& amps = psi.amplitudes();
  std::vector<std::array<Eigen::Vector2cd, 2>> basis(nm);
  for (int k = 0; k < nm; ++k) {
    basis[k][0] = bloch_basis_vector(angles[k].first, angles[k].second, 0);
    basis[k][1] = bloch_basis_vector(angles[k].first, angles[k].second, 1);
  }

  double total = 0.0;
  for (std::int64_t mu = 0; mu < (std::int64_t(1) << nm); ++mu) {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    for (std::int64_t idx = 0; idx < psi.dim(); ++idx) {
      cplx w = amps(idx);
      for (int k = 0; k < nm; ++k) {
        int outcome = int((mu >> (nm - 1 - k)) & 1);
        w *= std::conj(basis[k][outcome](psi.qubit_bit(idx, measured[k])));
      }
      v((psi.qubit_bit(idx, i) << 1) | psi.qubit_bit(idx, j)) += w;
    }
    double p = v.squaredNorm();
    if (p < 1e-15) continue;
    total += p * two_qubit_entropy(v, p);
  }
  return total;
}

MeasureValue localizable_upper_bound(const StateVector& psi, int i, int j) {
  const int n = psi.num_qubits();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("localizable: bad qubit pair");
  double ei = entropy_of_spectrum(schmidt_spectrum(psi, Bipartition(n, {i})));
  double ej = entropy_of_spectrum(schmidt_spectrum(psi, Bipartition(n, {j})));
  MeasureValue v;
  v.name = "localizable_upper";
  v.kind = MeasureKind::UpperBound;
  v.value = std::min(ei, ej);
  return v;
}

LocalizableResult localizable_entanglement(const StateVector& psi, int i,
                                           int j,
                                           const LocalizableOptions& opts) {
  const int n = psi.num_qubits();
  if (n > 6)
    throw cap_exceeded("localizable_entanglement: lower-bound search needs "
                       "n <= 6");
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("localizable: bad qubit pair");

  const int nm = n - 2;
  std::vector<std::pair<double, double>> angles(nm, {0.0, 0.0});
  auto eval = [&] { return protocol_average_entanglement(psi, i, j, angles); };

  double best = eval();
  const int g = std::max(2, opts.grid);
  // Coordinate-wise grid search, one measured qubit at a time.
  for (int sweep = 0; sweep < 5; ++sweep) {
    double before = best;
    for (int k = 0; k < nm; ++k) {
      auto saved = angles[k];
      auto best_angle = saved;
      for (int ti = 0; ti < g; ++ti) {
        for (int pi = 0; pi < g; ++pi) {
          angles[k] = {kPi * ti / (g - 1), 2.0 * kPi * pi / g};
          double val = eval();
          if (val > best) {
            best = val;
            best_angle = angles[k];
          }
        }
      }
      angles[k] = best_angle;
    }
    if (best - before < 1e-12) break;
  }
  // Step-halving refinement around the grid optimum.
  double step_t = kPi / (g - 1);
  double step_p = 2.0 * kPi / g;
  for (int iter = 0; iter < opts.refine_iters; ++iter) {
    for (int k = 0; k < nm; ++k) {
      for (int dim = 0; dim < 2; ++dim) {
        double step = dim == 0 ? step_t : step_p;
        for (double delta : {step, -step}) {
          auto saved = angles[k];
          if (dim == 0)
            angles[k].first += delta;
          else
            angles[k].second += delta;
          double val = eval();
          if (val > best)
            best = val;
          else
            angles[k] = saved;
        }
      }
    }
    step_t *= 0.5;
    step_p *= 0.5;
  }

  LocalizableResult result;
  result.lower.name = "localizable_lower";
  result.lower.kind = MeasureKind::LowerBound;
  result.lower.value = best;
  result.lower.certificate_note = "non-adaptive single-qubit protocol";
  result.upper = localizable_upper_bound(psi, i, j);
  result.angles = angles;
  return result;
}

// --- relative entropy ---------------------------------------------------------

RelativeEntropyResult relative_entropy_ub(const StateVector& psi,
                                          const EpsilonParams& eps) {
  const int n = psi.num_qubits();
  const double e0 = eps.epsilon;
  double dist = trace_distance_pure(psi, zero_state(n));
  if (dist > e0 + 1e-9)
    throw std::domain_error(
        "relative_entropy_ub: state lies outside the eps-ball around |0>^n");
  const double t = 2.0 * e0;
  if (-2.0 * t * std::log2(2.0 * t) > 1.0 / std::exp(1.0) + 1e-12)
    throw std::domain_error(
        "relative_entropy_ub: -2T log2(2T) exceeds 1/e at T = 2 eps");
  const double lambda = e0 / double(std::int64_t(1) << n);

  RelativeEntropyResult out;
  out.t_used = t;
  out.lambda_used = lambda;
  out.bound.name = "relative_entropy";
  out.bound.kind = MeasureKind::UpperBound;
  out.bound.value =
      2.0 * n * t - 2.0 * t * std::log2(2.0 * t) - t * std::log2(lambda);
  out.bound.certificate_note =
      "sigma = (1-eps)|0><0|^n + eps I/2^n, T = 2 eps";

  if (n <= kDensityCap) {
    Eigen::Index dim = Eigen::Index(1) << n;
    Eigen::MatrixXcd sigma =
        (e0 / double(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
    sigma(0, 0) += 1.0 - e0;
    // rho is pure, so S(rho||sigma) = -<psi| log2 sigma |psi>.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma);
    Eigen::VectorXd logs = es.eigenvalues().array().log2();
    Eigen::MatrixXcd log_sigma = es.eigenvectors() * logs.asDiagonal() *
                                 es.eigenvectors().adjoint();
    out.exact = -psi.amplitudes().dot(log_sigma * psi.amplitudes()).real();
  }
  return out;
}

// --- epsilon-measures ----------------------------------------------------------

MeasureValue epsilon_measure_ub(const StateVector& psi, double eps_ball,
                                BaseMeasure base, const Bipartition& a) {
  if (eps_ball < 0.0)
    throw std::invalid_argument("epsilon_measure_ub: negative ball radius");
  auto base_eval = [&](const StateVector& s) {
    switch (base) {
      case BaseMeasure::SchmidtRankChi: return schmidt_rank(s, a).chi;
      case BaseMeasure::EntanglementEntropy:
        return entropy_of_spectrum(schmidt_spectrum(s, a));
    }
    return 0.0;
  };

  MeasureValue v;
  v.name = base == BaseMeasure::SchmidtRankChi ? "epsilon_chi"
                                               : "epsilon_entropy";
  v.kind = MeasureKind::UpperBound;
  v.value = base_eval(psi);
  v.certificate_note = "state itself";

  const double tol = eps_ball + 1e-12;
  auto consider = [&](const StateVector& cand, const char* note,
                      std::optional<ProductState> prod) {
    if (trace_distance_pure(psi, cand) > tol) return;
    double val = base_eval(cand);
    if (val < v.value) {
      v.value = val;
      v.certificate_note = note;
      v.product_certificate = std::move(prod);
    }
  };

  const int n = psi.num_qubits();
  ProductState zero_prod;
  zero_prod.sites.assign(n, Eigen::Vector2cd(1.0, 0.0));
  consider(zero_state(n), "zero state", zero_prod);

  MeasureValue geo = geometric_measure(psi);
  if (geo.product_certificate)
    consider(geo.product_certificate->to_state(), "product certificate",
             geo.product_certificate);
  return v;
}

// --- witness measures -----------------------------------------------------------

Witness::Witness(Eigen::MatrixXcd matrix, std::vector<int> support)
    : m_(std::move(matrix)), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  if (support_.empty() ||
      std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw std::invalid_argument("Witness: support must be distinct qubits");
  Eigen::Index dim = Eigen::Index(1) << support_.size();
  if (m_.rows() != dim || m_.cols() != dim)
    throw std::invalid_argument("Witness: matrix/support size mismatch");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("Witness: matrix is not Hermitian");
  norm_ = operator_norm(m_);
}

double witness_expectation(const StateVector& psi, const Witness& w) {
  const int n = psi.num_qubits();
  for (int q : w.support())
    if (q >= n)
      throw std::invalid_argument("witness_expectation: support out of range");
  if (int(w.support().size()) == n)
    return psi.amplitudes().dot(w.matrix() * psi.amplitudes()).real();
  DensityOperator rho =
      reduced_density(psi, Bipartition(n, w.support()));
  return (w.matrix() * rho.matrix()).trace().real();
}

MeasureValue witness_measure(const StateVector& psi,
                             const std::vector<Witness>& family) {
  if (family.empty())
    throw std::invalid_argument("witness_measure: empty family");
  double worst = -std::numeric_limits<double>::infinity();
  for (const Witness& w : family)
    worst = std::max(worst, -witness_expectation(psi, w));
  MeasureValue v;
  v.name = "witness";
  v.kind = MeasureKind::Exact;
  v.value = std::max(0.0, worst);
  return v;
}

Witness bell_witness(int q0, int q1) {
  Eigen::Vector4cd phi_plus;
  phi_plus << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd w = 0.5 * Eigen::MatrixXcd::Identity(4, 4) -
                       phi_plus * phi_plus.adjoint();
  return Witness(std::move(w), {q0, q1});
}

double sampled_product_expectation_min(const Witness& w, std::uint64_t seed,
                                       int samples) {
  const int s = int(w.support().size());
  double min_val = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::substream(seed, std::uint64_t(k));
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (int q = 0; q < s; ++q) {
      Eigen::Vector2cd site = random_bloch_site(rng);
      Eigen::VectorXcd next(v.size() * 2);
      for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
        next(2 * idx) = v(idx) * site(0);
        next(2 * idx + 1) = v(idx) * site(1);
      }
      v = std::move(next);
    }
    min_val = std::min(min_val, v.dot(w.matrix() * v).real());
  }
  return min_val;
}

}  // namespace littlent
