#include "littlent/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "littlent/parallel.hpp"
#include "littlent/rng.hpp"

namespace littlent {

namespace {

// Probability of measuring 1 on qubit 0.
double outcome_one_probability(const StateVector& s) {
  double q = 0.0;
  const auto& amps = s.amplitudes();
  for (std::int64_t idx = 0; idx < s.dim(); ++idx)
    if (s.qubit_bit(idx, 0)) q += std::norm(amps(idx));
  return q;
}

StateVector run_circuit(const Circuit& c) {
  StateVector state = zero_state(c.n);
  for (const GateInstance& g : c.gates) state = apply_gate(state, g);
  return state;
}

}  // namespace

DecisionReport decision_experiment(const Circuit& c, const EpsilonParams& eps,
                                   long n_runs, std::uint64_t seed, bool audit,
                                   int threads) {
  if (n_runs <= 0)
    throw std::invalid_argument("decision_experiment: need N > 0");
  DilutedCircuit d = dilute(c, eps);
  if (d.transformed.n > statevector_cap())
    throw cap_exceeded("decision_experiment: diluted circuit exceeds the "
                       "statevector cap");
  const double q_exact = outcome_one_probability(run_circuit(d.transformed));

  // Each run draws one Bernoulli sample from the exact outcome distribution;
  // audit mode re-executes the circuit per run instead of reusing it. The
  // uniform draws are identical either way.
  std::atomic<long> ones{0};
  parallel_for(int(n_runs), threads, [&](int i) {
    double q = audit
                   ? outcome_one_probability(run_circuit(d.transformed))
                   : q_exact;
    if (Rng::substream(seed, std::uint64_t(i)).next_double() < q)
      ones.fetch_add(1, std::memory_order_relaxed);
  });

  DecisionReport report;
  report.q_exact = q_exact;
  report.q_hat = double(ones.load()) / double(n_runs);
  report.p_hat = report.q_hat / eps.epsilon;
  report.runs = n_runs;
  report.seed = seed;
  report.epsilon = eps.epsilon;
  if (std::abs(report.p_hat - 0.5) < 1.0 / 12.0)
    report.decision = "inconclusive";
  else if (report.p_hat > 0.5)
    report.decision = "p >= 2/3";
  else
    report.decision = "p <= 1/3";
  return report;
}

long required_runs(double eps, double fail_prob) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("required_runs: eps must be in (0, 1]");
  if (!(fail_prob > 0.0) || fail_prob >= 1.0)
    throw std::invalid_argument("required_runs: fail_prob must be in (0, 1)");
  // Hoeffding at accuracy t = eps/6 in q: 2 exp(-2 N t^2) <= fail_prob.
  return long(std::ceil(std::log(2.0 / fail_prob) * 18.0 / (eps * eps)));
}

CounterexampleSpec::CounterexampleSpec(int m_in, double alpha_in)
    : m(m_in), alpha(alpha_in) {
  if (m < 1) throw std::invalid_argument("CounterexampleSpec: need m >= 1");
  if (!(alpha > 0.0) || alpha >= 1.0)
    throw std::invalid_argument("CounterexampleSpec: alpha must be in (0, 1)");
}

double CounterexampleSpec::eps() const {
  return std::exp2(-beta() * double(m));
}

StateVector counterexample_state(const CounterexampleSpec& spec) {
  const int n = 2 * spec.m;
  if (n > statevector_cap())
    throw cap_exceeded("counterexample_state: 2m exceeds the statevector cap");
  const double e = spec.eps();
  const std::int64_t half = std::int64_t(1) << spec.m;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(half * half);
  amps(0) = std::sqrt(1.0 - e);
  const double coeff = std::sqrt(e / double(half - 1));
  for (std::int64_t x = 1; x < half; ++x) amps((x << spec.m) | x) = coeff;
  return StateVector(n, std::move(amps));
}

StateVector sample_s_epsilon(int n, double eps, std::uint64_t seed) {
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("sample_s_epsilon: eps must be in [0, 1]");
  if (n > statevector_cap())
    throw cap_exceeded("sample_s_epsilon: n exceeds the statevector cap");
  Rng rng = Rng::substream(seed, 0);
  const std::int64_t dim = std::int64_t(1) << n;

  // Haar-random direction orthogonal to |0>^n.
  Eigen::VectorXcd chi(dim);
  chi(0) = 0.0;
  for (std::int64_t i = 1; i < dim; ++i)
    chi(i) = cplx(rng.next_normal(), rng.next_normal());
  double nm = chi.norm();
  if (nm < 1e-12) {
    chi.setZero();
    chi(std::min<std::int64_t>(1, dim - 1)) = 1.0;
    nm = 1.0;
  }
  chi /= nm;

  const double t = eps * rng.next_double();
  const cplx phase = std::exp(cplx(0.0, 2.0 * kPi * rng.next_double()));
  Eigen::VectorXcd amps = (t * phase) * chi;
  amps(0) += std::sqrt(1.0 - t * t);
  return StateVector(n, std::move(amps));
}

DensityOperator pseudo_pure(const StateVector& psi, double eps) {
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("pseudo_pure: eps must be in [0, 1]");
  const int n = psi.num_qubits();
  if (n > kDensityCap)
    throw cap_exceeded("pseudo_pure: n exceeds the density cap");
  const auto& a = psi.amplitudes();
  Eigen::Index dim = a.size();
  Eigen::MatrixXcd m = eps * (a * a.adjoint());
  m += ((1.0 - eps) / double(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
  return DensityOperator(n, std::move(m));
}

double pseudo_pure_convex_bound(double measure_value, double eps) {
  return eps * measure_value;
}

namespace {

struct MeasureSpecEntry {
  std::string name;
  bool per_bipartition;
  double alpha = 1.0;  // renyi only
};

MeasureSpecEntry parse_measure_name(const std::string& name) {
  if (name.rfind("renyi:", 0) == 0) {
    double alpha = std::stod(name.substr(6));
    return {name, true, alpha};
  }
  bool per_split = name == "entropy" || name == "schmidt_rank";
  return {name, per_split};
}

}  // namespace

std::vector<StepTrace> entanglement_trace(const Circuit& c,
                                          const TraceConfig& config) {
  if (c.n > statevector_cap())
    throw cap_exceeded("entanglement_trace: circuit exceeds the statevector "
                       "cap");
  std::optional<double> radius;
  if (config.eps_context) radius = config.eps_context->epsilon_bar;

  std::vector<MeasureSpecEntry> wanted;
  for (const std::string& name : config.measures)
    wanted.push_back(parse_measure_name(name));

  std::vector<StepTrace> out;
  StateVector zero = zero_state(c.n);
  StateVector state = zero;

  auto record = [&](int step) {
    StepTrace trace;
    trace.step = step;
    trace.distance = trace_distance_pure(state, zero);
    if (radius)
      trace.bounds["s_radius"] = BoundCheck::make(
          trace.distance, *radius, "per-step trace distance vs radius");

    auto add_bound = [&](const std::string& key, double lhs, double rhs,
                         const std::string& ctx) {
      trace.bounds[key] = BoundCheck::make(lhs, rhs, ctx);
    };

    for (const MeasureSpecEntry& spec : wanted) {
      try {
        if (spec.per_bipartition) {
          for (const Bipartition& split : config.bipartitions) {
            std::string key = spec.name + "@" + split.label();
            if (spec.name == "entropy") {
              MeasureValue v = entanglement_entropy(state, split);
              v.name = key;
              trace.measures[key] = v;
              if (radius)
                add_bound(key, v.value, entropy_bound(*radius, split.a_size()),
                          "entanglement entropy continuity");
            } else if (spec.name == "schmidt_rank") {
              SchmidtRank r = schmidt_rank(state, split);
              MeasureValue v;
              v.name = key;
              v.value = r.chi;
              v.kind = MeasureKind::Exact;
              trace.measures[key] = v;  // discrete; no continuity bound
            } else {  // renyi:<alpha>
              MeasureValue v;
              v.name = key;
              v.kind = MeasureKind::Exact;
              v.value =
                  renyi_entropy(schmidt_spectrum(state, split), spec.alpha);
              trace.measures[key] = v;
              if (radius && spec.alpha >= 1.0)
                add_bound(key, v.value, entropy_bound(*radius, split.a_size()),
                          "Renyi entropy continuity (alpha >= 1)");
            }
          }
        } else if (spec.name == "geometric") {
          GeoOptions geo = config.geo;
          MeasureValue v = geometric_measure(state, geo);
          v.name = spec.name;
          MeasureValue stored = v;
          stored.product_certificate.reset();  // keep traces compact
          trace.measures[spec.name] = stored;
          if (radius)
            add_bound(spec.name, v.value,
                      -std::log2(std::sqrt(1.0 - *radius * *radius)),
                      "geometric measure continuity");
        } else if (spec.name == "concurrence") {
          MeasureValue v = concurrence(state);
          trace.measures[spec.name] = v;
          if (radius)
            add_bound(spec.name, v.value, 2.0 * std::sqrt(8.0 * *radius),
                      "concurrence continuity");
        } else if (spec.name == "n_tangle") {
          MeasureValue v = n_tangle(state);
          trace.measures[spec.name] = v;
          if (radius)
            add_bound(spec.name, v.value,
                      std::min(1.0, 64.0 * *radius * *radius),
                      "n-tangle continuity");
        } else {
          throw std::invalid_argument("unknown measure '" + spec.name + "'");
        }
      } catch (const std::exception& e) {
        trace.errors[spec.name] = e.what();
      }
    }
    out.push_back(std::move(trace));
  };

  record(0);
  for (size_t i = 0; i < c.gates.size(); ++i) {
    state = apply_gate(state, c.gates[i]);
    record(int(i + 1));
  }
  return out;
}

}  // namespace littlent
