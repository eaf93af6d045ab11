#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "littlent/bounds.hpp"
#include "littlent/circuit.hpp"
#include "littlent/density.hpp"
#include "littlent/dilution.hpp"
#include "littlent/measures.hpp"

namespace littlent {

struct DecisionReport {
  double q_exact = 0.0;  // exact probability of outcome 1 on data qubit 0
  double q_hat = 0.0;
  double p_hat = 0.0;
  std::string decision;  // "p >= 2/3" | "p <= 1/3" | "inconclusive"
  long runs = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
};

// Dilutes c, computes the exact outcome distribution once, then draws N
// Bernoulli samples from it. audit re-runs the circuit for every draw
// instead; the draws are identical either way.
DecisionReport decision_experiment(const Circuit& c, const EpsilonParams& eps,
                                   long n_runs, std::uint64_t seed,
                                   bool audit = false, int threads = 1);

// Smallest N with 2 exp(-2 N t^2) <= fail_prob at t = eps/6:
// ceil(ln(2/fail_prob) * 18 / eps^2).
long required_runs(double eps, double fail_prob);

// Parameters of the near-trivial state whose sub-1 Renyi entanglement
// entropy scales with system size.
struct CounterexampleSpec {
  int m;         // half-system size
  double alpha;  // Renyi order in (0, 1)

  CounterexampleSpec(int m, double alpha);

  double beta() const { return (1.0 - alpha) / (2.0 * alpha); }
  double eps() const;  // 2^(-beta * m)
};

// sqrt(1-eps)|0,0> + sum_{x != 0} sqrt(eps/(2^m-1)) |x,x> on 2m qubits.
StateVector counterexample_state(const CounterexampleSpec& spec);

// Draws a state at an exactly known trace distance T' <= eps from |0>^n:
// sqrt(1-T'^2)|0>^n + T' * phase * |chi> with |chi> Haar-random orthogonal
// to |0>^n and T' uniform in [0, eps].
StateVector sample_s_epsilon(int n, double eps, std::uint64_t seed);

// eps|psi><psi| + (1-eps) I/2^n
DensityOperator pseudo_pure(const StateVector& psi, double eps);

// Convexity gives eps * E(psi) as an upper bound for any convex measure E on
// the pseudo-pure state.
double pseudo_pure_convex_bound(double measure_value, double eps);

struct StepTrace {
  int step = 0;
  double distance = 0.0;  // trace distance to |0>^n
  std::map<std::string, MeasureValue> measures;
  std::map<std::string, BoundCheck> bounds;
  std::map<std::string, std::string> errors;  // per-measure failures, in-band
};

struct TraceConfig {
  std::vector<Bipartition> bipartitions;
  std::vector<std::string> measures;  // entropy, renyi:<a>, schmidt_rank,
                                      // geometric, concurrence, n_tangle
  std::optional<EpsilonParams> eps_context;  // attaches radius-based bounds
  GeoOptions geo;
};

// Evaluates each requested measure and its continuity bound at every step of
// c run from |0>^n (step 0 included). Per-measure failures are recorded in
// the trace, not thrown.
std::vector<StepTrace> entanglement_trace(const Circuit& c,
                                          const TraceConfig& config);

}  // namespace littlent
