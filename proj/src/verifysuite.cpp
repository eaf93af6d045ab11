#include "littlent/verifysuite.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "littlent/bounds.hpp"
#include "littlent/experiments.hpp"
#include "littlent/measures.hpp"
#include "littlent/parallel.hpp"
#include "littlent/rng.hpp"

namespace littlent {

namespace {

using nlohmann::json;

StateVector haar_state(int n, Rng& rng) {
  Eigen::VectorXcd v(Eigen::Index(1) << n);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = cplx(rng.next_normal(), rng.next_normal());
  return StateVector(n, v / v.norm());
}

Eigen::MatrixXcd random_density(int dim, Rng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      g(r, c) = cplx(rng.next_normal(), rng.next_normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::VectorXd lambda(dim);
  for (int i = 0; i < dim; ++i) {
    double x = rng.next_normal();
    lambda(i) = x * x;
  }
  lambda /= lambda.sum();
  return q * lambda.asDiagonal() * q.adjoint();
}

double density_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v > 1e-12) s -= xlog2x(v);
  }
  return s;
}

double density_trace_distance(const Eigen::MatrixXcd& rho,
                              const Eigen::MatrixXcd& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho - sigma,
                                                     Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

void inject_if_requested(SuiteResult& result, const VerifyConfig& cfg) {
  if (!cfg.inject_violation) return;
  BoundCheck fake = BoundCheck::make(1.0, 0.0, "injected violation (self-test)");
  result.record(fake.pass, json{{"context", fake.context},
                                {"lhs", fake.lhs},
                                {"rhs", fake.rhs}});
}

// Explicit doubled-space matrix of the per-site symmetric projectors for
// small n; used to cross-check the symbolic forms and their cached norms.
Eigen::MatrixXcd symmetric_projector_matrix(int n) {
  Eigen::Index dim = Eigen::Index(1) << (2 * n);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(dim, dim);
  for (int qubit = 0; qubit < n; ++qubit) {
    std::int64_t m1 = std::int64_t(1) << (2 * n - 1 - qubit);
    std::int64_t m2 = std::int64_t(1) << (n - 1 - qubit);
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      std::int64_t b1 = (idx & m1) ? 1 : 0;
      std::int64_t b2 = (idx & m2) ? 1 : 0;
      std::int64_t to = (idx & ~(m1 | m2)) | (b2 ? m1 : 0) | (b1 ? m2 : 0);
      swap(to, idx) = 1.0;
    }
    a = a * (0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + swap));
  }
  return a;
}

Eigen::MatrixXcd y_tensor_matrix(int n) {
  Eigen::MatrixXcd y(2, 2);
  y << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  Eigen::MatrixXcd a = y;
  for (int i = 1; i < n; ++i) {
    Eigen::MatrixXcd next(a.rows() * 2, a.cols() * 2);
    next.setZero();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = a(r, c) * y;
      }
    a = std::move(next);
  }
  return a;
}

}  // namespace

void SuiteResult::record(bool pass, const nlohmann::json& instance) {
  if (pass) {
    ++passed;
  } else {
    ++failed;
    if (failures.size() < 16) failures.push_back(instance);
  }
}

SuiteResult suite_fannes(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "fannes";
  result.params = {{"samples", cfg.samples}, {"seed", cfg.seed}};
  std::vector<std::pair<bool, json>> rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    Rng rng = Rng::substream(cfg.seed, std::uint64_t(i));
    int dim = 2 + int(rng.next_double() * 31.0);
    Eigen::MatrixXcd rho = random_density(dim, rng);
    Eigen::MatrixXcd sigma = random_density(dim, rng);
    double t = density_trace_distance(rho, sigma);
    if (t > 0.999 * kFannesRegime) {
      double s = 0.999 * kFannesRegime / t;
      sigma = (1.0 - s) * rho + s * sigma;
      t = density_trace_distance(rho, sigma);
    }
    double lhs = std::abs(density_entropy(rho) - density_entropy(sigma));
    BoundCheck check = BoundCheck::make(lhs, fannes_bound(t, dim), "fannes");
    rows[i] = {check.pass,
               json{{"sample", i}, {"dim", dim}, {"T", t},
                    {"lhs", check.lhs}, {"rhs", check.rhs}}};
  });
  for (auto& [pass, instance] : rows) result.record(pass, instance);
  inject_if_requested(result, cfg);
  return result;
}

SuiteResult suite_entropy_bound(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "entropy_bound";
  result.params = {{"samples", cfg.samples}, {"n", cfg.n}, {"eps", cfg.eps},
                   {"seed", cfg.seed}};
  auto splits = Bipartition::contiguous(cfg.n);
  std::vector<std::vector<std::pair<bool, json>>> rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    StateVector psi = sample_s_epsilon(cfg.n, cfg.eps, cfg.seed + i);
    for (const Bipartition& split : splits) {
      double entropy = entanglement_entropy(psi, split).value;
      BoundCheck check = BoundCheck::make(
          entropy, entropy_bound(cfg.eps, split.a_size()), "entropy bound");
      rows[i].push_back({check.pass,
                         json{{"sample", i}, {"split", split.label()},
                              {"lhs", check.lhs}, {"rhs", check.rhs}}});
    }
  });
  for (auto& sample_rows : rows)
    for (auto& [pass, instance] : sample_rows) result.record(pass, instance);
  inject_if_requested(result, cfg);
  return result;
}

SuiteResult suite_tensor_power(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "tensor_power";
  result.params = {{"samples", cfg.samples}, {"seed", cfg.seed}};
  const int ks[] = {2, 5, 20};
  std::vector<std::vector<std::pair<bool, json>>> rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    Rng rng = Rng::substream(cfg.seed, std::uint64_t(i) + 0x7e0);
    StateVector psi = haar_state(4, rng);
    StateVector phi = haar_state(4, rng);
    for (int k : ks) {
      TensorDistanceResult r = tensor_trace_distance(psi, phi, k);
      rows[i].push_back({r.check.pass,
                         json{{"sample", i}, {"k", k}, {"lhs", r.check.lhs},
                              {"rhs", r.check.rhs}}});
    }
  });
  for (auto& sample_rows : rows)
    for (auto& [pass, instance] : sample_rows) result.record(pass, instance);
  inject_if_requested(result, cfg);
  return result;
}

SuiteResult suite_polynomial(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "polynomial";
  result.params = {{"samples", cfg.samples}, {"seed", cfg.seed}};

  // Symbolic forms must agree with the literal operators at small n, and
  // their hard-coded norms with the computed operator norm.
  {
    PolynomialForm conc = PolynomialForm::concurrence_form();
    PolynomialForm tangle = PolynomialForm::n_tangle_form();
    Eigen::MatrixXcd proj = symmetric_projector_matrix(2);
    Eigen::MatrixXcd ytens = y_tensor_matrix(2);
    PolynomialForm conc_explicit =
        PolynomialForm::explicit_form(2, false, proj);
    PolynomialForm tangle_explicit =
        PolynomialForm::explicit_form(1, true, ytens);
    result.record(std::abs(conc.a_norm() - operator_norm(proj)) < 1e-10,
                  json{{"context", "symmetric projector norm"}});
    result.record(std::abs(tangle.a_norm() - operator_norm(ytens)) < 1e-10,
                  json{{"context", "Y tensor power norm"}});
    Rng rng = Rng::substream(cfg.seed, 0xa11);
    for (int i = 0; i < 8; ++i) {
      StateVector psi = haar_state(2, rng);
      bool conc_match =
          std::abs(conc.evaluate(psi) - conc_explicit.evaluate(psi)) < 1e-10;
      bool tangle_match =
          std::abs(tangle.evaluate(psi) - tangle_explicit.evaluate(psi)) <
          1e-10;
      result.record(conc_match, json{{"context", "f-form self-test"},
                                     {"sample", i}});
      result.record(tangle_match, json{{"context", "g-form self-test"},
                                       {"sample", i}});
    }
  }

  std::vector<std::vector<std::pair<bool, json>>> rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    Rng rng = Rng::substream(cfg.seed, std::uint64_t(i) + 0xf0);
    StateVector psi3 = haar_state(3, rng);
    StateVector phi3 = haar_state(3, rng);
    BoundCheck f_check = poly_continuity_check(
        PolynomialForm::concurrence_form(), psi3, phi3);
    rows[i].push_back({f_check.pass,
                       json{{"sample", i}, {"form", "concurrence f"},
                            {"lhs", f_check.lhs}, {"rhs", f_check.rhs}}});
    StateVector psi4 = haar_state(4, rng);
    StateVector phi4 = haar_state(4, rng);
    BoundCheck g_check =
        poly_continuity_check(PolynomialForm::n_tangle_form(), psi4, phi4);
    rows[i].push_back({g_check.pass,
                       json{{"sample", i}, {"form", "n-tangle g"},
                            {"lhs", g_check.lhs}, {"rhs", g_check.rhs}}});
  });
  for (auto& sample_rows : rows)
    for (auto& [pass, instance] : sample_rows) result.record(pass, instance);
  inject_if_requested(result, cfg);
  return result;
}

SuiteResult suite_witness(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "witness";
  result.params = {{"samples", cfg.samples}, {"n", cfg.n}, {"eps", cfg.eps},
                   {"seed", cfg.seed}};
  Witness w = bell_witness(0, 1);
  double product_min = sampled_product_expectation_min(w, cfg.seed, 200);
  result.record(product_min >= -1e-9,
                json{{"context", "witness product-state positivity"},
                     {"min", product_min}});
  std::vector<std::pair<bool, json>> rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    StateVector psi = sample_s_epsilon(cfg.n, cfg.eps, cfg.seed + i);
    BoundCheck check = witness_norm_check(w, psi, cfg.eps);
    rows[i] = {check.pass, json{{"sample", i}, {"lhs", check.lhs},
                                {"rhs", check.rhs}}};
  });
  for (auto& [pass, instance] : rows) result.record(pass, instance);
  inject_if_requested(result, cfg);
  return result;
}

SuiteResult suite_observation3(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "observation3";
  result.params = {{"samples", cfg.samples}, {"n", cfg.n}, {"eps", cfg.eps},
                   {"seed", cfg.seed}};
  const double eps = cfg.eps;
  auto splits = Bipartition::contiguous(cfg.n);
  const double alphas[] = {1.0, 1.5, 2.0};

  std::vector<std::vector<std::pair<bool, json>>> rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    auto& out = rows[i];
    auto check = [&](double lhs, double rhs, const char* what,
                     const json& extra = json::object()) {
      BoundCheck c = BoundCheck::make(lhs, rhs, what);
      json instance = extra;
      instance["sample"] = i;
      instance["context"] = what;
      instance["lhs"] = c.lhs;
      instance["rhs"] = c.rhs;
      out.push_back({c.pass, instance});
    };

    StateVector psi = sample_s_epsilon(cfg.n, eps, cfg.seed + i);

    // (a) Renyi entropies, alpha >= 1: both below the entropy bound and
    // below the von Neumann entropy.
    for (const Bipartition& split : splits) {
      std::vector<double> spec = schmidt_spectrum(psi, split);
      double vn = entropy_of_spectrum(spec);
      double bound = entropy_bound(eps, split.a_size());
      for (double alpha : alphas) {
        double renyi = renyi_entropy(spec, alpha);
        check(renyi, bound, "renyi vs entropy bound",
              json{{"alpha", alpha}, {"split", split.label()}});
        check(renyi, vn + 1e-12, "renyi vs von Neumann",
              json{{"alpha", alpha}, {"split", split.label()}});
      }
    }

    // (b) geometric measure
    GeoOptions geo;
    geo.restarts = 8;
    geo.seed = cfg.seed + 31 * i;
    double eg = geometric_measure(psi, geo).value;
    check(eg, -std::log2(std::sqrt(1.0 - eps * eps)), "geometric measure");

    // (d) squashed entanglement over singletons
    double squashed =
        squashed_entanglement_pure(psi, Partition::singletons(cfg.n)).value;
    check(squashed, cfg.n * entropy_bound(eps, 1), "squashed entanglement");

    // (e) localizable entanglement, entropy side
    for (int a = 0; a < cfg.n; ++a)
      for (int b = a + 1; b < cfg.n; ++b)
        check(localizable_upper_bound(psi, a, b).value, entropy_bound(eps, 1),
              "localizable upper bound",
              json{{"pair", std::to_string(a) + "," + std::to_string(b)}});

    // (f) multipartite concurrence
    if (cfg.n <= kDensityCap)
      check(concurrence(psi).value, 2.0 * std::sqrt(8.0 * eps), "concurrence");

    // (g) n-tangle through the g-form bound
    if (cfg.n % 2 == 0)
      check(n_tangle(psi).value, std::min(1.0, 64.0 * eps * eps), "n-tangle");
  });
  for (auto& sample_rows : rows)
    for (auto& [pass, instance] : sample_rows) result.record(pass, instance);

  // (c) relative entropy: exact vs the continuity bound needs density-scale
  // states.
  const int n_exact = std::min(cfg.n, 6);
  std::vector<std::pair<bool, json>> relent_rows(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](int i) {
    StateVector psi =
        sample_s_epsilon(n_exact, eps, cfg.seed + 7777 + i);
    RelativeEntropyResult r = relative_entropy_ub(psi, EpsilonParams(eps));
    bool pass = r.exact.has_value() &&
                *r.exact <= r.bound.value + kBoundSlackTol && *r.exact >= -1e-9;
    relent_rows[i] = {pass, json{{"sample", i},
                                 {"context", "relative entropy exact vs bound"},
                                 {"exact", r.exact ? *r.exact : -1.0},
                                 {"bound", r.bound.value}}};
  });
  for (auto& [pass, instance] : relent_rows) result.record(pass, instance);

  inject_if_requested(result, cfg);
  return result;
}

SuiteResult suite_counterexample(const VerifyConfig& cfg) {
  SuiteResult result;
  result.name = "counterexample";
  CounterexampleSpec spec(cfg.counterexample_m, cfg.counterexample_alpha);
  const double eps = spec.eps();
  result.params = {{"m", spec.m}, {"alpha", spec.alpha}, {"eps", eps}};

  StateVector psi = counterexample_state(spec);
  Bipartition half(2 * spec.m, [&] {
    std::vector<int> a(spec.m);
    for (int q = 0; q < spec.m; ++q) a[q] = q;
    return a;
  }());

  std::vector<double> spectrum = schmidt_spectrum(psi, half);
  double s_alpha = renyi_entropy(spectrum, spec.alpha);
  double s_one = entropy_of_spectrum(spectrum);
  double dist = trace_distance_pure(psi, zero_state(2 * spec.m));

  const double half_dim = std::exp2(double(spec.m)) - 1.0;
  double closed_form = 0.0;
  if (spec.alpha == 0.5)
    closed_form = 2.0 * std::log2(std::sqrt(1.0 - eps) +
                                  std::sqrt(eps * half_dim));
  else
    closed_form = std::log2(std::pow(1.0 - eps, spec.alpha) +
                            std::pow(half_dim, 1.0 - spec.alpha) *
                                std::pow(eps, spec.alpha)) /
                  (1.0 - spec.alpha);

  result.record(std::abs(s_alpha - closed_form) <= 1e-9,
                json{{"context", "S_alpha vs closed form"},
                     {"computed", s_alpha}, {"closed_form", closed_form}});
  result.record(std::abs(dist - std::sqrt(eps)) <= 1e-12,
                json{{"context", "trace distance vs sqrt(eps)"},
                     {"computed", dist}, {"expected", std::sqrt(eps)}});
  if (dist <= kFannesRegime) {
    double bound = entropy_bound(dist, spec.m);
    result.record(s_one <= bound + kBoundSlackTol,
                  json{{"context", "von Neumann entropy within its bound"},
                       {"S1", s_one}, {"bound", bound}});
    result.params["sub_one_renyi_exceeds_bound"] = s_alpha > bound;
  }
  if (spec.m == 10 && spec.alpha == 0.5)
    result.record(s_alpha >= 10.0 * s_one,
                  json{{"context", "S_1/2 >= 10 * S_1"},
                       {"S_half", s_alpha}, {"S1", s_one}});
  result.params["S_alpha"] = s_alpha;
  result.params["S_1"] = s_one;
  result.params["trace_distance"] = dist;

  inject_if_requested(result, cfg);
  return result;
}

std::vector<std::string> verify_suite_names() {
  return {"fannes",     "entropy_bound", "tensor_power",   "polynomial",
          "witness",    "observation3",  "counterexample"};
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "fannes") return suite_fannes(cfg);
  if (name == "entropy_bound") return suite_entropy_bound(cfg);
  if (name == "tensor_power") return suite_tensor_power(cfg);
  if (name == "polynomial") return suite_polynomial(cfg);
  if (name == "witness") return suite_witness(cfg);
  if (name == "observation3") return suite_observation3(cfg);
  if (name == "counterexample") return suite_counterexample(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

nlohmann::json verify_report(const std::vector<SuiteResult>& suites,
                             const VerifyConfig& cfg) {
  json j;
  j["schema"] = 1;
  j["seed"] = cfg.seed;
  bool all_pass = true;
  json arr = json::array();
  for (const SuiteResult& s : suites) {
    all_pass = all_pass && s.ok();
    json entry = {{"name", s.name},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"params", s.params}};
    if (!s.failures.empty()) entry["failures"] = s.failures;
    arr.push_back(entry);
  }
  j["suites"] = arr;
  j["all_pass"] = all_pass;
  return j;
}

}  // namespace littlent
