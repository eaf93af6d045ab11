#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "littlent/experiments.hpp"
#include "littlent/measures.hpp"

using namespace littlent;
using testutil::bell_state;
using testutil::ghz_state;
using testutil::haar_state;

namespace {

std::vector<double> random_spectrum(int size, Rng& rng) {
  std::vector<double> out(size);
  double sum = 0.0;
  for (double& v : out) {
    double x = rng.next_normal();
    v = x * x;
    sum += v;
  }
  for (double& v : out) v /= sum;
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Best GHZ_3 product overlap over the real slice, on a theta grid. Phases
// only hurt the GHZ overlap; a random search below confirms that.
double ghz3_grid_max_overlap(double step) {
  double best = 0.0;
  for (double t0 = 0.0; t0 < 2.0 * kPi; t0 += step)
    for (double t1 = 0.0; t1 < 2.0 * kPi; t1 += step)
      for (double t2 = 0.0; t2 < 2.0 * kPi; t2 += step) {
        double c = std::cos(t0 / 2) * std::cos(t1 / 2) * std::cos(t2 / 2);
        double s = std::sin(t0 / 2) * std::sin(t1 / 2) * std::sin(t2 / 2);
        best = std::max(best, std::abs(c + s) / std::sqrt(2.0));
      }
  return best;
}

}  // namespace

TEST_CASE("entanglement entropy") {
  CHECK(entanglement_entropy(make_basis_state(3, "101"), Bipartition(3, {1}))
            .value == 0.0);
  CHECK(std::abs(entanglement_entropy(bell_state(), Bipartition(2, {0})).value -
                 1.0) < 1e-12);
  // symmetric in A <-> B
  Rng rng(3);
  StateVector psi = haar_state(5, rng);
  Bipartition split(5, {0, 2});
  CHECK(std::abs(entanglement_entropy(psi, split).value -
                 entanglement_entropy(psi, Bipartition(5, split.b_side()))
                     .value) < 1e-10);
}

TEST_CASE("renyi entropy") {
  SUBCASE("uniform spectrum gives m for every alpha") {
    std::vector<double> uniform(8, 1.0 / 8.0);
    for (double alpha : {0.3, 0.5, 1.0, 1.5, 2.0, 3.0})
      CHECK(std::abs(renyi_entropy(uniform, alpha) - 3.0) < 1e-12);
  }
  SUBCASE("bell spectrum at alpha 2") {
    CHECK(std::abs(renyi_entropy({0.5, 0.5}, 2.0) - 1.0) < 1e-12);
  }
  SUBCASE("near-trivial spectrum with large sub-1 entropy") {
    const int m = 10;
    const double eps = std::exp2(-5.0);
    std::vector<double> spec{1.0 - eps};
    for (int i = 1; i < (1 << m); ++i)
      spec.push_back(eps / double((1 << m) - 1));
    CHECK(std::abs(renyi_entropy(spec, 0.5) - 5.461646098697514) < 1e-9);
    CHECK(std::abs(entropy_of_spectrum(spec) - 0.5130782752422562) < 1e-9);
  }
  SUBCASE("rejects alpha <= 0") {
    CHECK_THROWS_AS(renyi_entropy({1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(renyi_entropy({1.0}, -1.0), std::invalid_argument);
  }
  SUBCASE("nonincreasing in alpha") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      auto spec = random_spectrum(6, rng);
      double prev = renyi_entropy(spec, 0.3);
      for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        double cur = renyi_entropy(spec, alpha);
        CHECK(cur <= prev + 1e-10);
        prev = cur;
      }
    }
  }
  SUBCASE("continuous at alpha = 1") {
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
      auto spec = random_spectrum(6, rng);
      double s1 = renyi_entropy(spec, 1.0);
      CHECK(std::abs(renyi_entropy(spec, 1.0 + 1e-4) - s1) <= 1e-3);
      CHECK(std::abs(renyi_entropy(spec, 1.0 - 1e-4) - s1) <= 1e-3);
    }
  }
  SUBCASE("renyi at alpha >= 1 never exceeds the entanglement entropy") {
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
      StateVector psi = haar_state(4, rng);
      for (const auto& split : Bipartition::contiguous(4)) {
        auto spec = schmidt_spectrum(psi, split);
        double vn = entropy_of_spectrum(spec);
        for (double alpha : {1.5, 2.0, 3.0})
          CHECK(renyi_entropy(spec, alpha) <= vn + 1e-10);
      }
    }
  }
}

TEST_CASE("schmidt rank") {
  auto product = schmidt_rank(make_basis_state(2, "01"), Bipartition(2, {0}));
  CHECK(product.rank == 1);
  CHECK(product.chi == 0.0);
  auto bell = schmidt_rank(bell_state(), Bipartition(2, {0}));
  CHECK(bell.rank == 2);
  CHECK(bell.chi == 1.0);
  CHECK_THROWS_AS(schmidt_rank(bell_state(), Bipartition(2, {0}), 0.0),
                  std::invalid_argument);
}

TEST_CASE("geometric measure") {
  SUBCASE("product states sit at zero") {
    GeoOptions opts;
    opts.restarts = 4;
    CHECK(geometric_measure(make_basis_state(3, "011"), opts).value < 1e-9);
  }
  SUBCASE("ghz3 against a grid oracle") {
    double grid_max = ghz3_grid_max_overlap(0.02);
    const double target = 1.0 / std::sqrt(2.0);
    CHECK(grid_max <= target + 1e-12);
    CHECK(grid_max >= target - 1e-3);

    Rng rng(8);
    double random_max = 0.0;
    for (int i = 0; i < 100000; ++i) {
      ProductState p;
      for (int q = 0; q < 3; ++q) {
        Eigen::Vector2cd site(cplx(rng.next_normal(), rng.next_normal()),
                              cplx(rng.next_normal(), rng.next_normal()));
        p.sites.push_back(site / site.norm());
      }
      random_max =
          std::max(random_max, std::abs(p.overlap_with(ghz_state(3))));
    }
    CHECK(random_max <= target + 1e-12);

    GeoOptions opts;
    opts.restarts = 8;
    MeasureValue found = geometric_measure(ghz_state(3), opts);
    CHECK(std::abs(found.value - 0.5) < 1e-9);
    CHECK(found.kind == MeasureKind::UpperBound);
  }
  SUBCASE("states near |0>^n stay under the overlap bound") {
    const double eps = 0.05;
    for (int i = 0; i < 5; ++i) {
      StateVector psi = sample_s_epsilon(6, eps, 40 + i);
      GeoOptions opts;
      opts.restarts = 4;
      CHECK(geometric_measure(psi, opts).value <=
            -std::log2(std::sqrt(1.0 - eps * eps)) + 1e-9);
    }
  }
  SUBCASE("certificate is a valid product state achieving the value") {
    Rng rng(9);
    StateVector psi = haar_state(4, rng);
    GeoOptions opts;
    opts.restarts = 6;
    MeasureValue v = geometric_measure(psi, opts);
    REQUIRE(v.product_certificate.has_value());
    for (const auto& site : v.product_certificate->sites)
      CHECK(std::abs(site.norm() - 1.0) < 1e-12);
    double overlap_mag = std::abs(v.product_certificate->overlap_with(psi));
    CHECK(std::abs(-std::log2(overlap_mag) - v.value) < 1e-9);
  }
}

TEST_CASE("concurrence") {
  GeoOptions unused;
  CHECK(concurrence(make_basis_state(3, "010")).value < 1e-9);

  // Bell: subset purities 1, 1/2, 1/2, 1 give f = 3/4 and C = 1.
  CHECK(std::abs(symmetric_projector_overlap(bell_state()) - 0.75) < 1e-12);
  CHECK(std::abs(concurrence(bell_state()).value - 1.0) < 1e-12);

  SUBCASE("subset-purity route equals the doubled-space evaluation") {
    Rng rng(10);
    for (int n = 2; n <= 4; ++n)
      for (int i = 0; i < 10; ++i) {
        StateVector psi = haar_state(n, rng);
        CHECK(std::abs(symmetric_projector_overlap(psi) -
                       symmetric_projector_overlap_doubled(psi)) < 1e-10);
      }
  }
  SUBCASE("stays within the continuity bound near |0>^n") {
    const double eps = 0.01;
    for (int i = 0; i < 5; ++i) {
      StateVector psi = sample_s_epsilon(5, eps, 90 + i);
      CHECK(concurrence(psi).value <= 2.0 * std::sqrt(8.0 * eps) + 1e-9);
    }
  }
}

TEST_CASE("n-tangle") {
  CHECK(n_tangle(zero_state(4)).value == 0.0);
  CHECK(std::abs(n_tangle(bell_state()).value - 1.0) < 1e-12);
  CHECK(std::abs(n_tangle(ghz_state(4)).value - 1.0) < 1e-12);
  CHECK(std::abs(n_tangle(ghz_state(6)).value - 1.0) < 1e-12);
  CHECK_THROWS_AS(n_tangle(zero_state(3)), std::domain_error);
}

TEST_CASE("squashed entanglement") {
  CHECK(squashed_entanglement_pure(make_basis_state(3, "110"),
                                   Partition::singletons(3))
            .value < 1e-12);
  CHECK(std::abs(squashed_entanglement_pure(bell_state(),
                                            Partition(2, {{0}, {1}}))
                     .value -
                 2.0) < 1e-12);
}

TEST_CASE("localizable entanglement") {
  SUBCASE("product state") {
    auto r = localizable_entanglement(make_basis_state(3, "000"), 0, 1);
    CHECK(r.lower.value < 1e-9);
    CHECK(r.upper.value < 1e-9);
  }
  SUBCASE("explicit X-basis protocol concentrates a full unit on ghz3") {
    double avg = protocol_average_entanglement(ghz_state(3), 0, 1,
                                               {{kPi / 2.0, 0.0}});
    CHECK(std::abs(avg - 1.0) < 1e-12);
  }
  SUBCASE("ghz3 search finds the X protocol") {
    auto r = localizable_entanglement(ghz_state(3), 0, 1);
    CHECK(r.lower.value >= 0.99);
    CHECK(std::abs(r.upper.value - 1.0) < 1e-9);
  }
  SUBCASE("decoupled spectator leaves a bell pair exact") {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v(0) = 1.0 / std::sqrt(2.0);  // |000>
    v(6) = 1.0 / std::sqrt(2.0);  // |110>
    StateVector bell_x_zero(3, std::move(v));
    auto r = localizable_entanglement(bell_x_zero, 0, 1);
    CHECK(std::abs(r.lower.value - 1.0) < 1e-9);
    CHECK(std::abs(r.upper.value - 1.0) < 1e-9);
  }
  SUBCASE("lower never exceeds upper") {
    Rng rng(12);
    LocalizableOptions fast;
    fast.grid = 10;
    fast.refine_iters = 20;
    for (int i = 0; i < 5; ++i) {
      StateVector psi = haar_state(4, rng);
      auto r = localizable_entanglement(psi, 0, 2, fast);
      CHECK(r.lower.value <= r.upper.value + 1e-9);
    }
  }
  SUBCASE("cap on the search size") {
    CHECK_THROWS_AS(localizable_entanglement(zero_state(7), 0, 1),
                    cap_exceeded);
    CHECK(localizable_upper_bound(zero_state(7), 0, 1).value == 0.0);
  }
}

TEST_CASE("relative entropy bounds") {
  SUBCASE("exact value at |0>^n") {
    const double eps = 0.01;
    auto r = relative_entropy_ub(zero_state(4), EpsilonParams(eps));
    REQUIRE(r.exact.has_value());
    double expected = -std::log2((1.0 - eps) + eps / 16.0);
    CHECK(std::abs(*r.exact - expected) < 1e-10);
  }
  SUBCASE("frozen bound arithmetic at n = 8") {
    auto r = relative_entropy_ub(zero_state(8), EpsilonParams(0.005));
    CHECK(std::abs(r.bound.value - 0.4293156856932417) < 1e-12);
    CHECK(r.t_used == 0.01);
    CHECK(std::abs(r.lambda_used - 0.005 / 256.0) < 1e-18);
  }
  SUBCASE("exact never exceeds the bound on sampled states") {
    const double eps = 0.01;
    for (int i = 0; i < 50; ++i) {
      StateVector psi = sample_s_epsilon(6, eps, 1000 + i);
      auto r = relative_entropy_ub(psi, EpsilonParams(eps));
      REQUIRE(r.exact.has_value());
      CHECK(*r.exact >= -1e-9);
      CHECK(*r.exact <= r.bound.value + 1e-9);
    }
  }
  SUBCASE("out-of-ball states are rejected") {
    CHECK_THROWS_AS(
        relative_entropy_ub(make_basis_state(2, "11"), EpsilonParams(0.01)),
        std::domain_error);
  }
}

TEST_CASE("epsilon measures") {
  SUBCASE("states near |0>^n have zero rank measure") {
    StateVector psi = sample_s_epsilon(4, 0.1, 4242);
    MeasureValue v = epsilon_measure_ub(psi, 0.1, BaseMeasure::SchmidtRankChi,
                                        Bipartition(4, {0, 1}));
    CHECK(v.value == 0.0);
    CHECK(v.certificate_note == "zero state");
    CHECK(v.kind == MeasureKind::UpperBound);
  }
  SUBCASE("zero-radius ball degenerates to the base measure") {
    MeasureValue v = epsilon_measure_ub(bell_state(), 0.0,
                                        BaseMeasure::SchmidtRankChi,
                                        Bipartition(2, {0}));
    CHECK(v.value == 1.0);
    CHECK(v.certificate_note == "state itself");
  }
  SUBCASE("bell state keeps rank 2 in a small ball") {
    MeasureValue v = epsilon_measure_ub(bell_state(), 0.1,
                                        BaseMeasure::SchmidtRankChi,
                                        Bipartition(2, {0}));
    CHECK(v.value == 1.0);
  }
  SUBCASE("entropy base") {
    StateVector psi = sample_s_epsilon(4, 0.05, 77);
    MeasureValue v = epsilon_measure_ub(
        psi, 0.05, BaseMeasure::EntanglementEntropy, Bipartition(4, {0}));
    CHECK(v.value == 0.0);
  }
}

TEST_CASE("witness measures") {
  Witness w = bell_witness(0, 1);
  CHECK(std::abs(w.norm() - 0.5) < 1e-12);

  SUBCASE("product state expectation vanishes for |00>") {
    CHECK(std::abs(witness_expectation(make_basis_state(2, "00"), w)) < 1e-12);
    CHECK(witness_measure(make_basis_state(2, "00"), {w}).value == 0.0);
  }
  SUBCASE("bell state is detected") {
    CHECK(std::abs(witness_expectation(bell_state(), w) + 0.5) < 1e-12);
    CHECK(std::abs(witness_measure(bell_state(), {w}).value - 0.5) < 1e-12);
  }
  SUBCASE("embedded support on a larger register") {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v(0) = 1.0 / std::sqrt(2.0);  // |000>
    v(6) = 1.0 / std::sqrt(2.0);  // |110>
    StateVector bell_x_zero(3, std::move(v));
    CHECK(std::abs(witness_expectation(bell_x_zero, w) + 0.5) < 1e-12);
    // rho_{01} of GHZ is the classical |00>/|11> mixture, not detected
    CHECK(std::abs(witness_expectation(ghz_state(4), w)) < 1e-12);
  }
  SUBCASE("witness property holds on sampled product states") {
    CHECK(sampled_product_expectation_min(w, 7, 500) >= -1e-9);
  }
  SUBCASE("sampled states obey the norm bound") {
    const double eps = 0.05;
    for (int i = 0; i < 10; ++i) {
      StateVector psi = sample_s_epsilon(2, eps, 300 + i);
      CHECK(witness_measure(psi, {w}).value <= 2.0 * eps * w.norm() + 1e-9);
    }
  }
  SUBCASE("rejects non-Hermitian members") {
    Eigen::MatrixXcd bad(2, 2);
    bad << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(Witness(bad, {0}), std::invalid_argument);
  }
  SUBCASE("empty family is rejected") {
    CHECK_THROWS_AS(witness_measure(bell_state(), {}), std::invalid_argument);
  }
}

TEST_CASE("every measure vanishes on |0>^n") {
  StateVector zero = zero_state(4);
  for (const auto& split : Bipartition::contiguous(4)) {
    CHECK(entanglement_entropy(zero, split).value < 1e-9);
    CHECK(renyi_entropy(schmidt_spectrum(zero, split), 2.0) < 1e-9);
    CHECK(schmidt_rank(zero, split).chi == 0.0);
  }
  GeoOptions opts;
  opts.restarts = 4;
  CHECK(geometric_measure(zero, opts).value < 1e-9);
  CHECK(concurrence(zero).value < 1e-9);
  CHECK(n_tangle(zero).value < 1e-9);
  CHECK(squashed_entanglement_pure(zero, Partition::singletons(4)).value <
        1e-9);
  CHECK(localizable_upper_bound(zero, 0, 3).value < 1e-9);
  CHECK(witness_measure(zero, {bell_witness(0, 1)}).value < 1e-9);
}
