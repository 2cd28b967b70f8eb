#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nstab/discrete_families.hpp"
#include "nstab/discrete_laws.hpp"
#include "nstab/rng.hpp"
#include "test_util.hpp"

using namespace nstab;

TEST_CASE("discretize admits only the completely monotone bases") {
  CHECK_NOTHROW(discretize(exponential(2.0)));  // any rate
  CHECK_NOTHROW(discretize(semi_weibull(PeriodicHazard(0.5, 0.4, 0.0, 0.0))));
  CHECK_NOTHROW(discretize(
      generalized_semi_pareto(PeriodicHazard(0.7, 1.0 / 3.0, 0.0, 0.0), 0.5)));
  // alpha >= 1 breaks complete monotonicity of the hazard families
  CHECK_THROWS_AS(
      discretize(semi_weibull(PeriodicHazard(1.0, 0.4, 0.0, 0.0))),
      std::invalid_argument);
  CHECK_THROWS_AS(
      discretize(semi_weibull(PeriodicHazard(1.5, 0.4, 0.0, 0.0))),
      std::invalid_argument);
  CHECK_THROWS_AS(discretize(extended_log_logistic(0.5, 2)),
                  std::invalid_argument);
}

TEST_CASE("discretized exponential is geometric on {0,1,...}") {
  // m(j) = e^{-lambda j} = theta^j with theta = 0.5
  const DiscretizedFamily d = discretize(exponential(std::log(2.0)));
  CHECK(d.cdf_below(0.0) == 0.0);
  CHECK(d.cdf_below(2.0) == doctest::Approx(0.75).epsilon(1e-15));
  const DiscreteLaw geo = geometric(0.5, Support::kZeroBased);
  for (std::int64_t j = 0; j <= 60; ++j) {
    CHECK(d.pmf(j) == doctest::Approx(pmf(geo, j)).epsilon(1e-14));
  }
}

TEST_CASE("discretized semi-pareto cdf at pinned points") {
  // alpha = 0.5, eps = 0: F(1) = 1 - (1 + 1)^{-1} = 0.5
  const DiscretizedFamily d =
      discretize(semi_pareto(PeriodicHazard(0.5, 0.4, 0.0, 0.0)));
  CHECK(d.cdf_below(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.cdf_below(0.0) == 0.0);
  // continuous extension at non-integer arguments
  CHECK(d.survival_ext(2.5) ==
        doctest::Approx(1.0 / (1.0 + std::pow(2.5, 0.5))).epsilon(1e-14));
  CHECK_THROWS_AS(d.survival_ext(-1.0), std::domain_error);
}

TEST_CASE("pmf telescopes exactly") {
  const std::vector<DiscretizedFamily> families = {
      discretize(exponential(0.8)),
      discretize(semi_weibull(PeriodicHazard(0.5, 0.4, 0.0, 0.0))),
      discretize(semi_pareto(PeriodicHazard(0.6, 0.35, 0.0, 0.0)))};
  for (const auto& d : families) {
    const std::int64_t cut = 300;
    double sum = 0.0;
    for (std::int64_t j = 0; j <= cut; ++j) sum += d.pmf(j);
    // sum_{j<=J} pmf(j) = 1 - m(J+1), up to pure rounding noise
    CHECK(sum == doctest::Approx(1.0 - d.survival_ext(cut + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("discrete semi-weibull pmf mass reaches one within 1e-9") {
  const DiscretizedFamily d =
      discretize(semi_weibull(PeriodicHazard(0.5, 0.4, 0.0, 0.0)));
  // J(1e-10): psi(J) = 23 -> J = 23^2 = 529
  double sum = 0.0;
  for (std::int64_t j = 0; j <= 600; ++j) sum += d.pmf(j);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pmf stays nonnegative for eps = 0, alpha < 1 bases") {
  const std::vector<DiscretizedFamily> families = {
      discretize(semi_weibull(PeriodicHazard(0.9, 0.2, 0.0, 0.0))),
      discretize(
          generalized_semi_pareto(PeriodicHazard(0.7, 1.0 / 3.0, 0.0, 0.0), 0.5)),
      discretize(semi_pareto(PeriodicHazard(0.3, 0.5, 0.0, 0.0)))};
  for (const auto& d : families) {
    for (std::int64_t j = 0; j <= 2000; ++j) {
      CHECK(d.pmf(j) >= 0.0);
    }
  }
}

TEST_CASE("eps != 0 bases are admitted only after the negativity sweep") {
  // A mild eps on a alpha < 1 semi-weibull keeps the sequence valid.
  const double bound = PeriodicHazard::eps_bound(0.4);
  CHECK_NOTHROW(
      discretize(semi_weibull(PeriodicHazard(0.5, 0.4, 0.02 * bound, 0.0))));
}

TEST_CASE("sampler matches the law: geometric case band and chi-square") {
  const DiscretizedFamily d = discretize(exponential(std::log(2.0)));
  const std::size_t n = 100000;
  std::vector<std::int64_t> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(34, i);
    draws.push_back(d.sample(rng));
  }
  const double p0 =
      static_cast<double>(std::count(draws.begin(), draws.end(), 0)) /
      static_cast<double>(n);
  CHECK(std::abs(p0 - 0.5) < 0.005);

  const auto chi2 =
      test_util::chi2_vs_pmf(geometric(0.5, Support::kZeroBased), draws);
  CHECK(chi2.pvalue > 0.01);
}

TEST_CASE("sampler audit for a heavy-tailed discretized semi-pareto") {
  const DiscretizedFamily d =
      discretize(semi_pareto(PeriodicHazard(0.6, 0.35, 0.0, 0.0)));
  const std::size_t n = 100000;
  std::vector<std::int64_t> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(32, i);
    draws.push_back(d.sample(rng));
  }
  // chi-square against the induced pmf, binned by expected count
  std::int64_t covered = 0;
  double stat = 0.0;
  int bins = 0;
  double mass = 0.0;
  for (std::int64_t j = 0;; ++j) {
    const double expected = d.pmf(j) * static_cast<double>(n);
    if (expected < 5.0) break;
    const double observed = static_cast<double>(
        std::count(draws.begin(), draws.end(), j));
    stat += (observed - expected) * (observed - expected) / expected;
    mass += d.pmf(j);
    covered += static_cast<std::int64_t>(observed);
    ++bins;
  }
  const double tail_expected = (1.0 - mass) * static_cast<double>(n);
  const double tail_observed =
      static_cast<double>(static_cast<std::int64_t>(n) - covered);
  stat += (tail_observed - tail_expected) * (tail_observed - tail_expected) /
          tail_expected;
  ++bins;
  CHECK(chi_square_pvalue(stat, bins - 1) > 0.01);
}
