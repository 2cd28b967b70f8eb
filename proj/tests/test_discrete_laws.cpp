#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nstab/discrete_laws.hpp"
#include "nstab/pgf_recovery.hpp"
#include "nstab/rng.hpp"
#include "test_util.hpp"

using namespace nstab;

namespace {

std::vector<std::int64_t> draw(const DiscreteLaw& law, std::size_t n,
                               std::uint64_t seed) {
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(seed, i);
    out.push_back(sample(law, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("constructors enforce the parameter ranges") {
  CHECK_THROWS_AS(sibuya(0.0), std::invalid_argument);
  CHECK_THROWS_AS(sibuya(1.0), std::invalid_argument);
  CHECK_THROWS_AS(harris(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(harris(2.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(geometric(0.0, Support::kOneBased), std::invalid_argument);
  CHECK_THROWS_AS(geometric(1.0, Support::kZeroBased), std::invalid_argument);
  CHECK_THROWS_AS(degenerate(0), std::invalid_argument);
  CHECK_NOTHROW(degenerate(1));  // allowed standalone; the registry refuses it
}

TEST_CASE("pgf closed forms at pinned points") {
  // 1 - (1 - 0.75)^{0.5} = 1 - 0.5
  CHECK(pgf(sibuya(0.5), 0.75) == doctest::Approx(0.5).epsilon(1e-15));
  // 0.5 / (2 - 1 * 0.5) = 1/3
  CHECK(pgf(harris(2.0, 1), 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(pgf(sibuya(0.5), -0.1), std::domain_error);
  CHECK_THROWS_AS(pgf(sibuya(0.5), 1.1), std::domain_error);
}

TEST_CASE("pgf normalization at s=1 and s=0 is exact") {
  const std::vector<DiscreteLaw> laws = {
      sibuya(0.5),  sibuya(0.17),
      harris(2.0, 1), harris(1.7, 3), harris(3.0, 2),
      geometric(0.3, Support::kOneBased), geometric(0.3, Support::kZeroBased),
      degenerate(1), degenerate(5)};
  for (const auto& law : laws) {
    CHECK(pgf(law, 1.0) == 1.0);
    CHECK(pgf_complement(law, 0.0) == 0.0);
    if (support_min(law) >= 1) CHECK(pgf(law, 0.0) == 0.0);
  }
}

TEST_CASE("pgf_complement agrees with 1 - Q(1-r) away from the corners") {
  const std::vector<DiscreteLaw> laws = {
      sibuya(0.4), harris(2.5, 2), geometric(0.35, Support::kOneBased),
      geometric(0.35, Support::kZeroBased), degenerate(4)};
  for (const auto& law : laws) {
    for (double r = 0.05; r < 1.0; r += 0.05) {
      CHECK(pgf_complement(law, r) ==
            doctest::Approx(1.0 - pgf(law, 1.0 - r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("pmf pinned values") {
  CHECK(pmf(sibuya(0.5), 1) == doctest::Approx(0.5).epsilon(1e-14));
  // coefficient of s^2 in 1 - (1-s)^{0.5} is v(1-v)/2 = 1/8
  CHECK(pmf(sibuya(0.5), 2) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(pmf(harris(2.0, 2), 2) == 0.0);  // support is {1, 3, 5, ...}
  CHECK(pmf(harris(3.0, 2), 1) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(pmf(degenerate(3), 3) == 1.0);
  CHECK(pmf(degenerate(3), 2) == 0.0);
  CHECK(pmf(sibuya(0.5), 0) == 0.0);
}

TEST_CASE("pmf coefficients reproduce the pgf (weighted partial sums)") {
  const std::vector<DiscreteLaw> laws = {
      sibuya(0.5), sibuya(0.8), harris(2.0, 1), harris(3.0, 2),
      geometric(0.4, Support::kOneBased), geometric(0.4, Support::kZeroBased),
      degenerate(4)};
  for (const auto& law : laws) {
    for (double s : {0.0, 0.2, 0.5, 0.8, 0.95, 0.99}) {
      // Cut once the remaining contribution is provably < 1e-10: either the
      // tail mass itself (computed from the survival form) or the geometric
      // envelope s^n of the weights is that small.
      double sum = 0.0;
      std::int64_t n = 0;
      while (true) {
        sum += pmf(law, n) * std::pow(s, static_cast<double>(n));
        if (survival(law, n) < 1e-10) break;
        if (s > 0.0 && static_cast<double>(n) * std::log(s) < std::log(1e-13)) break;
        if (s == 0.0 && n >= 1) break;
        ++n;
      }
      CHECK(sum == doctest::Approx(pgf(law, s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("pmf coefficients sum to one through the survival telescope") {
  // sum_{n<=N} pmf(n) + P(N > N) must equal 1; for Sibuya the tail comes
  // from the gamma-ratio survival formula, so this exercises both paths.
  const std::vector<std::pair<DiscreteLaw, std::int64_t>> cases = {
      {sibuya(0.5), 10000},
      {sibuya(0.9), 3000},
      {harris(3.0, 2), 400},
      {geometric(0.3, Support::kZeroBased), 200},
      {degenerate(7), 10}};
  for (const auto& [law, cut] : cases) {
    double sum = 0.0;
    for (std::int64_t n = 0; n <= cut; ++n) sum += pmf(law, n);
    CHECK(sum + survival(law, cut) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sibuya hazard identity pmf(n)/S(n-1) = v/n") {
  const double v = 0.37;
  const DiscreteLaw law = sibuya(v);
  for (std::int64_t n : {1, 2, 3, 5, 10, 100, 1000, 10000}) {
    const double ratio = pmf(law, n) / survival(law, n - 1);
    CHECK(ratio == doctest::Approx(v / static_cast<double>(n)).epsilon(1e-12));
  }
}

TEST_CASE("harris(a,1) coincides with geometric(1/a) on {1,2,...}") {
  const DiscreteLaw h = harris(2.0, 1);
  const DiscreteLaw g = geometric(0.5, Support::kOneBased);
  for (double s = 0.0; s <= 1.0; s += 0.01) {
    CHECK(pgf(h, s) == doctest::Approx(pgf(g, s)).epsilon(1e-14));
  }
  for (std::int64_t n = 1; n <= 30; ++n) {
    CHECK(pmf(h, n) == doctest::Approx(pmf(g, n)).epsilon(1e-13));
  }
}

TEST_CASE("harris pmf lattice formula against brute-force series extraction") {
  // The negative-binomial reduction behind pmf and the sampler, checked
  // against coefficients read directly off the PGF for a grid of (a, k).
  for (double a : {2.0, 3.0}) {
    for (std::int64_t k : {1, 2, 3}) {
      const DiscreteLaw law = harris(a, k);
      ExtractOptions options;
      options.n_max = 25;
      const std::vector<double> coeffs =
          extract_coeffs(pgf_complex(law), options);
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        CHECK(coeffs[n] ==
              doctest::Approx(pmf(law, static_cast<std::int64_t>(n)))
                  .epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("degenerate sampler returns the constant") {
  const DiscreteLaw law = degenerate(5);
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    Rng rng(seed, 0);
    CHECK(sample(law, rng) == 5);
  }
}

TEST_CASE("sampler frequency of the first atom matches pmf(1)") {
  const std::size_t n = 100000;
  {
    const auto draws = draw(sibuya(0.5), n, 91);
    const double p1 =
        static_cast<double>(std::count(draws.begin(), draws.end(), 1)) / n;
    CHECK(std::abs(p1 - 0.5) < 0.005);  // 3 sigma ~ 0.0047
  }
  {
    const auto draws = draw(harris(3.0, 2), n, 92);
    const double p1 =
        static_cast<double>(std::count(draws.begin(), draws.end(), 1)) / n;
    CHECK(std::abs(p1 - 1.0 / std::sqrt(3.0)) < 0.005);
  }
}

TEST_CASE("samplers pass a chi-square audit at the 1% level") {
  const std::size_t n = 100000;
  const std::vector<std::pair<DiscreteLaw, std::uint64_t>> cases = {
      {sibuya(0.5), 1001},
      {sibuya(0.8), 1002},
      {harris(3.0, 2), 1003},
      {harris(2.0, 1), 1004},
      {geometric(0.3, Support::kOneBased), 1005},
      {geometric(0.3, Support::kZeroBased), 1006}};
  for (const auto& [law, seed] : cases) {
    const auto draws = draw(law, n, seed);
    const auto result = test_util::chi2_vs_pmf(law, draws);
    INFO(describe(law) << " chi2=" << result.stat << " dof=" << result.dof);
    CHECK(result.pvalue > 0.01);
  }
}

TEST_CASE("sibuya sampler tail matches the gamma-ratio survival formula") {
  const DiscreteLaw law = sibuya(0.5);
  const std::size_t n = 100000;
  const auto draws = draw(law, n, 77);
  for (std::int64_t cut : {10, 100, 1000}) {
    const double expected = survival(law, cut);
    const double observed =
        static_cast<double>(std::count_if(draws.begin(), draws.end(),
                                          [cut](std::int64_t d) { return d > cut; })) /
        static_cast<double>(n);
    const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(n));
    INFO("cut " << cut << ": observed " << observed << " expected " << expected);
    CHECK(std::abs(observed - expected) < 3.0 * sigma);
  }
}

TEST_CASE("sampling beyond the 2^62 cap raises the tagged overflow error") {
  // With v = 0.01 the survival at the cap is ~0.65, so a handful of draws
  // must hit it.
  const DiscreteLaw law = sibuya(0.01);
  int overflows = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(5, i);
    try {
      (void)sample(law, rng);
    } catch (const SampleOverflowError&) {
      ++overflows;
    }
  }
  CHECK(overflows > 0);
}
