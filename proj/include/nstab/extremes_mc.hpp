#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nstab/stability.hpp"

namespace nstab {

struct McConfig {
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
  double significance = 0.01;
};

struct McReport {
  double ks_stat = 0.0;
  double ks_critical = 0.0;
  bool pass = false;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double significance = 0.0;
};

// One extreme of N i.i.d. copies of X in O(1) draws, via the order-statistic
// shortcut: with U uniform, U^{1/n} is distributed as the max of n uniforms,
// so  max_n = F^{-1}(U^{1/n})  and  min_n = R^{-1}(U^{1/n}).  Exact in
// distribution and immune to heavy-tailed N (Sibuya has infinite mean, so
// looping over n copies has unbounded expected cost). U^{1/n} is handled as
// log(U)/n throughout; n beyond the 2^62 cap raises SampleOverflowError.
double sample_extreme(const StabilityTarget& family, const DiscreteLaw& law,
                      StabilityMode mode, Rng& rng);

// trials independent extremes; trial i draws from the counter-based stream
// (seed, i), so serial and parallel execution produce identical vectors.
std::vector<double> simulate_extremes(const StabilityProblem& problem,
                                      std::size_t trials, std::uint64_t seed,
                                      Execution exec = Execution::kParallel);

// One-sample Kolmogorov-Smirnov statistic
//   D = max_i max(i/n - G(x_i), G(x_i) - (i-1)/n)
// for sorted samples against a right-continuous target cdf.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& target_cdf);

// Simulates extremes of the problem and KS-tests them against the
// distribution the stability identity implies:
//   max:  c * max_N is distributed as X       (continuous families)
//   min:  P(min_N <= y) = 1 - R(y/c)
// Discretized families keep integer samples and test against the
// continuous-extension targets 1 - m(c(j+1)) resp. 1 - m((j+1)/c).
McReport mc_stability_test(const StabilityProblem& problem,
                           const McConfig& config,
                           Execution exec = Execution::kParallel);

// Seeds the shipped verification runs use; fixed so results are exactly
// reproducible.
inline constexpr std::uint64_t kMcSeeds[] = {11, 22, 33, 44, 55};

}  // namespace nstab
