#include "nstab/extremes_mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nstab/special.hpp"

namespace nstab {

namespace {

// Smallest j >= 0 with log m(j+1) <= target, by exponential bracketing and
// binary search on the monotone tail.
std::int64_t discrete_extreme_index(const DiscretizedFamily& family,
                                    double target) {
  if (family.log_survival_ext(1.0) <= target) return 0;
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (family.log_survival_ext(static_cast<double>(hi) + 1.0) > target) {
    lo = hi;
    if (hi >= kSampleIndexCap) {
      throw SampleOverflowError("sample_extreme: index beyond 2^62 cap");
    }
    hi = (hi > kSampleIndexCap / 2) ? kSampleIndexCap : hi * 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (family.log_survival_ext(static_cast<double>(mid) + 1.0) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// sup_j |F_n(j) - G(j)| over the integers, for targets whose atoms sit on
// {0, 1, 2, ...}. The continuous order-statistic formula would compare the
// target's value at an atom against the empirical cdf's left limit, which
// inflates D to the largest atom mass. Between consecutive sample values the
// empirical cdf is constant and G is nondecreasing, so the sup over that run
// is attained at one of its two ends; checking every distinct sample value
// (and the integer just before it) therefore covers the whole line.
double ks_statistic_integer_atoms(const std::vector<double>& sorted_samples,
                                  const std::function<double(double)>& target_cdf) {
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  std::size_t idx = 0;
  while (idx < sorted_samples.size()) {
    const double x = sorted_samples[idx];
    const double ecdf_before = static_cast<double>(idx) / n;
    while (idx < sorted_samples.size() && sorted_samples[idx] == x) ++idx;
    const double ecdf_at = static_cast<double>(idx) / n;
    d = std::max(d, std::abs(ecdf_at - target_cdf(x)));
    d = std::max(d, std::abs(ecdf_before - target_cdf(x - 1.0)));
  }
  return d;
}

}  // namespace

double sample_extreme(const StabilityTarget& family, const DiscreteLaw& law,
                      StabilityMode mode, Rng& rng) {
  const std::int64_t n = sample(law, rng);
  const double log_u = std::log(rng.uniform01()) / static_cast<double>(n);

  if (const auto* cont = std::get_if<ContinuousFamily>(&family)) {
    if (mode == StabilityMode::kMax) {
      // F(x) = U^{1/n}  =>  R(x) = 1 - e^{log_u}
      return inverse_survival_log(*cont, log1mexp(log_u));
    }
    // R(x)^n = U  =>  log R(x) = log(U)/n
    return inverse_survival_log(*cont, log_u);
  }

  const auto& disc = std::get<DiscretizedFamily>(family);
  if (mode == StabilityMode::kMax) {
    // P(X <= j)^n >= U  <=>  m(j+1) <= 1 - U^{1/n}
    return static_cast<double>(
        discrete_extreme_index(disc, log1mexp(log_u)));
  }
  // 1 - m(j+1)^n >= V  <=>  n log m(j+1) <= log(1 - V)
  return static_cast<double>(discrete_extreme_index(disc, log_u));
}

std::vector<double> simulate_extremes(const StabilityProblem& problem,
                                      std::size_t trials, std::uint64_t seed,
                                      Execution exec) {
  if (trials == 0) {
    throw std::invalid_argument("simulate_extremes: requires trials > 0");
  }
  std::vector<double> out(trials);
  bool failed = false;
  std::string first_error;

  const auto run_trial = [&](std::int64_t i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] =
        sample_extreme(problem.family, problem.law, problem.mode, rng);
  };

  const auto n = static_cast<std::int64_t>(trials);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      // Exceptions may not cross the parallel region; surface the first one
      // afterwards.
      try {
        run_trial(i);
      } catch (const std::exception& e) {
#pragma omp critical
        {
          if (!failed) {
            failed = true;
            first_error = e.what();
          }
        }
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) run_trial(i);
  }
  if (failed) throw SampleOverflowError(first_error);
  return out;
}

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& target_cdf) {
  if (sorted_samples.empty()) {
    throw std::invalid_argument("ks_statistic: requires samples");
  }
  if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end())) {
    throw std::invalid_argument("ks_statistic: samples must be sorted");
  }
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double g = target_cdf(sorted_samples[i]);
    const double upper = (static_cast<double>(i) + 1.0) / n - g;
    const double lower = g - static_cast<double>(i) / n;
    d = std::max(d, std::max(upper, lower));
  }
  return d;
}

McReport mc_stability_test(const StabilityProblem& problem,
                           const McConfig& config, Execution exec) {
  if (config.trials < 1000) {
    throw std::invalid_argument("mc_stability_test: requires trials >= 1000");
  }
  std::vector<double> samples =
      simulate_extremes(problem, config.trials, config.seed, exec);

  std::function<double(double)> target;
  const double c = problem.c;
  if (const auto* cont = std::get_if<ContinuousFamily>(&problem.family)) {
    if (problem.mode == StabilityMode::kMax) {
      for (double& y : samples) y *= c;
      target = [cont](double y) { return cdf(*cont, y); };
    } else {
      target = [cont, c](double y) { return cdf(*cont, y / c); };
    }
  } else {
    const auto* disc = &std::get<DiscretizedFamily>(problem.family);
    if (problem.mode == StabilityMode::kMax) {
      target = [disc, c](double y) {
        return 1.0 - disc->survival_ext(c * (std::floor(y) + 1.0));
      };
    } else {
      target = [disc, c](double y) {
        return 1.0 - disc->survival_ext((std::floor(y) + 1.0) / c);
      };
    }
  }

  std::sort(samples.begin(), samples.end());

  McReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  report.significance = config.significance;
  report.ks_stat =
      std::holds_alternative<DiscretizedFamily>(problem.family)
          ? ks_statistic_integer_atoms(samples, target)
          : ks_statistic(samples, target);
  report.ks_critical = ks_critical_value(config.trials, config.significance);
  report.pass = report.ks_stat < report.ks_critical;
  return report;
}

}  // namespace nstab
