#include "nstab/discrete_families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nstab/discrete_laws.hpp"

namespace nstab {

double DiscretizedFamily::survival_ext(double x) const {
  if (x < 0.0) throw std::domain_error("survival_ext: requires x >= 0");
  if (x == 0.0) return 1.0;
  return survival(base_, x);
}

double DiscretizedFamily::log_survival_ext(double x) const {
  if (x < 0.0) throw std::domain_error("log_survival_ext: requires x >= 0");
  if (x == 0.0) return 0.0;
  return log_survival(base_, x);
}

double DiscretizedFamily::cdf_below(double x) const {
  return 1.0 - survival_ext(x);
}

double DiscretizedFamily::cdf_upto(std::int64_t j) const {
  if (j < 0) return 0.0;
  return 1.0 - survival_ext(static_cast<double>(j) + 1.0);
}

double DiscretizedFamily::pmf(std::int64_t j) const {
  if (j < 0) throw std::domain_error("pmf: requires j >= 0");
  const double value = survival_ext(static_cast<double>(j)) -
                       survival_ext(static_cast<double>(j) + 1.0);
  if (value < -1e-14) {
    throw std::runtime_error(
        "discretized pmf: negative mass at j=" + std::to_string(j) +
        " (hazard parameters do not yield a valid probability sequence)");
  }
  return value;
}

std::int64_t DiscretizedFamily::sample(Rng& rng) const {
  // Smallest j >= 0 with P(X <= j) >= u, i.e. m(j+1) <= 1-u.
  const double target = std::log1p(-rng.uniform01());
  if (log_survival_ext(1.0) <= target) return 0;
  std::int64_t lo = 0;  // log m(lo+1) > target
  std::int64_t hi = 1;
  while (log_survival_ext(static_cast<double>(hi) + 1.0) > target) {
    lo = hi;
    if (hi >= kSampleIndexCap) {
      throw SampleOverflowError("sample(discretized): index beyond 2^62 cap");
    }
    hi = (hi > kSampleIndexCap / 2) ? kSampleIndexCap : hi * 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (log_survival_ext(static_cast<double>(mid) + 1.0) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

std::string DiscretizedFamily::describe() const {
  return "discretized[" + nstab::describe(base_) + "]";
}

DiscretizedFamily discretize(const ContinuousFamily& base) {
  const bool is_exponential = std::holds_alternative<ExponentialFamily>(base);
  const PeriodicHazard* hazard = hazard_of(base);
  if (!is_exponential && hazard == nullptr) {
    throw std::invalid_argument(
        "discretize: base must be exponential, semi-weibull or "
        "(generalized) semi-pareto");
  }
  if (hazard != nullptr && !(hazard->alpha() < 1.0)) {
    throw std::invalid_argument(
        "discretize: hazard families need alpha < 1 for a completely "
        "monotone survival");
  }
  DiscretizedFamily family(base);
  if (hazard != nullptr && hazard->eps() != 0.0) {
    const double upper = quantile(base, 1.0 - 1e-10);
    std::int64_t j = 0;
    while (static_cast<double>(j) <= upper) {
      family.pmf(j);  // throws on negative mass
      // Dense scan first; past 10^5 step multiplicatively (~350 points per
      // period of the hazard's log-oscillation, far denser than needed to
      // catch a periodic sign defect).
      j = (j < 100000) ? j + 1
                       : std::max(j + 1, static_cast<std::int64_t>(
                                             static_cast<double>(j) * 1.02));
    }
  }
  return family;
}

}  // namespace nstab
