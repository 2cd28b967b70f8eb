#pragma once

#include <cstdint>
#include <string>

#include "nstab/continuous_families.hpp"
#include "nstab/rng.hpp"

namespace nstab {

// A distribution on {0, 1, 2, ...} built from survival-function values of a
// continuous base: P(X < j) = F(j) = 1 - m(j), with m the base survival.
// Admissible bases are the exponential (whose discretization is geometric
// on {0,1,...}) and the semi-Weibull / (generalized) semi-Pareto families
// with hazard exponent alpha < 1, where m is completely monotone and the
// induced probability sequence is a mixture of geometrics.
class DiscretizedFamily {
 public:
  const ContinuousFamily& base() const { return base_; }

  // m extended to real arguments; m(0) = 1. The stability checker needs
  // values at non-integer points c*j, so the extension is part of the
  // contract, not an implementation detail.
  double survival_ext(double x) const;
  double log_survival_ext(double x) const;

  // P(X < j) = 1 - m(j); accepts real arguments through the extension.
  double cdf_below(double x) const;
  // P(X <= j) = 1 - m(j+1), integer arguments.
  double cdf_upto(std::int64_t j) const;

  // P(X = j) = m(j) - m(j+1). Throws if the value dips below -1e-14,
  // which signals an eps/alpha combination without a valid
  // probability sequence.
  double pmf(std::int64_t j) const;

  // Inverse transform with binary search on the monotone tail of m.
  std::int64_t sample(Rng& rng) const;

  std::string describe() const;

 private:
  friend DiscretizedFamily discretize(const ContinuousFamily& base);
  explicit DiscretizedFamily(const ContinuousFamily& base) : base_(base) {}

  ContinuousFamily base_;
};

// Validates the base family (kind and alpha < 1 for hazard families). For a
// hazard with eps != 0 the complete-monotonicity argument no longer applies,
// so construction additionally sweeps pmf for negativity up to the
// 1 - 1e-10 quantile (densely at first, then log-spaced once per-index
// checking becomes infeasible for heavy tails) and fails loudly instead of
// returning an invalid law.
DiscretizedFamily discretize(const ContinuousFamily& base);

}  // namespace nstab
