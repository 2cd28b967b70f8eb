#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "nstab/hazard.hpp"
#include "nstab/rng.hpp"

namespace nstab {

struct ExponentialFamily {
  double rate;
};

// F(x) = 1 - exp(-psi(x)).
struct SemiWeibullFamily {
  PeriodicHazard hazard;
};

// F(x) = 1 - [1 + psi(x)]^{-beta}; beta = 1 is the semi-Pareto case.
struct GeneralizedSemiParetoFamily {
  PeriodicHazard hazard;
  double beta;
};

// F(x) = [1 + x^{-alpha}]^{-1/k}.
struct ExtendedLogLogisticFamily {
  double alpha;
  std::int64_t k;
};

using ContinuousFamily =
    std::variant<ExponentialFamily, SemiWeibullFamily,
                 GeneralizedSemiParetoFamily, ExtendedLogLogisticFamily>;

ContinuousFamily exponential(double rate);
ContinuousFamily semi_weibull(const PeriodicHazard& hazard);
ContinuousFamily generalized_semi_pareto(const PeriodicHazard& hazard,
                                         double beta);
ContinuousFamily semi_pareto(const PeriodicHazard& hazard);
ContinuousFamily extended_log_logistic(double alpha, std::int64_t k);

// F(x), x > 0.
double cdf(const ContinuousFamily& f, double x);

// 1 - F(x) in its own closed form; never computed as 1 - cdf, so the deep
// tail keeps full precision (min-stability residuals need it at large x).
double survival(const ContinuousFamily& f, double x);
double log_survival(const ContinuousFamily& f, double x);

// F^{-1}(s), 0 < s < 1, with F(quantile(s)) = s to ~1e-12 relative.
double quantile(const ContinuousFamily& f, double s);

// x with log survival(x) = log_r (log_r < 0). The order-statistic extreme
// samplers pass log(U)/n here directly, which stays exact even when the
// implied survival level is far below double's 1-ulp-from-1 resolution.
double inverse_survival_log(const ContinuousFamily& f, double log_r);

// Inverse-transform draw.
double sample(const ContinuousFamily& f, Rng& rng);

const PeriodicHazard* hazard_of(const ContinuousFamily& f);

std::string describe(const ContinuousFamily& f);

}  // namespace nstab
