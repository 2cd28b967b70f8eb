#pragma once

#include <cstdint>

namespace nstab {

// log Gamma(x), x > 0.
double log_gamma(double x);

// log C(n + r - 1, n) for real r > 0 and integer n >= 0, evaluated through
// log-gamma so that large n never overflows.
double log_binomial_rising(double r, std::int64_t n);

// log(1 - e^t) for t < 0, accurate at both ends: expm1 form near 0,
// log1p(-exp(t)) form in the deep negative range.
double log1mexp(double t);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
// a > 0, x >= 0. Series for x < a + 1, continued fraction otherwise.
double regularized_gamma_q(double a, double x);

// p-value of a chi-square statistic with the given degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

// One-sample Kolmogorov-Smirnov critical value at the given significance
// for n samples, via the asymptotic form c(alpha)/sqrt(n). Only the
// levels 0.01, 0.05 and 0.10 are tabulated (c = 1.63, 1.36, 1.22).
double ks_critical_value(std::size_t n, double significance);

}  // namespace nstab
