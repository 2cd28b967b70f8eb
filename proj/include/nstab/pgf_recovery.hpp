#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nstab/continuous_families.hpp"
#include "nstab/discrete_laws.hpp"
#include "nstab/stability.hpp"

namespace nstab {

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

// The PGF a distribution function F forces on its stabilizing law:
//   max:  Q(s) = F(c F^{-1}(s))
//   min:  Q(s) = R(R^{-1}(s) / c)
// Real-argument evaluation; works for every family, including hazards with
// eps != 0 (the quantile then runs through bisection).
double implied_max_pgf(const ContinuousFamily& f, double c, double s);
double implied_min_pgf(const ContinuousFamily& f, double c, double s);

// The same compositions as elementary functions of a complex argument,
// needed to read coefficients off a circle. Exists in closed form exactly
// when the quantile does: exponential and extended log-logistic always,
// hazard families with eps == 0 (throws otherwise). Forms are factored so
// every inner power stays off the principal branch cut inside the unit
// disk; any branch defect that remains (non-integer 1/c or 1/beta) is the
// signal the validator is meant to catch.
ComplexFn implied_pgf_complex(const ContinuousFamily& f, double c,
                              StabilityMode mode);

// Complex continuation of a discrete law's PGF.
ComplexFn pgf_complex(const DiscreteLaw& law);

struct ExtractOptions {
  double radius = 0.8;        // extraction circle |s| = radius
  int n_max = 50;             // highest coefficient index
  int samples_per_coeff = 8;  // M = samples_per_coeff * n_max circle samples
};

// Trapezoidal Cauchy-integral estimates of the power-series coefficients
//   a_n ~= (1/(M r^n)) sum_m g(r e^{2 pi i m / M}) e^{-2 pi i n m / M}.
// For g analytic in a disk wider than r the estimate is exact up to the
// alias sum_{j>=1} a_{n+jM} r^{jM} plus round-off amplified by r^{-n}; the
// default radius keeps both below ~1e-12 for n <= 50. Throws when r^n_max
// is too small for the amplification to stay meaningful.
std::vector<double> extract_coeffs(const ComplexFn& g,
                                   const ExtractOptions& options = {});

enum class PgfInvalidReason {
  kNone,
  kReconstruction,        // truncated series cannot reproduce g on [0, r]
  kNegativeCoefficient,
  kSum,                   // mass exceeds 1, or g(1) != 1
};

struct PgfVerdict {
  bool valid = false;
  PgfInvalidReason reason = PgfInvalidReason::kNone;
  std::string detail;
};

struct PgfTolerances {
  double neg = 1e-8;    // coefficients may dip this far below zero
  double sum = 1e-6;    // sum excess above 1 and |g(1) - 1| allowance
  double recon = 1e-7;  // sup reconstruction error on [0, radius/2]
};

// Decision rule, checked in this order:
//   1. recon_error <= recon  (is g a power series at all; measured on
//      [0, radius/2] so heavy-tail truncation cannot mask the answer)
//   2. min coefficient >= -neg
//   3. sum(coeffs) <= 1 + sum  and  norm_defect = |g(1) - 1| <= sum
// The truncated coefficient sum may fall any distance below 1 when the law
// is heavy-tailed (Sibuya mass past any feasible n_max is polynomial), so
// under-shoot of the plain sum is judged through g(1) instead.
PgfVerdict validate_pgf(std::span<const double> coeffs, double recon_error,
                        double norm_defect, const PgfTolerances& tols = {});

struct PgfEstimate {
  std::vector<double> coeffs;  // estimated P(N = n), n = 0..n_max
  double radius = 0.0;
  double recon_error = 0.0;    // sup |g - truncated series| on [0, radius/2]
  double norm_defect = 0.0;    // |g(1) - 1|
  PgfVerdict verdict;
};

// Full pipeline for an arbitrary candidate.
PgfEstimate analyze_pgf(const ComplexFn& g, const ExtractOptions& options = {},
                        const PgfTolerances& tols = {});

// Recover the law implied by (F, c, mode) and judge it.
PgfEstimate recover_pgf(const ContinuousFamily& f, double c, StabilityMode mode,
                        const ExtractOptions& options = {},
                        const PgfTolerances& tols = {});

// Is s -> Q(s^t) a PGF? Valid exactly when t is a positive integer: for
// fractional t the composition has a branch point, so no truncated power
// series can reproduce it near 0 and the reconstruction check fails.
PgfEstimate power_composition_check(const DiscreteLaw& law, double t,
                                    const ExtractOptions& options = {},
                                    const PgfTolerances& tols = {});

std::string to_string(PgfInvalidReason reason);

}  // namespace nstab
