#include "nstab/pgf_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace nstab {

namespace {

using Complex = std::complex<double>;

// Principal-branch power with the 0^e = 0 limit (e > 0) made explicit, so
// z = 1 evaluates compositions like 1 - (1-z)^c without inf * 0.
Complex cpow(Complex z, double e) {
  if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
  return std::exp(e * std::log(z));
}

void check_open_unit(double s, const char* fn) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error(std::string(fn) + ": requires 0 < s < 1");
  }
}

void check_c(double c, const char* fn) {
  if (!(c > 0.0 && c < 1.0)) {
    throw std::domain_error(std::string(fn) + ": requires 0 < c < 1");
  }
}

}  // namespace

double implied_max_pgf(const ContinuousFamily& f, double c, double s) {
  check_open_unit(s, "implied_max_pgf");
  check_c(c, "implied_max_pgf");
  return cdf(f, c * quantile(f, s));
}

double implied_min_pgf(const ContinuousFamily& f, double c, double s) {
  check_open_unit(s, "implied_min_pgf");
  check_c(c, "implied_min_pgf");
  // R_c(x) = R(cx) gives R_c^{-1}(s) = R^{-1}(s)/c.
  return survival(f, inverse_survival_log(f, std::log(s)) / c);
}

ComplexFn implied_pgf_complex(const ContinuousFamily& f, double c,
                              StabilityMode mode) {
  check_c(c, "implied_pgf_complex");
  const PeriodicHazard* hazard = hazard_of(f);
  if (hazard != nullptr && hazard->eps() != 0.0) {
    throw std::invalid_argument(
        "implied_pgf_complex: a log-periodic hazard (eps != 0) has no "
        "elementary quantile; only eps = 0 members extend off the real line");
  }

  if (const auto* e = std::get_if<ExponentialFamily>(&f)) {
    (void)e;  // the rate cancels in F(c F^{-1}(s))
    if (mode == StabilityMode::kMax) {
      return [c](Complex z) { return 1.0 - cpow(1.0 - z, c); };
    }
    return [c](Complex z) { return cpow(z, 1.0 / c); };
  }

  if (const auto* sw = std::get_if<SemiWeibullFamily>(&f)) {
    const double p_link = std::exp(sw->hazard.alpha() * std::log(c));  // c^alpha
    if (mode == StabilityMode::kMax) {
      return [p_link](Complex z) { return 1.0 - cpow(1.0 - z, p_link); };
    }
    return [p_link](Complex z) { return cpow(z, 1.0 / p_link); };
  }

  if (const auto* gsp = std::get_if<GeneralizedSemiParetoFamily>(&f)) {
    const double a = std::exp(-gsp->hazard.alpha() * std::log(c));  // c^{-alpha}
    const double beta = gsp->beta;
    if (mode == StabilityMode::kMin) {
      // R(R_c^{-1}(s)) = s / [a - (a-1) s^{1/beta}]^beta. The bracket stays
      // in the right half-plane for |s| < 1, so the outer power never
      // crosses the cut; any branch defect comes from s^{1/beta} itself,
      // exactly when 1/beta is not an integer.
      return [a, beta](Complex z) {
        return z * cpow(a - (a - 1.0) * cpow(z, 1.0 / beta), -beta);
      };
    }
    // F(c F^{-1}(s)) = 1 - (1-s) [c^alpha + (1-c^alpha)(1-s)^{1/beta}]^{-beta}
    const double ca = 1.0 / a;
    return [ca, beta](Complex z) {
      const Complex u = 1.0 - z;
      return 1.0 - u * cpow(ca + (1.0 - ca) * cpow(u, 1.0 / beta), -beta);
    };
  }

  const auto& ell = std::get<ExtendedLogLogisticFamily>(f);
  const double a = std::exp(-ell.alpha * std::log(c));
  const double invk = 1.0 / static_cast<double>(ell.k);
  const double k = static_cast<double>(ell.k);
  if (mode == StabilityMode::kMax) {
    // F(c F^{-1}(s)) = s [a - (a-1) s^k]^{-1/k}: the Harris form.
    return [a, k, invk](Complex z) {
      return z * cpow(a - (a - 1.0) * cpow(z, k), -invk);
    };
  }
  const double ca = 1.0 / a;
  return [ca, k, invk](Complex z) {
    const Complex u = 1.0 - z;
    return 1.0 - u * cpow(ca + (1.0 - ca) * cpow(u, k), -invk);
  };
}

ComplexFn pgf_complex(const DiscreteLaw& law) {
  return std::visit(
      [](const auto& l) -> ComplexFn {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          return [v = l.v](Complex z) { return 1.0 - cpow(1.0 - z, v); };
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          return [a = l.a, k = static_cast<double>(l.k)](Complex z) {
            return z * cpow(a - (a - 1.0) * cpow(z, k), -1.0 / k);
          };
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          if (l.support == Support::kZeroBased) {
            return [q = l.q](Complex z) { return q / (1.0 - (1.0 - q) * z); };
          }
          return [q = l.q](Complex z) { return q * z / (1.0 - (1.0 - q) * z); };
        } else {
          return [k = static_cast<double>(l.k)](Complex z) {
            return cpow(z, k);
          };
        }
      },
      law);
}

std::vector<double> extract_coeffs(const ComplexFn& g,
                                   const ExtractOptions& options) {
  if (!(options.radius > 0.0 && options.radius < 1.0)) {
    throw std::invalid_argument("extract_coeffs: requires 0 < radius < 1");
  }
  if (options.n_max < 0) {
    throw std::invalid_argument("extract_coeffs: requires n_max >= 0");
  }
  if (options.samples_per_coeff < 4) {
    throw std::invalid_argument(
        "extract_coeffs: requires samples_per_coeff >= 4");
  }
  // r^{-n} amplifies circle round-off; past ~1e-13 the low bits of the
  // estimates are pure noise, so refuse instead of returning garbage.
  if (std::pow(options.radius, options.n_max) < 1e-13) {
    throw std::runtime_error(
        "extract_coeffs: radius^n_max underflows the usable range; lower "
        "n_max or raise radius");
  }

  const int m_samples = options.samples_per_coeff * std::max(options.n_max, 1);
  std::vector<Complex> samples(static_cast<std::size_t>(m_samples));
  std::vector<Complex> roots(static_cast<std::size_t>(m_samples));
  const double step = 2.0 * std::numbers::pi / m_samples;
  for (int m = 0; m < m_samples; ++m) {
    roots[static_cast<std::size_t>(m)] = std::polar(1.0, step * m);
    samples[static_cast<std::size_t>(m)] =
        g(options.radius * roots[static_cast<std::size_t>(m)]);
  }

  std::vector<double> coeffs(static_cast<std::size_t>(options.n_max) + 1);
  for (int n = 0; n <= options.n_max; ++n) {
    Complex sum{0.0, 0.0};
    for (int m = 0; m < m_samples; ++m) {
      // e^{-2 pi i n m / M} = conj(root[(n*m) mod M]); exact index arithmetic
      // keeps the twiddles coherent for all n.
      const int idx = static_cast<int>(
          (static_cast<long long>(n) * m) % m_samples);
      sum += samples[static_cast<std::size_t>(m)] *
             std::conj(roots[static_cast<std::size_t>(idx)]);
    }
    coeffs[static_cast<std::size_t>(n)] =
        sum.real() / (m_samples * std::pow(options.radius, n));
  }
  return coeffs;
}

std::string to_string(PgfInvalidReason reason) {
  switch (reason) {
    case PgfInvalidReason::kNone:
      return "none";
    case PgfInvalidReason::kReconstruction:
      return "reconstruction";
    case PgfInvalidReason::kNegativeCoefficient:
      return "negative-coefficient";
    case PgfInvalidReason::kSum:
      return "sum";
  }
  return "unknown";
}

PgfVerdict validate_pgf(std::span<const double> coeffs, double recon_error,
                        double norm_defect, const PgfTolerances& tols) {
  PgfVerdict verdict;
  std::ostringstream detail;
  if (!(recon_error <= tols.recon)) {
    verdict.reason = PgfInvalidReason::kReconstruction;
    detail << "reconstruction error " << recon_error << " exceeds "
           << tols.recon;
    verdict.detail = detail.str();
    return verdict;
  }
  const auto min_it = std::min_element(coeffs.begin(), coeffs.end());
  if (min_it != coeffs.end() && *min_it < -tols.neg) {
    verdict.reason = PgfInvalidReason::kNegativeCoefficient;
    detail << "coefficient " << (min_it - coeffs.begin()) << " is " << *min_it;
    verdict.detail = detail.str();
    return verdict;
  }
  double sum = 0.0;
  for (double a : coeffs) sum += a;
  if (sum > 1.0 + tols.sum) {
    verdict.reason = PgfInvalidReason::kSum;
    detail << "coefficient sum " << sum << " exceeds 1";
    verdict.detail = detail.str();
    return verdict;
  }
  if (!(norm_defect <= tols.sum)) {
    verdict.reason = PgfInvalidReason::kSum;
    detail << "|g(1) - 1| = " << norm_defect << " exceeds " << tols.sum;
    verdict.detail = detail.str();
    return verdict;
  }
  verdict.valid = true;
  return verdict;
}

PgfEstimate analyze_pgf(const ComplexFn& g, const ExtractOptions& options,
                        const PgfTolerances& tols) {
  PgfEstimate estimate;
  estimate.radius = options.radius;
  estimate.coeffs = extract_coeffs(g, options);

  // Probe on [0, radius/2]: far enough in that the truncated tail of a
  // genuine heavy-tailed PGF is negligible at any n_max, while branch
  // defects (fractional powers have them at s = 0) still blow up.
  double recon = 0.0;
  const int probe_points = 256;
  for (int i = 0; i <= probe_points; ++i) {
    const double s = 0.5 * options.radius * i / probe_points;
    double horner = 0.0;
    for (std::size_t n = estimate.coeffs.size(); n-- > 0;) {
      horner = horner * s + estimate.coeffs[n];
    }
    recon = std::max(recon, std::abs(g(Complex(s, 0.0)).real() - horner));
  }
  estimate.recon_error = recon;
  estimate.norm_defect = std::abs(g(Complex(1.0, 0.0)) - Complex(1.0, 0.0));
  estimate.verdict =
      validate_pgf(estimate.coeffs, estimate.recon_error, estimate.norm_defect,
                   tols);
  return estimate;
}

PgfEstimate recover_pgf(const ContinuousFamily& f, double c, StabilityMode mode,
                        const ExtractOptions& options,
                        const PgfTolerances& tols) {
  return analyze_pgf(implied_pgf_complex(f, c, mode), options, tols);
}

PgfEstimate power_composition_check(const DiscreteLaw& law, double t,
                                    const ExtractOptions& options,
                                    const PgfTolerances& tols) {
  if (!(t > 0.0)) {
    throw std::domain_error("power_composition_check: requires t > 0");
  }
  const ComplexFn q = pgf_complex(law);
  const ComplexFn composed = [q, t](Complex z) {
    if (z == Complex(0.0, 0.0)) return q(Complex(0.0, 0.0));
    return q(std::exp(t * std::log(z)));
  };
  return analyze_pgf(composed, options, tols);
}

}  // namespace nstab
