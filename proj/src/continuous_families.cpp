#include "nstab/continuous_families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "nstab/special.hpp"

namespace nstab {

namespace {

void check_positive(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(fn) + ": requires x > 0");
  }
}

void check_open_unit(double s, const char* fn) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error(std::string(fn) + ": requires 0 < s < 1");
  }
}

double ext_log_logistic_log_u(const ExtendedLogLogisticFamily& f, double x) {
  // log(1 + x^{-alpha})
  return std::log1p(std::exp(-f.alpha * std::log(x)));
}

}  // namespace

ContinuousFamily exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential: requires rate > 0");
  return ExponentialFamily{rate};
}

ContinuousFamily semi_weibull(const PeriodicHazard& hazard) {
  return SemiWeibullFamily{hazard};
}

ContinuousFamily generalized_semi_pareto(const PeriodicHazard& hazard,
                                         double beta) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("generalized_semi_pareto: requires beta > 0");
  }
  return GeneralizedSemiParetoFamily{hazard, beta};
}

ContinuousFamily semi_pareto(const PeriodicHazard& hazard) {
  return generalized_semi_pareto(hazard, 1.0);
}

ContinuousFamily extended_log_logistic(double alpha, std::int64_t k) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("extended_log_logistic: requires alpha > 0");
  }
  if (k < 1) {
    throw std::invalid_argument("extended_log_logistic: requires k >= 1");
  }
  return ExtendedLogLogisticFamily{alpha, k};
}

double cdf(const ContinuousFamily& f, double x) {
  check_positive(x, "cdf");
  return std::visit(
      [x](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ExponentialFamily>) {
          return -std::expm1(-fam.rate * x);
        } else if constexpr (std::is_same_v<T, SemiWeibullFamily>) {
          return -std::expm1(-fam.hazard.value(x));
        } else if constexpr (std::is_same_v<T, GeneralizedSemiParetoFamily>) {
          return -std::expm1(-fam.beta * std::log1p(fam.hazard.value(x)));
        } else {
          return std::exp(-ext_log_logistic_log_u(fam, x) /
                          static_cast<double>(fam.k));
        }
      },
      f);
}

double log_survival(const ContinuousFamily& f, double x) {
  check_positive(x, "log_survival");
  return std::visit(
      [x](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ExponentialFamily>) {
          return -fam.rate * x;
        } else if constexpr (std::is_same_v<T, SemiWeibullFamily>) {
          return -fam.hazard.value(x);
        } else if constexpr (std::is_same_v<T, GeneralizedSemiParetoFamily>) {
          return -fam.beta * std::log1p(fam.hazard.value(x));
        } else {
          // R = 1 - (1 + x^{-alpha})^{-1/k}; log1mexp keeps both the deep
          // tail and the x -> 0 end exact.
          const double lu = ext_log_logistic_log_u(fam, x);
          return log1mexp(-lu / static_cast<double>(fam.k));
        }
      },
      f);
}

double survival(const ContinuousFamily& f, double x) {
  return std::exp(log_survival(f, x));
}

double quantile(const ContinuousFamily& f, double s) {
  check_open_unit(s, "quantile");
  return std::visit(
      [s](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ExponentialFamily>) {
          return -std::log1p(-s) / fam.rate;
        } else if constexpr (std::is_same_v<T, SemiWeibullFamily>) {
          return fam.hazard.inverse(-std::log1p(-s));
        } else if constexpr (std::is_same_v<T, GeneralizedSemiParetoFamily>) {
          // psi = (1-s)^{-1/beta} - 1
          return fam.hazard.inverse(std::expm1(-std::log1p(-s) / fam.beta));
        } else {
          // x = (s^{-k} - 1)^{-1/alpha}
          const double w = std::expm1(-static_cast<double>(fam.k) * std::log(s));
          return std::exp(-std::log(w) / fam.alpha);
        }
      },
      f);
}

double inverse_survival_log(const ContinuousFamily& f, double log_r) {
  if (!(log_r < 0.0)) {
    throw std::domain_error("inverse_survival_log: requires log_r < 0");
  }
  return std::visit(
      [log_r](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ExponentialFamily>) {
          return -log_r / fam.rate;
        } else if constexpr (std::is_same_v<T, SemiWeibullFamily>) {
          return fam.hazard.inverse(-log_r);
        } else if constexpr (std::is_same_v<T, GeneralizedSemiParetoFamily>) {
          return fam.hazard.inverse(std::expm1(-log_r / fam.beta));
        } else {
          // log w with w = 1 - e^{log_r}; then x^{-alpha} = w^{-k} - 1
          const double log_w = log1mexp(log_r);
          const double xa =
              std::expm1(-static_cast<double>(fam.k) * log_w);
          return std::exp(-std::log(xa) / fam.alpha);
        }
      },
      f);
}

double sample(const ContinuousFamily& f, Rng& rng) {
  return quantile(f, rng.uniform01());
}

const PeriodicHazard* hazard_of(const ContinuousFamily& f) {
  if (const auto* sw = std::get_if<SemiWeibullFamily>(&f)) return &sw->hazard;
  if (const auto* gsp = std::get_if<GeneralizedSemiParetoFamily>(&f)) {
    return &gsp->hazard;
  }
  return nullptr;
}

std::string describe(const ContinuousFamily& f) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ExponentialFamily>) {
          out << "exponential(rate=" << fam.rate << ")";
        } else if constexpr (std::is_same_v<T, SemiWeibullFamily>) {
          out << "semi-weibull(alpha=" << fam.hazard.alpha()
              << ",p=" << fam.hazard.p() << ",eps=" << fam.hazard.eps()
              << ",phase=" << fam.hazard.phase() << ")";
        } else if constexpr (std::is_same_v<T, GeneralizedSemiParetoFamily>) {
          out << (fam.beta == 1.0 ? "semi-pareto(" : "gsp(")
              << "alpha=" << fam.hazard.alpha() << ",p=" << fam.hazard.p()
              << ",eps=" << fam.hazard.eps() << ",phase=" << fam.hazard.phase();
          if (fam.beta != 1.0) out << ",beta=" << fam.beta;
          out << ")";
        } else {
          out << "ext-log-logistic(alpha=" << fam.alpha << ",k=" << fam.k
              << ")";
        }
      },
      f);
  return out.str();
}

}  // namespace nstab
