#include "nstab/hazard.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nstab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PeriodicHazard::PeriodicHazard(double alpha, double p, double eps, double phase)
    : alpha_(alpha), p_(p), eps_(eps), phase_(phase) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("periodic_hazard: requires alpha > 0");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("periodic_hazard: requires 0 < p < 1");
  }
  if (!(std::abs(eps) <= eps_bound(p))) {
    throw std::invalid_argument(
        "periodic_hazard: |eps| exceeds the monotonicity bound ln(1/p)/(2*pi)");
  }
  phase_ = std::fmod(phase, kTwoPi);
  if (phase_ < 0.0) phase_ += kTwoPi;
  period_ = std::log(1.0 / p) / alpha;
}

double PeriodicHazard::eps_bound(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("eps_bound: requires 0 < p < 1");
  }
  return std::log(1.0 / p) / kTwoPi;
}

double PeriodicHazard::log_value(double x) const {
  if (!(x > 0.0)) throw std::domain_error("hazard: requires x > 0");
  const double lx = std::log(x);
  if (eps_ == 0.0) return alpha_ * lx;
  return alpha_ * lx + eps_ * std::sin(kTwoPi * lx / period_ + phase_);
}

double PeriodicHazard::value(double x) const { return std::exp(log_value(x)); }

double PeriodicHazard::inverse(double w) const {
  if (!(w > 0.0)) throw std::domain_error("hazard inverse: requires w > 0");
  return inverse_log(std::log(w));
}

double PeriodicHazard::inverse_log(double log_w) const {
  if (eps_ == 0.0) return std::exp(log_w / alpha_);
  // Solve g(u) = alpha*u + eps*sin(2*pi*u/T + phase) - log_w = 0 in u = ln x.
  // g is nondecreasing (that is the eps bound), so bisection cannot fail
  // once the bracket holds.
  const double log_p = std::log(p_);
  double lo = (log_w + log_p) / alpha_;
  double hi = (log_w - log_p) / alpha_;
  const auto g = [&](double u) {
    return alpha_ * u + eps_ * std::sin(kTwoPi * u / period_ + phase_) - log_w;
  };
  if (!(g(lo) <= 0.0 && g(hi) >= 0.0)) {
    throw std::runtime_error("hazard inverse: bracket failed (invariant violation)");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo) + std::abs(hi));
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace nstab
