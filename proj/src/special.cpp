#include "nstab/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nstab {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double log_binomial_rising(double r, std::int64_t n) {
  if (!(r > 0.0)) throw std::domain_error("log_binomial_rising: requires r > 0");
  if (n < 0) throw std::domain_error("log_binomial_rising: requires n >= 0");
  if (n == 0) return 0.0;
  const double nn = static_cast<double>(n);
  return std::lgamma(nn + r) - std::lgamma(r) - std::lgamma(nn + 1.0);
}

double log1mexp(double t) {
  if (!(t < 0.0)) throw std::domain_error("log1mexp: requires t < 0");
  constexpr double kLn2 = 0.6931471805599453;
  return t > -kLn2 ? std::log(-std::expm1(t)) : std::log1p(-std::exp(t));
}

namespace {

// Lower regularized gamma P(a, x) by power series.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by modified Lentz continued fraction.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("regularized_gamma_q: requires a > 0");
  if (x < 0.0) throw std::domain_error("regularized_gamma_q: requires x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_pvalue(double statistic, int dof) {
  if (dof <= 0) throw std::domain_error("chi_square_pvalue: requires dof > 0");
  if (statistic <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * dof, 0.5 * statistic);
}

double ks_critical_value(std::size_t n, double significance) {
  if (n == 0) throw std::domain_error("ks_critical_value: requires n > 0");
  double c;
  if (significance == 0.01) {
    c = 1.63;
  } else if (significance == 0.05) {
    c = 1.36;
  } else if (significance == 0.10) {
    c = 1.22;
  } else {
    throw std::domain_error("ks_critical_value: unsupported significance level");
  }
  return c / std::sqrt(static_cast<double>(n));
}

}  // namespace nstab
