#include "nstab/discrete_laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>

#include "nstab/special.hpp"

namespace nstab {

namespace {

void check_unit_interval(double s, const char* fn) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error(std::string(fn) + ": argument must lie in [0, 1]");
  }
}

// log P(N > n) for Sibuya(v). Direct log-gamma differences lose absolute
// accuracy once lgamma(n) itself is ~1/eps, so switch to the ratio
// asymptotic log Gamma(n+1-v) - log Gamma(n+1) = -v log n - v(1-v)/(2n) + ...
// well before that.
double sibuya_log_survival(double v, std::int64_t n) {
  if (n <= 0) return 0.0;
  const double nn = static_cast<double>(n);
  if (n > 100000000) {
    return -v * std::log(nn) - v * (1.0 - v) / (2.0 * nn) - std::lgamma(1.0 - v);
  }
  return std::lgamma(nn + 1.0 - v) - std::lgamma(1.0 - v) - std::lgamma(nn + 1.0);
}

std::int64_t sample_sibuya(const SibuyaLaw& law, Rng& rng) {
  const double log_u = std::log(rng.uniform01());
  // N = min{ n >= 1 : S(n) <= u }, with S(0) = 1 > u always.
  if (sibuya_log_survival(law.v, 1) <= log_u) return 1;
  std::int64_t lo = 1;  // S(lo) > u
  std::int64_t hi = 2;
  while (sibuya_log_survival(law.v, hi) > log_u) {
    lo = hi;
    if (hi >= kSampleIndexCap) {
      std::ostringstream msg;
      msg << "sample(sibuya v=" << law.v
          << "): index beyond the 2^62 cap (tail probability < 2^-" << 62.0 * law.v
          << ")";
      throw SampleOverflowError(msg.str());
    }
    hi = (hi > kSampleIndexCap / 2) ? kSampleIndexCap : hi * 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (sibuya_log_survival(law.v, mid) > log_u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// M ~ negative binomial, shape r = 1/k, success probability p = 1/a, by
// sequential inversion with the pmf recurrence. Finite mean (a-1)/k keeps
// the expected iteration count small.
std::int64_t sample_harris(const HarrisLaw& law, Rng& rng) {
  const double r = 1.0 / static_cast<double>(law.k);
  const double fail = (law.a - 1.0) / law.a;
  const double u = rng.uniform01();
  double prob = std::exp(-r * std::log(law.a));  // P(M = 0) = a^{-1/k}
  double cdf = prob;
  std::int64_t m = 0;
  while (cdf < u) {
    prob *= (static_cast<double>(m) + r) / (static_cast<double>(m) + 1.0) * fail;
    cdf += prob;
    ++m;
    if (m > kSampleIndexCap / law.k - 1) {
      throw SampleOverflowError("sample(harris): index beyond 2^62 cap");
    }
    if (prob == 0.0 && cdf < u) {
      // u fell into round-off beyond the representable tail.
      break;
    }
  }
  return law.k * m + 1;
}

std::int64_t sample_geometric(const GeometricLaw& law, Rng& rng) {
  // floor(log U / log(1-q)) is geometric on {0, 1, ...}.
  const double u = rng.uniform01();
  const double x = std::floor(std::log(u) / std::log1p(-law.q));
  if (!(x < static_cast<double>(kSampleIndexCap))) {
    throw SampleOverflowError("sample(geometric): index beyond 2^62 cap");
  }
  const std::int64_t n = static_cast<std::int64_t>(x);
  return law.support == Support::kZeroBased ? n : n + 1;
}

}  // namespace

DiscreteLaw sibuya(double v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument("sibuya: requires 0 < v < 1");
  }
  return SibuyaLaw{v};
}

DiscreteLaw harris(double a, std::int64_t k) {
  if (!(a > 1.0)) throw std::invalid_argument("harris: requires a > 1");
  if (k < 1) throw std::invalid_argument("harris: requires k >= 1");
  return HarrisLaw{a, k};
}

DiscreteLaw geometric(double q, Support support) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("geometric: requires 0 < q < 1");
  }
  return GeometricLaw{q, support};
}

DiscreteLaw degenerate(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("degenerate: requires k >= 1");
  return DegenerateLaw{k};
}

double pgf(const DiscreteLaw& law, double s) {
  check_unit_interval(s, "pgf");
  return std::visit(
      [s](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          return 1.0 - std::pow(1.0 - s, l.v);
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          if (s == 0.0) return 0.0;
          const double denom =
              l.a - (l.a - 1.0) * std::pow(s, static_cast<double>(l.k));
          return s * std::pow(denom, -1.0 / static_cast<double>(l.k));
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          const double denom = l.q + (1.0 - l.q) * (1.0 - s);
          return l.support == Support::kZeroBased ? l.q / denom
                                                  : l.q * s / denom;
        } else {
          return std::pow(s, static_cast<double>(l.k));
        }
      },
      law);
}

double pgf_complement(const DiscreteLaw& law, double r) {
  check_unit_interval(r, "pgf_complement");
  return std::visit(
      [r](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          return std::pow(r, l.v);
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          // 1 - (1-r) * [1 + (a-1) w]^{-1/k},  w = 1 - (1-r)^k.
          const double k = static_cast<double>(l.k);
          const double w = -std::expm1(k * std::log1p(-r));
          return 1.0 - (1.0 - r) * std::pow(1.0 + (l.a - 1.0) * w, -1.0 / k);
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          const double denom = l.q + (1.0 - l.q) * r;
          return l.support == Support::kZeroBased ? (1.0 - l.q) * r / denom
                                                  : r / denom;
        } else {
          return -std::expm1(static_cast<double>(l.k) * std::log1p(-r));
        }
      },
      law);
}

double pmf(const DiscreteLaw& law, std::int64_t n) {
  if (n < 0) throw std::domain_error("pmf: requires n >= 0");
  return std::visit(
      [n](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          if (n < 1) return 0.0;
          // P(N = n) = (v/n) P(N > n-1).
          return std::exp(std::log(l.v) - std::log(static_cast<double>(n)) +
                          sibuya_log_survival(l.v, n - 1));
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          if (n < 1 || (n - 1) % l.k != 0) return 0.0;
          const std::int64_t m = (n - 1) / l.k;
          const double r = 1.0 / static_cast<double>(l.k);
          const double log_p = -r * std::log(l.a) +
                               log_binomial_rising(r, m) +
                               static_cast<double>(m) *
                                   (std::log(l.a - 1.0) - std::log(l.a));
          return std::exp(log_p);
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          const std::int64_t j =
              l.support == Support::kZeroBased ? n : n - 1;
          if (j < 0) return 0.0;
          return std::exp(std::log(l.q) +
                          static_cast<double>(j) * std::log1p(-l.q));
        } else {
          return n == l.k ? 1.0 : 0.0;
        }
      },
      law);
}

double log_survival(const DiscreteLaw& law, std::int64_t n) {
  if (n < 0) throw std::domain_error("log_survival: requires n >= 0");
  return std::visit(
      [n](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          return sibuya_log_survival(l.v, n);
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          // Accumulate P(N <= n) over the lattice; log of the complement.
          double tail = 1.0;
          const double r = 1.0 / static_cast<double>(l.k);
          const double fail = (l.a - 1.0) / l.a;
          double prob = std::exp(-r * std::log(l.a));
          for (std::int64_t m = 0; l.k * m + 1 <= n; ++m) {
            if (m > 0) {
              prob *= (static_cast<double>(m - 1) + r) /
                      static_cast<double>(m) * fail;
            }
            tail -= prob;
          }
          return std::log(std::max(tail, 0.0));
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          const std::int64_t j =
              l.support == Support::kZeroBased ? n + 1 : n;
          if (j <= 0) return 0.0;
          return static_cast<double>(j) * std::log1p(-l.q);
        } else {
          return n >= l.k ? -std::numeric_limits<double>::infinity() : 0.0;
        }
      },
      law);
}

double survival(const DiscreteLaw& law, std::int64_t n) {
  return std::exp(log_survival(law, n));
}

std::int64_t sample(const DiscreteLaw& law, Rng& rng) {
  return std::visit(
      [&rng](const auto& l) -> std::int64_t {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          return sample_sibuya(l, rng);
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          return sample_harris(l, rng);
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          return sample_geometric(l, rng);
        } else {
          return l.k;
        }
      },
      law);
}

std::int64_t support_min(const DiscreteLaw& law) {
  return std::visit(
      [](const auto& l) -> std::int64_t {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, GeometricLaw>) {
          return l.support == Support::kZeroBased ? 0 : 1;
        } else if constexpr (std::is_same_v<T, DegenerateLaw>) {
          return l.k;
        } else {
          return 1;
        }
      },
      law);
}

std::string describe(const DiscreteLaw& law) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SibuyaLaw>) {
          out << "sibuya(v=" << l.v << ")";
        } else if constexpr (std::is_same_v<T, HarrisLaw>) {
          out << "harris(a=" << l.a << ",k=" << l.k << ")";
        } else if constexpr (std::is_same_v<T, GeometricLaw>) {
          out << "geometric(q=" << l.q << ","
              << (l.support == Support::kZeroBased ? "i0" : "i1") << ")";
        } else {
          out << "degenerate(k=" << l.k << ")";
        }
      },
      law);
  return out.str();
}

}  // namespace nstab
