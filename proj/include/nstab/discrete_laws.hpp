#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "nstab/rng.hpp"

namespace nstab {

// Raised when an inverse-transform sampler lands beyond the integer cap.
// Heavy-tailed laws (Sibuya has infinite mean) can in principle produce
// indices past 2^62; such draws are reported, never silently truncated.
class SampleOverflowError : public std::runtime_error {
 public:
  explicit SampleOverflowError(const std::string& what)
      : std::runtime_error(what) {}
};

inline constexpr std::int64_t kSampleIndexCap = std::int64_t{1} << 62;

enum class Support : std::uint8_t {
  kZeroBased,  // {0, 1, 2, ...}
  kOneBased,   // {1, 2, 3, ...}
};

// Sibuya(v): P(N > n) = prod_{j<=n} (1 - v/j), PGF 1 - (1-s)^v, 0 < v < 1.
// Infinite mean; tail P(N > n) ~ n^{-v}.
struct SibuyaLaw {
  double v;
};

// Harris(a, k): PGF s / [a - (a-1) s^k]^{1/k}, support {1, k+1, 2k+1, ...}.
// Harris(a, 1) is geometric(1/a) on {1, 2, ...}.
struct HarrisLaw {
  double a;
  std::int64_t k;
};

struct GeometricLaw {
  double q;
  Support support;
};

struct DegenerateLaw {
  std::int64_t k;
};

using DiscreteLaw =
    std::variant<SibuyaLaw, HarrisLaw, GeometricLaw, DegenerateLaw>;

// Validating constructors.
DiscreteLaw sibuya(double v);
DiscreteLaw harris(double a, std::int64_t k);
DiscreteLaw geometric(double q, Support support);
DiscreteLaw degenerate(std::int64_t k);

// Q(s) = E[s^N] for s in [0, 1]. Q(1) == 1 exactly; Q(0) == 0 exactly for
// laws supported on {1, 2, ...}.
double pgf(const DiscreteLaw& law, double s);

// 1 - Q(1 - r) for r in [0, 1], in closed forms that avoid reconstructing
// 1 - s near s = 1. Max-stability residuals evaluate the identity in this
// complement form so survival-scale quantities never pass through cdf
// round-off (Sibuya's Q has unbounded slope at s = 1).
double pgf_complement(const DiscreteLaw& law, double r);

// P(N = n); returns 0 outside the support.
double pmf(const DiscreteLaw& law, std::int64_t n);

// P(N > n), n >= 0.
double survival(const DiscreteLaw& law, std::int64_t n);
double log_survival(const DiscreteLaw& law, std::int64_t n);

// Exact inverse-transform draw. O(log N) for Sibuya via binary search on
// the log-survival function; Harris reduces to a negative binomial with
// shape 1/k and success probability 1/a (N = k*M + 1).
std::int64_t sample(const DiscreteLaw& law, Rng& rng);

// Smallest point of the support.
std::int64_t support_min(const DiscreteLaw& law);

std::string describe(const DiscreteLaw& law);

}  // namespace nstab
