#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "nstab/continuous_families.hpp"
#include "nstab/discrete_families.hpp"
#include "nstab/discrete_laws.hpp"

namespace nstab {

enum class StabilityMode : std::uint8_t { kMax, kMin };

std::string to_string(StabilityMode mode);

enum class Execution : std::uint8_t { kSerial, kParallel };

// Log-spaced evaluation points for continuous distribution functions.
struct LogGrid {
  double min = 1e-3;
  double max = 1e3;
  int points = 200;
};

// Integer points {0, 1, ..., max_index} for discretized distribution
// functions; the scaled side of the identity is evaluated at c*j through
// the continuous extension of the survival function.
struct IntegerGrid {
  std::int64_t max_index = 200;
};

using GridSpec = std::variant<LogGrid, IntegerGrid>;

using StabilityTarget = std::variant<ContinuousFamily, DiscretizedFamily>;

std::string describe(const StabilityTarget& target);

// One verification instance of the stability identity
//   max:  Q[F(x)] = F(c x)    (residuals evaluated in survival form)
//   min:  Q[R(c x)] = R(x)
// for a distribution function F (continuous or discretized), a sampling law
// N with PGF Q, and a scaling constant c in (0, 1).
struct StabilityProblem {
  StabilityTarget family;
  DiscreteLaw law;
  StabilityMode mode;
  double c;
};

// Validates c in (0, 1).
StabilityProblem make_problem(StabilityTarget family, DiscreteLaw law,
                              StabilityMode mode, double c);

struct StabilityReport {
  std::string pairing;   // registry id, or "ad-hoc"
  std::string category;  // "positive", "control:wrong-c", ...
  std::string family;
  std::string law;
  std::string mode;
  bool discrete = false;
  double c = 0.0;
  double tolerance = 0.0;
  // For controls: the residual floor a genuine negative must exceed.
  double control_threshold = 0.0;
  std::vector<double> grid;
  std::vector<double> residuals;
  double sup_residual = 0.0;
  bool pass = false;           // sup_residual < tolerance
  bool expected_pass = true;   // controls expect a failure
  bool ok = false;             // behaves as expected
};

// Pointwise |LHS - RHS| of the stability identity over the grid.
std::vector<double> residual_field(const StabilityProblem& problem,
                                   const GridSpec& grid,
                                   Execution exec = Execution::kParallel);

StabilityReport verify_stability(const StabilityProblem& problem,
                                 const GridSpec& grid, double tolerance,
                                 Execution exec = Execution::kParallel);

// The scaling constant prescribed by the known characterizations for this
// family/law/mode, derived from the parameter links (e.g. c = v for the
// exponential-Sibuya max pairing, c^alpha = p for the hazard families,
// a = c^{-alpha} for the extended log-logistic). Throws std::invalid_argument
// when the triple matches no characterization or the parameters break the
// required link.
double stability_constant(const StabilityTarget& family, const DiscreteLaw& law,
                          StabilityMode mode);

// Hazard variation knob for the registry: eps = eps_frac * eps_bound(p).
// Registry entries built on a periodic hazard accept any |eps_frac| <= 1 and
// any phase; the identities hold for every admissible hazard, not only the
// classical eps = 0 subfamily. Discretized entries stay at eps = 0, where
// complete monotonicity of the survival sequence is guaranteed.
struct HazardChoice {
  double eps_frac = 0.0;
  double phase = 0.0;
};

struct RegistryEntry {
  std::string id;
  std::string note;  // parameter linkage in words
  bool discrete = false;
  bool has_hazard = false;  // responds to HazardChoice
  std::function<StabilityProblem(const HazardChoice&)> make;
};

// The positive pairings: every family/law/mode triple the characterizations
// assert, with canonical parameters and the prescribed c.
const std::vector<RegistryEntry>& registry();

struct ControlEntry {
  std::string id;
  std::string base_pairing;
  std::string kind;  // "wrong-c" | "wrong-mode" | "wrong-law"
  std::function<StabilityProblem(const HazardChoice&)> make;
};

// Perturbed variants that must fail: c scaled by 1.05, flipped mode, or a
// substituted law. Mode flips are omitted for the semi-Pareto/geometric
// pairings, where both directions are genuinely stable.
const std::vector<ControlEntry>& negative_controls();

struct SuiteOptions {
  double tolerance = 1e-10;
  double control_threshold = 1e-4;
  LogGrid log_grid{};
  IntegerGrid integer_grid{};
  HazardChoice hazard{};
  bool include_controls = true;
  Execution exec = Execution::kParallel;
};

// Runs every positive pairing and (optionally) every negative control;
// failures are data, not exceptions. Reports come back in registry order.
std::vector<StabilityReport> registry_suite(const SuiteOptions& options = {});

}  // namespace nstab
