#include "nstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nstab {

std::string to_string(StabilityMode mode) {
  return mode == StabilityMode::kMax ? "max" : "min";
}

std::string describe(const StabilityTarget& target) {
  if (const auto* cont = std::get_if<ContinuousFamily>(&target)) {
    return describe(*cont);
  }
  return std::get<DiscretizedFamily>(target).describe();
}

StabilityProblem make_problem(StabilityTarget family, DiscreteLaw law,
                              StabilityMode mode, double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument("stability problem: requires 0 < c < 1");
  }
  return StabilityProblem{std::move(family), std::move(law), mode, c};
}

namespace {

std::vector<double> grid_points(const StabilityProblem& problem,
                                const GridSpec& grid) {
  if (const auto* lg = std::get_if<LogGrid>(&grid)) {
    if (!std::holds_alternative<ContinuousFamily>(problem.family)) {
      throw std::invalid_argument(
          "residual_field: log grid requires a continuous family");
    }
    if (!(lg->min > 0.0 && lg->max > lg->min) || lg->points < 2) {
      throw std::invalid_argument("residual_field: malformed log grid");
    }
    std::vector<double> xs(static_cast<std::size_t>(lg->points));
    const double l0 = std::log(lg->min);
    const double l1 = std::log(lg->max);
    for (int i = 0; i < lg->points; ++i) {
      xs[static_cast<std::size_t>(i)] =
          std::exp(l0 + (l1 - l0) * i / (lg->points - 1));
    }
    return xs;
  }
  const auto& ig = std::get<IntegerGrid>(grid);
  if (!std::holds_alternative<DiscretizedFamily>(problem.family)) {
    throw std::invalid_argument(
        "residual_field: integer grid requires a discretized family");
  }
  if (ig.max_index < 1) {
    throw std::invalid_argument("residual_field: malformed integer grid");
  }
  std::vector<double> xs(static_cast<std::size_t>(ig.max_index) + 1);
  for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = static_cast<double>(j);
  return xs;
}

// Both sides of the identity evaluated on the survival scale. The max-mode
// identity Q[F(x)] = F(cx) is checked as 1 - Q(1 - r) = r_c with
// r = R(x), r_c = R(cx): identical in exact arithmetic, but it never
// reconstructs a survival value from a cdf rounded to 1, which matters for
// Sibuya's Q whose slope at s = 1 is unbounded.
double residual_at(const StabilityProblem& problem, double x) {
  const auto survival_pair = [&](double point) -> std::pair<double, double> {
    if (const auto* cont = std::get_if<ContinuousFamily>(&problem.family)) {
      return {survival(*cont, point), survival(*cont, problem.c * point)};
    }
    const auto& disc = std::get<DiscretizedFamily>(problem.family);
    return {disc.survival_ext(point), disc.survival_ext(problem.c * point)};
  };
  const auto [r, r_scaled] = survival_pair(x);
  if (problem.mode == StabilityMode::kMax) {
    return std::abs(pgf_complement(problem.law, r) - r_scaled);
  }
  return std::abs(pgf(problem.law, r_scaled) - r);
}

}  // namespace

std::vector<double> residual_field(const StabilityProblem& problem,
                                   const GridSpec& grid, Execution exec) {
  const std::vector<double> xs = grid_points(problem, grid);
  std::vector<double> out(xs.size());
  const auto n = static_cast<std::int64_t>(xs.size());
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] =
          residual_at(problem, xs[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] =
          residual_at(problem, xs[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

StabilityReport verify_stability(const StabilityProblem& problem,
                                 const GridSpec& grid, double tolerance,
                                 Execution exec) {
  StabilityReport report;
  report.pairing = "ad-hoc";
  report.category = "positive";
  report.family = describe(problem.family);
  report.law = describe(problem.law);
  report.mode = to_string(problem.mode);
  report.discrete = std::holds_alternative<DiscretizedFamily>(problem.family);
  report.c = problem.c;
  report.tolerance = tolerance;
  report.grid = grid_points(problem, grid);
  report.residuals = residual_field(problem, grid, exec);
  report.sup_residual = 0.0;
  for (double r : report.residuals) report.sup_residual = std::max(report.sup_residual, r);
  report.pass = report.sup_residual < tolerance;
  report.expected_pass = true;
  report.ok = report.pass;
  return report;
}

namespace {

constexpr double kLinkTolerance = 1e-9;

bool nearly(double a, double b) { return std::abs(a - b) <= kLinkTolerance; }

double hazard_constant(const PeriodicHazard& hazard) {
  // c^alpha = p
  return std::exp(std::log(hazard.p()) / hazard.alpha());
}

double constant_for_continuous(const ContinuousFamily& family,
                               const DiscreteLaw& law, StabilityMode mode) {
  if (const auto* exp_family = std::get_if<ExponentialFamily>(&family)) {
    (void)exp_family;  // any rate: the identity is scale-free
    if (const auto* sib = std::get_if<SibuyaLaw>(&law);
        sib != nullptr && mode == StabilityMode::kMax) {
      return sib->v;
    }
    if (const auto* deg = std::get_if<DegenerateLaw>(&law);
        deg != nullptr && mode == StabilityMode::kMin) {
      if (deg->k < 2) {
        throw std::invalid_argument(
            "stability_constant: a degenerate stabilizing law needs k > 1 "
            "(c = 1/k must lie in (0,1))");
      }
      return 1.0 / static_cast<double>(deg->k);
    }
  } else if (const auto* sw = std::get_if<SemiWeibullFamily>(&family)) {
    if (const auto* sib = std::get_if<SibuyaLaw>(&law);
        sib != nullptr && mode == StabilityMode::kMax) {
      if (!nearly(sib->v, sw->hazard.p())) {
        throw std::invalid_argument(
            "stability_constant: semi-weibull/sibuya requires v = p");
      }
      return hazard_constant(sw->hazard);
    }
    if (const auto* deg = std::get_if<DegenerateLaw>(&law);
        deg != nullptr && mode == StabilityMode::kMin) {
      if (deg->k < 2 ||
          !nearly(sw->hazard.p() * static_cast<double>(deg->k), 1.0)) {
        throw std::invalid_argument(
            "stability_constant: semi-weibull/degenerate requires p*k = 1, "
            "k > 1");
      }
      return hazard_constant(sw->hazard);
    }
  } else if (const auto* gsp =
                 std::get_if<GeneralizedSemiParetoFamily>(&family)) {
    if (const auto* har = std::get_if<HarrisLaw>(&law);
        har != nullptr && mode == StabilityMode::kMin) {
      if (!nearly(har->a * gsp->hazard.p(), 1.0) ||
          !nearly(gsp->beta * static_cast<double>(har->k), 1.0)) {
        throw std::invalid_argument(
            "stability_constant: gsp/harris requires a*p = 1 and beta*k = 1");
      }
      return hazard_constant(gsp->hazard);
    }
    if (const auto* geo = std::get_if<GeometricLaw>(&law)) {
      // Semi-Pareto (beta = 1) is geometric-stable in both directions.
      if (geo->support != Support::kOneBased) {
        throw std::invalid_argument(
            "stability_constant: a stabilizing geometric law must be "
            "supported on {1,2,...} (P(N=0) = 0 is forced by the identity)");
      }
      if (!nearly(gsp->beta, 1.0) || !nearly(geo->q, gsp->hazard.p())) {
        throw std::invalid_argument(
            "stability_constant: semi-pareto/geometric requires beta = 1 "
            "and q = p");
      }
      return hazard_constant(gsp->hazard);
    }
  } else if (const auto* ell =
                 std::get_if<ExtendedLogLogisticFamily>(&family)) {
    if (const auto* har = std::get_if<HarrisLaw>(&law);
        har != nullptr && mode == StabilityMode::kMax) {
      if (har->k != ell->k) {
        throw std::invalid_argument(
            "stability_constant: ext-log-logistic/harris requires matching k");
      }
      // a = c^{-alpha}; every c in (0,1) works once a is linked this way.
      return std::exp(-std::log(har->a) / ell->alpha);
    }
  }
  throw std::invalid_argument(
      "stability_constant: no known pairing for this family/law/mode");
}

}  // namespace

double stability_constant(const StabilityTarget& family, const DiscreteLaw& law,
                          StabilityMode mode) {
  if (const auto* cont = std::get_if<ContinuousFamily>(&family)) {
    return constant_for_continuous(*cont, law, mode);
  }
  return constant_for_continuous(std::get<DiscretizedFamily>(family).base(),
                                 law, mode);
}

namespace {

PeriodicHazard make_hazard(double alpha, double p, const HazardChoice& choice) {
  return PeriodicHazard(alpha, p,
                        choice.eps_frac * PeriodicHazard::eps_bound(p),
                        choice.phase);
}

StabilityProblem make_from_constant(StabilityTarget family, DiscreteLaw law,
                                    StabilityMode mode) {
  const double c = stability_constant(family, law, mode);
  return make_problem(std::move(family), std::move(law), mode, c);
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> entries;
  const HazardChoice no_hazard{};

  entries.push_back(
      {"exponential-sibuya-max", "c = v", false, false,
       [](const HazardChoice&) {
         return make_from_constant(exponential(1.0), sibuya(0.5),
                                   StabilityMode::kMax);
       }});
  entries.push_back(
      {"exponential-degenerate-min", "c = 1/k", false, false,
       [](const HazardChoice&) {
         return make_from_constant(exponential(1.0), degenerate(3),
                                   StabilityMode::kMin);
       }});
  entries.push_back(
      {"semi-weibull-sibuya-max", "v = p, c^alpha = p", false, true,
       [](const HazardChoice& h) {
         return make_from_constant(semi_weibull(make_hazard(1.5, 0.4, h)),
                                   sibuya(0.4), StabilityMode::kMax);
       }});
  entries.push_back(
      {"semi-weibull-degenerate-min", "p*k = 1, c^alpha = p", false, true,
       [](const HazardChoice& h) {
         return make_from_constant(semi_weibull(make_hazard(1.5, 0.25, h)),
                                   degenerate(4), StabilityMode::kMin);
       }});
  entries.push_back(
      {"gsp-harris-min", "a*p = 1, beta*k = 1, c^alpha = p", false, true,
       [](const HazardChoice& h) {
         return make_from_constant(
             generalized_semi_pareto(make_hazard(1.0, 1.0 / 3.0, h), 0.5),
             harris(3.0, 2), StabilityMode::kMin);
       }});
  entries.push_back(
      {"ext-log-logistic-harris-max", "a = c^{-alpha}, shared k", false, false,
       [](const HazardChoice&) {
         const double alpha = 1.2;
         const double c = 0.55;
         return make_from_constant(extended_log_logistic(alpha, 2),
                                   harris(std::exp(-alpha * std::log(c)), 2),
                                   StabilityMode::kMax);
       }});
  entries.push_back(
      {"semi-pareto-geometric-min", "q = p, c^alpha = p", false, true,
       [](const HazardChoice& h) {
         return make_from_constant(semi_pareto(make_hazard(1.3, 0.3, h)),
                                   geometric(0.3, Support::kOneBased),
                                   StabilityMode::kMin);
       }});
  entries.push_back(
      {"discrete-gsp-harris-min",
       "alpha < 1, a*p = 1 = beta*k, c^alpha = p", true, false,
       [no_hazard](const HazardChoice&) {
         return make_from_constant(
             discretize(generalized_semi_pareto(
                 make_hazard(0.7, 1.0 / 3.0, no_hazard), 0.5)),
             harris(3.0, 2), StabilityMode::kMin);
       }});
  entries.push_back(
      {"discrete-semi-weibull-sibuya-max", "alpha < 1, v = p, c^alpha = p",
       true, false,
       [no_hazard](const HazardChoice&) {
         return make_from_constant(
             discretize(semi_weibull(make_hazard(0.5, 0.4, no_hazard))),
             sibuya(0.4), StabilityMode::kMax);
       }});
  entries.push_back(
      {"geometric-i0-sibuya-max", "m(j) = theta^j, c = v", true, false,
       [](const HazardChoice&) {
         return make_from_constant(discretize(exponential(std::log(2.0))),
                                   sibuya(0.5), StabilityMode::kMax);
       }});
  entries.push_back(
      {"geometric-i0-degenerate-min", "m(j) = theta^j, c = 1/k", true, false,
       [](const HazardChoice&) {
         return make_from_constant(discretize(exponential(std::log(2.0))),
                                   degenerate(2), StabilityMode::kMin);
       }});
  entries.push_back(
      {"discrete-semi-pareto-geometric-min", "alpha < 1, q = p, c^alpha = p",
       true, false,
       [no_hazard](const HazardChoice&) {
         return make_from_constant(
             discretize(semi_pareto(make_hazard(0.6, 0.35, no_hazard))),
             geometric(0.35, Support::kOneBased), StabilityMode::kMin);
       }});
  entries.push_back(
      {"discrete-semi-pareto-geometric-max", "alpha < 1, q = p, c^alpha = p",
       true, false,
       [no_hazard](const HazardChoice&) {
         return make_from_constant(
             discretize(semi_pareto(make_hazard(0.6, 0.35, no_hazard))),
             geometric(0.35, Support::kOneBased), StabilityMode::kMax);
       }});
  return entries;
}

StabilityMode flipped(StabilityMode mode) {
  return mode == StabilityMode::kMax ? StabilityMode::kMin : StabilityMode::kMax;
}

std::vector<ControlEntry> build_controls() {
  std::vector<ControlEntry> controls;
  const auto& entries = registry();

  for (const auto& entry : entries) {
    controls.push_back(
        {entry.id + "/wrong-c", entry.id, "wrong-c",
         [make = entry.make](const HazardChoice& h) {
           StabilityProblem p = make(h);
           double c = p.c * 1.05;
           if (c >= 1.0) c = p.c * 0.95;
           return make_problem(p.family, p.law, p.mode, c);
         }});
  }

  // Mode flips, except where the flipped identity genuinely holds
  // (semi-Pareto laws are geometric-stable in both directions).
  for (const auto& entry : entries) {
    if (entry.id == "semi-pareto-geometric-min" ||
        entry.id == "discrete-semi-pareto-geometric-min" ||
        entry.id == "discrete-semi-pareto-geometric-max") {
      continue;
    }
    controls.push_back({entry.id + "/wrong-mode", entry.id, "wrong-mode",
                        [make = entry.make](const HazardChoice& h) {
                          StabilityProblem p = make(h);
                          return make_problem(p.family, p.law,
                                              flipped(p.mode), p.c);
                        }});
  }

  const auto substituted = [&entries](const std::string& id,
                                      DiscreteLaw replacement) {
    const auto it = std::find_if(
        entries.begin(), entries.end(),
        [&id](const RegistryEntry& e) { return e.id == id; });
    return ControlEntry{
        id + "/wrong-law", id, "wrong-law",
        [make = it->make, replacement](const HazardChoice& h) {
          StabilityProblem p = make(h);
          return make_problem(p.family, replacement, p.mode, p.c);
        }};
  };

  controls.push_back(substituted("exponential-sibuya-max",
                                 geometric(0.5, Support::kOneBased)));
  controls.push_back(substituted("exponential-degenerate-min", sibuya(0.5)));
  controls.push_back(substituted("semi-weibull-sibuya-max", degenerate(3)));
  controls.push_back(substituted("semi-weibull-degenerate-min",
                                 geometric(0.25, Support::kOneBased)));
  controls.push_back(substituted("gsp-harris-min",
                                 geometric(1.0 / 3.0, Support::kOneBased)));
  controls.push_back(substituted("ext-log-logistic-harris-max", sibuya(0.5)));
  controls.push_back(substituted("semi-pareto-geometric-min",
                                 harris(1.0 / 0.3, 2)));
  controls.push_back(substituted("discrete-gsp-harris-min",
                                 geometric(1.0 / 3.0, Support::kOneBased)));
  controls.push_back(substituted("discrete-semi-weibull-sibuya-max",
                                 geometric(0.4, Support::kOneBased)));
  controls.push_back(substituted("geometric-i0-sibuya-max", degenerate(2)));
  controls.push_back(substituted("geometric-i0-degenerate-min", sibuya(0.5)));
  // Zero-based support must not stabilize: the identity forces P(N=0) = 0.
  controls.push_back(substituted("discrete-semi-pareto-geometric-min",
                                 geometric(0.35, Support::kZeroBased)));
  controls.push_back(substituted("discrete-semi-pareto-geometric-max",
                                 sibuya(0.35)));
  return controls;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

const std::vector<ControlEntry>& negative_controls() {
  static const std::vector<ControlEntry> controls = build_controls();
  return controls;
}

std::vector<StabilityReport> registry_suite(const SuiteOptions& options) {
  std::vector<StabilityReport> reports;
  const auto grid_for = [&options](const StabilityProblem& p) -> GridSpec {
    if (std::holds_alternative<DiscretizedFamily>(p.family)) {
      return options.integer_grid;
    }
    return options.log_grid;
  };

  for (const auto& entry : registry()) {
    const StabilityProblem problem = entry.make(options.hazard);
    StabilityReport report = verify_stability(problem, grid_for(problem),
                                              options.tolerance, options.exec);
    report.pairing = entry.id;
    report.category = "positive";
    report.ok = report.pass;
    reports.push_back(std::move(report));
  }
  if (!options.include_controls) return reports;

  for (const auto& control : negative_controls()) {
    const StabilityProblem problem = control.make(options.hazard);
    StabilityReport report = verify_stability(problem, grid_for(problem),
                                              options.tolerance, options.exec);
    report.pairing = control.id;
    report.category = "control:" + control.kind;
    report.expected_pass = false;
    report.control_threshold = options.control_threshold;
    report.ok = report.sup_residual > options.control_threshold;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace nstab
