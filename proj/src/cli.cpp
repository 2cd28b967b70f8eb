#include "nstab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "nstab/extremes_mc.hpp"
#include "nstab/pgf_recovery.hpp"
#include "nstab/stability.hpp"

namespace nstab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Shortest round-trip decimal form; keeps CSV/text output identical to the
// JSON rendering of the same value.
std::string num(double v) { return Json(v).dump(); }

struct FamilyOptions {
  std::string family;
  double rate = 1.0;
  double alpha = 1.0;
  double p = 0.5;
  double eps = 0.0;
  double phase = 0.0;
  double beta = 0.5;
  std::int64_t family_k = 1;
  bool discretized = false;
};

struct LawOptions {
  std::string law;
  double v = 0.5;
  double a = 2.0;
  std::int64_t k = 2;
  double q = 0.5;
  std::string support = "i1";
};

ContinuousFamily build_continuous(const FamilyOptions& opt) {
  if (opt.family == "exponential") return exponential(opt.rate);
  if (opt.family == "semi-weibull") {
    return semi_weibull(PeriodicHazard(opt.alpha, opt.p, opt.eps, opt.phase));
  }
  if (opt.family == "gsp") {
    return generalized_semi_pareto(
        PeriodicHazard(opt.alpha, opt.p, opt.eps, opt.phase), opt.beta);
  }
  if (opt.family == "semi-pareto") {
    return semi_pareto(PeriodicHazard(opt.alpha, opt.p, opt.eps, opt.phase));
  }
  if (opt.family == "ext-log-logistic") {
    return extended_log_logistic(opt.alpha, opt.family_k);
  }
  throw std::invalid_argument("unknown family '" + opt.family + "'");
}

StabilityTarget build_family(const FamilyOptions& opt) {
  ContinuousFamily base = build_continuous(opt);
  if (opt.discretized) return discretize(base);
  return base;
}

DiscreteLaw build_law(const LawOptions& opt) {
  if (opt.law == "sibuya") return sibuya(opt.v);
  if (opt.law == "harris") return harris(opt.a, opt.k);
  if (opt.law == "geometric") {
    if (opt.support != "i0" && opt.support != "i1") {
      throw std::invalid_argument("unknown support '" + opt.support +
                                  "' (use i0 or i1)");
    }
    return geometric(opt.q, opt.support == "i0" ? Support::kZeroBased
                                                : Support::kOneBased);
  }
  if (opt.law == "degenerate") return degenerate(opt.k);
  throw std::invalid_argument("unknown law '" + opt.law + "'");
}

StabilityMode parse_mode(const std::string& mode) {
  if (mode == "max") return StabilityMode::kMax;
  if (mode == "min") return StabilityMode::kMin;
  throw std::invalid_argument("unknown mode '" + mode + "' (use max or min)");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NSTAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

const RegistryEntry& find_pairing(const std::string& id) {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry;
  }
  std::string known;
  for (const auto& entry : registry()) known += "\n  " + entry.id;
  throw std::invalid_argument("unknown pairing '" + id + "'; known pairings:" +
                              known);
}

void add_family_options(CLI::App* cmd, FamilyOptions& opt, bool with_discretize) {
  cmd->add_option("--family", opt.family,
                  "exponential | semi-weibull | gsp | semi-pareto | "
                  "ext-log-logistic");
  cmd->add_option("--rate", opt.rate, "exponential rate");
  cmd->add_option("--alpha", opt.alpha, "power exponent");
  cmd->add_option("--p", opt.p, "hazard scaling constant in (0,1)");
  cmd->add_option("--eps", opt.eps, "hazard log-periodic amplitude");
  cmd->add_option("--phase", opt.phase, "hazard phase in [0, 2*pi)");
  cmd->add_option("--beta", opt.beta, "gsp tail exponent");
  cmd->add_option("--family-k", opt.family_k, "ext-log-logistic power k");
  if (with_discretize) {
    cmd->add_flag("--discretize", opt.discretized,
                  "use the induced law on {0,1,2,...} (P(X<j) = 1 - m(j))");
  }
}

void add_law_options(CLI::App* cmd, LawOptions& opt) {
  cmd->add_option("--law", opt.law,
                  "sibuya | harris | geometric | degenerate");
  cmd->add_option("--v", opt.v, "sibuya exponent in (0,1)");
  cmd->add_option("--a", opt.a, "harris tilt, a > 1");
  cmd->add_option("--k", opt.k, "harris/degenerate power");
  cmd->add_option("--q", opt.q, "geometric success probability");
  cmd->add_option("--support", opt.support, "geometric support: i0 | i1");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << text;
}

Json report_json(const StabilityReport& r, bool arrays) {
  Json j;
  j["pairing"] = r.pairing;
  j["category"] = r.category;
  j["family"] = r.family;
  j["law"] = r.law;
  j["mode"] = r.mode;
  j["discrete"] = r.discrete;
  if (r.discrete) {
    // the identity is checked at integers j; the scaled side F(c j) uses the
    // continuous extension of the base survival function
    j["scaled_argument"] = "continuous-extension";
  }
  j["c"] = r.c;
  j["sup_residual"] = r.sup_residual;
  j["tolerance"] = r.tolerance;
  if (r.category != "positive") j["control_threshold"] = r.control_threshold;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["expected"] = r.expected_pass ? "pass" : "fail";
  j["ok"] = r.ok;
  if (arrays) {
    j["grid"] = r.grid;
    j["residuals"] = r.residuals;
  }
  return j;
}

constexpr const char* kCsvHeader =
    "pairing,category,mode,family,law,c,metric,value,threshold,expected,"
    "verdict,ok\n";

std::string csv_row(const StabilityReport& r) {
  std::ostringstream row;
  const double threshold =
      r.category == "positive" ? r.tolerance : r.control_threshold;
  row << r.pairing << ',' << r.category << ',' << r.mode << ",\"" << r.family
      << "\",\"" << r.law << "\"," << num(r.c) << ",sup_residual,"
      << num(r.sup_residual) << ',' << num(threshold) << ','
      << (r.expected_pass ? "pass" : "fail") << ','
      << (r.pass ? "pass" : "fail") << ',' << (r.ok ? "true" : "false")
      << '\n';
  return row.str();
}

std::string text_table(const std::vector<StabilityReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(46) << "pairing" << std::setw(20) << "category"
      << std::setw(12) << "c" << std::setw(14) << "sup_residual"
      << "status\n";
  for (const auto& r : reports) {
    std::ostringstream c_txt, res_txt;
    c_txt << std::setprecision(6) << r.c;
    res_txt << std::scientific << std::setprecision(3) << r.sup_residual;
    out << std::left << std::setw(46) << r.pairing << std::setw(20)
        << r.category << std::setw(12) << c_txt.str() << std::setw(14)
        << res_txt.str() << (r.ok ? "ok" : "NOT-OK") << '\n';
  }
  return out.str();
}

int finish_reports(const std::vector<StabilityReport>& reports, Json spec,
                   const std::string& command, const std::string& format,
                   bool arrays, const std::string& output, std::ostream& out) {
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.ok;

  if (format == "json") {
    Json j;
    j["version"] = kSchemaVersion;
    j["command"] = command;
    j["spec"] = std::move(spec);
    j["results"] = Json::array();
    for (const auto& r : reports) j["results"].push_back(report_json(r, arrays));
    emit(j.dump(2) + "\n", output, out);
  } else if (format == "csv") {
    std::string csv = kCsvHeader;
    for (const auto& r : reports) csv += csv_row(r);
    emit(csv, output, out);
  } else if (format == "text") {
    std::ostringstream text;
    text << text_table(reports);
    std::size_t ok_count = 0;
    for (const auto& r : reports) ok_count += r.ok ? 1 : 0;
    text << ok_count << "/" << reports.size() << " checks behaved as expected\n";
    emit(text.str(), output, out);
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  return all_ok ? 0 : 1;
}

Json grid_spec_json(const LogGrid& lg, const IntegerGrid& ig) {
  Json j;
  j["log_grid"] = {{"min", lg.min}, {"max", lg.max}, {"points", lg.points}};
  j["integer_grid"] = {{"max_index", ig.max_index}};
  return j;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string pairing;
  FamilyOptions family;
  LawOptions law;
  std::string mode = "max";
  std::string c = "auto";
  double tolerance = 1e-10;
  LogGrid log_grid{};
  IntegerGrid integer_grid{};
  double eps_frac = 0.0;
  double hazard_phase = 0.0;
  std::string format = "text";
  std::string output;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  StabilityProblem problem = [&]() {
    if (!args.pairing.empty()) {
      return find_pairing(args.pairing)
          .make(HazardChoice{args.eps_frac, args.hazard_phase});
    }
    StabilityTarget family = build_family(args.family);
    DiscreteLaw law = build_law(args.law);
    const StabilityMode mode = parse_mode(args.mode);
    const double c = args.c == "auto" ? stability_constant(family, law, mode)
                                      : std::stod(args.c);
    return make_problem(std::move(family), std::move(law), mode, c);
  }();

  const GridSpec grid =
      std::holds_alternative<DiscretizedFamily>(problem.family)
          ? GridSpec(args.integer_grid)
          : GridSpec(args.log_grid);
  StabilityReport report = verify_stability(problem, grid, args.tolerance);
  if (!args.pairing.empty()) report.pairing = args.pairing;

  Json spec;
  spec["pairing"] = args.pairing.empty() ? "ad-hoc" : args.pairing;
  spec["family"] = report.family;
  spec["law"] = report.law;
  spec["mode"] = report.mode;
  spec["c"] = report.c;
  spec["c_request"] = args.c;
  spec["tolerance"] = args.tolerance;
  spec["grid"] = grid_spec_json(args.log_grid, args.integer_grid);

  return finish_reports({report}, std::move(spec), "verify", args.format,
                        /*arrays=*/true, args.output, out);
}

// --- suite ----------------------------------------------------------------

struct SuiteArgs {
  SuiteOptions options{};
  bool positives_only = false;
  bool arrays = false;
  std::string format = "text";
  std::string output;
};

int run_suite(const SuiteArgs& args, std::ostream& out) {
  SuiteOptions options = args.options;
  options.include_controls = !args.positives_only;
  const std::vector<StabilityReport> reports = registry_suite(options);

  Json spec;
  spec["tolerance"] = options.tolerance;
  spec["control_threshold"] = options.control_threshold;
  spec["grid"] = grid_spec_json(options.log_grid, options.integer_grid);
  spec["hazard"] = {{"eps_frac", options.hazard.eps_frac},
                    {"phase", options.hazard.phase}};
  spec["positives_only"] = args.positives_only;

  return finish_reports(reports, std::move(spec), "suite", args.format,
                        args.arrays, args.output, out);
}

// --- mc -------------------------------------------------------------------

struct McArgs {
  std::string pairing;
  FamilyOptions family;
  LawOptions law;
  std::string mode = "max";
  std::string c = "auto";
  std::size_t trials = 100000;
  std::optional<std::uint64_t> seed;
  double significance = 0.01;
  double eps_frac = 0.0;
  double hazard_phase = 0.0;
  std::string format = "text";
  std::string output;
};

int run_mc(const McArgs& args, std::ostream& out) {
  StabilityProblem problem = [&]() {
    if (!args.pairing.empty()) {
      return find_pairing(args.pairing)
          .make(HazardChoice{args.eps_frac, args.hazard_phase});
    }
    StabilityTarget family = build_family(args.family);
    DiscreteLaw law = build_law(args.law);
    const StabilityMode mode = parse_mode(args.mode);
    const double c = args.c == "auto" ? stability_constant(family, law, mode)
                                      : std::stod(args.c);
    return make_problem(std::move(family), std::move(law), mode, c);
  }();

  McConfig config;
  config.trials = args.trials;
  config.seed = args.seed.value_or(default_seed());
  config.significance = args.significance;
  const McReport report = mc_stability_test(problem, config);

  Json spec;
  spec["pairing"] = args.pairing.empty() ? "ad-hoc" : args.pairing;
  spec["family"] = describe(problem.family);
  spec["law"] = describe(problem.law);
  spec["mode"] = to_string(problem.mode);
  spec["c"] = problem.c;
  spec["trials"] = report.trials;
  spec["seed"] = report.seed;
  spec["significance"] = report.significance;

  if (args.format == "json") {
    Json j;
    j["version"] = kSchemaVersion;
    j["command"] = "mc";
    j["spec"] = spec;
    j["result"] = {{"ks_stat", report.ks_stat},
                   {"ks_critical", report.ks_critical},
                   {"trials", report.trials},
                   {"seed", report.seed},
                   {"verdict", report.pass ? "pass" : "fail"}};
    emit(j.dump(2) + "\n", args.output, out);
  } else if (args.format == "csv") {
    std::ostringstream csv;
    csv << kCsvHeader;
    csv << spec["pairing"].get<std::string>() << ",mc,"
        << to_string(problem.mode) << ",\"" << describe(problem.family)
        << "\",\"" << describe(problem.law) << "\"," << num(problem.c)
        << ",ks_stat," << num(report.ks_stat) << ','
        << num(report.ks_critical) << ",pass,"
        << (report.pass ? "pass" : "fail") << ','
        << (report.pass ? "true" : "false") << '\n';
    emit(csv.str(), args.output, out);
  } else if (args.format == "text") {
    std::ostringstream text;
    text << "mc " << spec["pairing"].get<std::string>() << ": "
         << describe(problem.family) << " / " << describe(problem.law) << " / "
         << to_string(problem.mode) << " c=" << num(problem.c)
         << "\n  trials=" << report.trials << " seed=" << report.seed
         << " ks=" << num(report.ks_stat)
         << " critical=" << num(report.ks_critical) << " -> "
         << (report.pass ? "pass" : "FAIL") << '\n';
    emit(text.str(), args.output, out);
  } else {
    throw std::invalid_argument("unknown format '" + args.format + "'");
  }
  return report.pass ? 0 : 1;
}

// --- recover ----------------------------------------------------------------

struct RecoverArgs {
  FamilyOptions family;
  LawOptions law;  // optional reference to compare against
  bool have_law = false;
  std::string mode = "max";
  std::string c;
  int n_max = 50;
  double radius = 0.8;
  double match_tol = 1e-8;
  std::string format = "text";
  std::string output;
};

int run_recover(const RecoverArgs& args, std::ostream& out) {
  const ContinuousFamily family = build_continuous(args.family);
  const StabilityMode mode = parse_mode(args.mode);
  std::optional<DiscreteLaw> reference;
  if (args.have_law) reference = build_law(args.law);

  if (args.c.empty()) throw std::invalid_argument("recover: --c is required");
  const double c = args.c == "auto"
                       ? (reference.has_value()
                              ? stability_constant(family, *reference, mode)
                              : throw std::invalid_argument(
                                    "recover: --c auto needs a reference --law"))
                       : std::stod(args.c);

  ExtractOptions options;
  options.n_max = args.n_max;
  options.radius = args.radius;
  const PgfEstimate estimate = recover_pgf(family, c, mode, options);

  double max_diff = 0.0;
  if (reference.has_value()) {
    for (std::size_t n = 0; n < estimate.coeffs.size(); ++n) {
      max_diff = std::max(max_diff,
                          std::abs(estimate.coeffs[n] -
                                   pmf(*reference, static_cast<std::int64_t>(n))));
    }
  }
  const bool matched = !reference.has_value() || max_diff < args.match_tol;
  const bool ok = estimate.verdict.valid && matched;

  Json spec;
  spec["family"] = describe(family);
  spec["mode"] = to_string(mode);
  spec["c"] = c;
  spec["c_request"] = args.c;
  spec["n_max"] = args.n_max;
  spec["radius"] = args.radius;
  if (reference.has_value()) {
    spec["reference_law"] = describe(*reference);
    spec["match_tol"] = args.match_tol;
  }

  if (args.format == "json") {
    Json j;
    j["version"] = kSchemaVersion;
    j["command"] = "recover";
    j["spec"] = spec;
    Json result;
    result["coeffs"] = estimate.coeffs;
    result["recon_error"] = estimate.recon_error;
    result["norm_defect"] = estimate.norm_defect;
    result["verdict"] =
        estimate.verdict.valid
            ? std::string("valid-pgf")
            : "invalid:" + to_string(estimate.verdict.reason);
    if (!estimate.verdict.valid) result["detail"] = estimate.verdict.detail;
    if (reference.has_value()) result["reference_max_diff"] = max_diff;
    j["result"] = std::move(result);
    emit(j.dump(2) + "\n", args.output, out);
  } else if (args.format == "csv") {
    std::ostringstream csv;
    csv << "n,coefficient";
    if (reference.has_value()) csv << ",reference_pmf,abs_diff";
    csv << '\n';
    for (std::size_t n = 0; n < estimate.coeffs.size(); ++n) {
      csv << n << ',' << num(estimate.coeffs[n]);
      if (reference.has_value()) {
        const double ref = pmf(*reference, static_cast<std::int64_t>(n));
        csv << ',' << num(ref) << ',' << num(std::abs(estimate.coeffs[n] - ref));
      }
      csv << '\n';
    }
    emit(csv.str(), args.output, out);
  } else if (args.format == "text") {
    std::ostringstream text;
    text << "recover " << describe(family) << " / " << to_string(mode)
         << " c=" << num(c) << "\n";
    text << "  verdict: "
         << (estimate.verdict.valid
                 ? "valid-pgf"
                 : "invalid:" + to_string(estimate.verdict.reason) + " (" +
                       estimate.verdict.detail + ")")
         << "\n  recon_error=" << num(estimate.recon_error)
         << " norm_defect=" << num(estimate.norm_defect) << '\n';
    if (reference.has_value()) {
      text << "  reference " << describe(*reference)
           << " max |coeff - pmf| = " << num(max_diff) << '\n';
    }
    const std::size_t shown = std::min<std::size_t>(estimate.coeffs.size(), 21);
    text << "  n  coefficient\n";
    for (std::size_t n = 0; n < shown; ++n) {
      text << "  " << std::left << std::setw(3) << n << num(estimate.coeffs[n])
           << '\n';
    }
    if (shown < estimate.coeffs.size()) {
      text << "  ... (" << estimate.coeffs.size() - shown << " more)\n";
    }
    emit(text.str(), args.output, out);
  } else {
    throw std::invalid_argument("unknown format '" + args.format + "'");
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "nstab: verification of max/min stability under random sample sizes"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the stability identity for one (F, N, c) triple");
  verify->add_option("--pairing", verify_args.pairing,
                     "use a registry pairing instead of explicit flags");
  add_family_options(verify, verify_args.family, /*with_discretize=*/true);
  add_law_options(verify, verify_args.law);
  verify->add_option("--mode", verify_args.mode, "max | min");
  verify->add_option("--c", verify_args.c, "scaling constant or 'auto'");
  verify->add_option("--tol", verify_args.tolerance, "residual tolerance");
  verify->add_option("--grid-min", verify_args.log_grid.min);
  verify->add_option("--grid-max", verify_args.log_grid.max);
  verify->add_option("--grid-points", verify_args.log_grid.points);
  verify->add_option("--jmax", verify_args.integer_grid.max_index);
  verify->add_option("--eps-frac", verify_args.eps_frac,
                     "hazard amplitude fraction for --pairing");
  verify->add_option("--hazard-phase", verify_args.hazard_phase);
  verify->add_option("--format", verify_args.format, "text | json | csv");
  verify->add_option("--output", verify_args.output, "write report to file");

  SuiteArgs suite_args;
  CLI::App* suite = app.add_subcommand(
      "suite", "run every registry pairing plus negative controls");
  suite->add_option("--tol", suite_args.options.tolerance);
  suite->add_option("--control-threshold",
                    suite_args.options.control_threshold);
  suite->add_option("--grid-min", suite_args.options.log_grid.min);
  suite->add_option("--grid-max", suite_args.options.log_grid.max);
  suite->add_option("--grid-points", suite_args.options.log_grid.points);
  suite->add_option("--jmax", suite_args.options.integer_grid.max_index);
  suite->add_option("--eps-frac", suite_args.options.hazard.eps_frac,
                    "hazard amplitude as a fraction of the bound");
  suite->add_option("--hazard-phase", suite_args.options.hazard.phase);
  suite->add_flag("--positives-only", suite_args.positives_only,
                  "skip the negative controls");
  suite->add_flag("--arrays", suite_args.arrays,
                  "include grid/residual arrays in JSON output");
  suite->add_option("--format", suite_args.format, "text | json | csv");
  suite->add_option("--output", suite_args.output);

  McArgs mc_args;
  CLI::App* mc = app.add_subcommand(
      "mc", "Monte Carlo confirmation via simulated random extremes");
  mc->add_option("--pairing", mc_args.pairing);
  add_family_options(mc, mc_args.family, /*with_discretize=*/true);
  add_law_options(mc, mc_args.law);
  mc->add_option("--mode", mc_args.mode, "max | min");
  mc->add_option("--c", mc_args.c, "scaling constant or 'auto'");
  mc->add_option("--trials", mc_args.trials);
  mc->add_option("--seed", mc_args.seed,
                 "RNG seed (default: NSTAB_SEED env var, else 0)");
  mc->add_option("--significance", mc_args.significance);
  mc->add_option("--eps-frac", mc_args.eps_frac);
  mc->add_option("--hazard-phase", mc_args.hazard_phase);
  mc->add_option("--format", mc_args.format, "text | json | csv");
  mc->add_option("--output", mc_args.output);

  RecoverArgs recover_args;
  CLI::App* recover = app.add_subcommand(
      "recover", "extract the implied PGF coefficients and judge validity");
  add_family_options(recover, recover_args.family, /*with_discretize=*/false);
  CLI::Option* law_opt =
      recover->add_option("--law", recover_args.law.law,
                          "reference law to compare coefficients against");
  recover->add_option("--v", recover_args.law.v);
  recover->add_option("--a", recover_args.law.a);
  recover->add_option("--k", recover_args.law.k);
  recover->add_option("--q", recover_args.law.q);
  recover->add_option("--support", recover_args.law.support);
  recover->add_option("--mode", recover_args.mode, "max | min");
  recover->add_option("--c", recover_args.c, "scaling constant or 'auto'");
  recover->add_option("--nmax", recover_args.n_max);
  recover->add_option("--radius", recover_args.radius);
  recover->add_option("--match-tol", recover_args.match_tol);
  recover->add_option("--format", recover_args.format, "text | json | csv");
  recover->add_option("--output", recover_args.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args, out);
    if (suite->parsed()) return run_suite(suite_args, out);
    if (mc->parsed()) {
      return run_mc(mc_args, out);
    }
    recover_args.have_law = law_opt->count() > 0;
    return run_recover(recover_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace nstab::cli
