// Compares the serial reference implementations of the two data-parallel
// kernels (residual grids, Monte Carlo extreme simulation) against their
// OpenMP versions, and checks they agree bit-for-bit while timing them.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nstab/extremes_mc.hpp"
#include "nstab/stability.hpp"

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(const F& f) {
  const double t0 = now_seconds();
  f();
  return now_seconds() - t0;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
              name, serial, parallel, serial / parallel,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif

  using namespace nstab;

  {
    const auto& entry = registry().front();
    StabilityProblem problem = entry.make(HazardChoice{0.5, 1.0});
    const GridSpec grid = LogGrid{1e-3, 1e3, 2000000};
    std::vector<double> serial_out, parallel_out;
    const double t_serial = timed([&] {
      serial_out = residual_field(problem, grid, Execution::kSerial);
    });
    const double t_parallel = timed([&] {
      parallel_out = residual_field(problem, grid, Execution::kParallel);
    });
    report("residual grid (2e6 points)", t_serial, t_parallel,
           serial_out == parallel_out);
  }

  {
    StabilityProblem problem = make_problem(
        exponential(1.0), sibuya(0.5), StabilityMode::kMax, 0.5);
    std::vector<double> serial_out, parallel_out;
    const double t_serial = timed([&] {
      serial_out = simulate_extremes(problem, 2000000, 42, Execution::kSerial);
    });
    const double t_parallel = timed([&] {
      parallel_out =
          simulate_extremes(problem, 2000000, 42, Execution::kParallel);
    });
    report("mc extremes exp/sibuya (2e6)", t_serial, t_parallel,
           serial_out == parallel_out);
  }

  {
    const auto& entries = registry();
    StabilityProblem problem = entries[4].make(HazardChoice{1.0, 0.3});
    std::vector<double> serial_out, parallel_out;
    const double t_serial = timed([&] {
      serial_out = simulate_extremes(problem, 200000, 7, Execution::kSerial);
    });
    const double t_parallel = timed([&] {
      parallel_out =
          simulate_extremes(problem, 200000, 7, Execution::kParallel);
    });
    report("mc extremes gsp/harris eps!=0 (2e5)", t_serial, t_parallel,
           serial_out == parallel_out);
  }

  return 0;
}
