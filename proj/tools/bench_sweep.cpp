// Compares the serial reference sweep against the OpenMP engine on a
// representative linked-detuning grid and verifies they agree exactly.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "magnonics/sweep.hpp"

using namespace magnonics;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool rows_identical(const SweepResult& a, const SweepResult& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const SweepRow& x = a.rows[i];
    const SweepRow& y = b.rows[i];
    if (x.axis_values != y.axis_values || x.stable != y.stable) return false;
    if (x.max_real_eig != y.max_real_eig && !(x.max_real_eig != x.max_real_eig &&
                                              y.max_real_eig != y.max_real_eig))
      return false;
    if (x.en_light_microwave != y.en_light_microwave || x.en_light_magnon != y.en_light_magnon ||
        x.en_microwave_magnon != y.en_microwave_magnon)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int points = 2001;
  if (argc > 1) points = std::atoi(argv[1]);
  if (points < 2) points = 2;

  SweepSpec spec;
  spec.axes = {Axis{.field = "delta_over_2pi_hz", .start = -20.0e6, .stop = 20.0e6,
                    .count = points}};

  std::printf("linked-detuning sweep, %d points, baseline operating point\n", points);

  auto t0 = clock_type::now();
  const SweepResult serial = run_sweep_serial(spec);
  const double t_serial = ms_since(t0);
  std::printf("%-28s %9.1f ms\n", "serial reference", t_serial);

  std::vector<int> counts = {1, 2, 4, omp_get_max_threads()};
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  for (int workers : counts) {
    t0 = clock_type::now();
    const SweepResult parallel = run_sweep(spec, workers);
    const double t_par = ms_since(t0);
    const bool same = rows_identical(serial, parallel);
    std::printf("parallel, %2d worker%s        %9.1f ms   speedup %5.2fx   %s\n", workers,
                workers == 1 ? " " : "s", t_par, t_serial / t_par,
                same ? "rows identical" : "ROWS DIFFER");
    if (!same) return 1;
  }
  return 0;
}
