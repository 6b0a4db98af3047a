// Serial reference kernels versus their OpenMP counterparts on the
// sinc^2 benchmark integrand.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "bclass/dtransform.hpp"
#include "bclass/quad.hpp"
#include "bclass/taylor.hpp"

namespace {

template <class F>
double best_ms(int repeats, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t panels = argc > 1 ? std::stoul(argv[1]) : 2000;
  const int repeats = 5;
  const bclass::Expression f = bclass::parse_expression("sinc(x)^2");
  const bclass::Integrand integrand = [&](double x) { return bclass::eval(f, x); };
  const bclass::SampleGrid grid = bclass::make_grid("linear:1.6", panels);

  volatile double sink = 0;
  const double quad_serial =
      best_ms(repeats, [&] { sink = bclass::cumulative_serial(integrand, grid).F.back(); });
  const double quad_parallel = best_ms(repeats, [&] { sink = bclass::cumulative(integrand, grid).F.back(); });

  bclass::DSequenceOptions opts;
  opts.m = 3;
  opts.nu_max = 10;
  const auto rows = bclass::sample_rows(f, bclass::make_grid("linear:1.6", 31), 3, 16, 31);
  const double solve_serial =
      best_ms(repeats, [&] { sink = bclass::solve_sequence_serial(rows, opts).entries.back().D; });
  const double solve_parallel = best_ms(repeats, [&] { sink = bclass::solve_sequence(rows, opts).entries.back().D; });

  std::printf("threads            %d\n", omp_get_max_threads());
  std::printf("cumulative  (%zu panels)  serial %9.3f ms  parallel %9.3f ms  speedup %.2f\n", panels, quad_serial,
              quad_parallel, quad_serial / quad_parallel);
  std::printf("solve_sequence (nu<=10)     serial %9.3f ms  parallel %9.3f ms  speedup %.2f\n", solve_serial,
              solve_parallel, solve_serial / solve_parallel);
  (void)sink;
}
