// Timing comparison of the serial reference kernels against the OpenMP
// variants, plus a full-circuit figure. Usage: bench_kernels [n_min n_max reps]

#include <omp.h>

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "fpqaoa/encoding.hpp"
#include "fpqaoa/kernels.hpp"
#include "fpqaoa/norm.hpp"
#include "fpqaoa/qubo.hpp"
#include "fpqaoa/simulator.hpp"

using namespace fpqaoa;
using kernels::cplx;

namespace {

double seconds_per_call(int reps, const auto& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  int n_min = 12, n_max = 20, reps = 5;
  if (argc >= 3) {
    n_min = std::atoi(argv[1]);
    n_max = std::atoi(argv[2]);
  }
  if (argc >= 4) reps = std::atoi(argv[3]);
  if (n_min < 2 || n_max > kMaxQubits || n_max < n_min || reps < 1) {
    std::fprintf(stderr, "usage: bench_kernels [n_min n_max reps], 2 <= n <= %d\n", kMaxQubits);
    return 1;
  }

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%3s  %14s %14s %7s  %14s %14s %7s  %12s\n", "n", "phase_ser(ms)",
              "phase_omp(ms)", "speedup", "mixer_ser(ms)", "mixer_omp(ms)", "speedup",
              "layer_omp(ms)");

  for (int n = n_min; n <= n_max; ++n) {
    const QuboInstance inst = rescale(generate_normal(n, 7), NormKind::Frobenius);
    const Spectrum spec = compute_spectrum(inst);
    StateVector state = prepare_plus(n);
    const double gamma = 0.8, c = std::cos(0.3), s = std::sin(0.3);

    const double t_phase_ser = seconds_per_call(reps, [&] {
      kernels::serial::cost_phase(state.amp.data(), spec.costs.data(), state.dim(), gamma);
    });
    const double t_phase_omp = seconds_per_call(reps, [&] {
      kernels::par::cost_phase(state.amp.data(), spec.costs.data(), state.dim(), gamma);
    });
    const double t_mixer_ser = seconds_per_call(reps, [&] {
      for (int k = 0; k < n; ++k)
        kernels::serial::mixer_pass(state.amp.data(), state.dim(), k, c, s);
    });
    const double t_mixer_omp = seconds_per_call(reps, [&] {
      for (int k = 0; k < n; ++k)
        kernels::par::mixer_pass(state.amp.data(), state.dim(), k, c, s);
    });
    const double t_layer = seconds_per_call(reps, [&] {
      kernels::par::cost_phase(state.amp.data(), spec.costs.data(), state.dim(), gamma);
      for (int k = 0; k < n; ++k)
        kernels::par::mixer_pass(state.amp.data(), state.dim(), k, c, s);
    });

    std::printf("%3d  %14.3f %14.3f %7.2f  %14.3f %14.3f %7.2f  %12.3f\n", n,
                t_phase_ser * 1e3, t_phase_omp * 1e3, t_phase_ser / t_phase_omp,
                t_mixer_ser * 1e3, t_mixer_omp * 1e3, t_mixer_ser / t_mixer_omp,
                t_layer * 1e3);
  }
  return 0;
}
