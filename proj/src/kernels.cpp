#include "fpqaoa/kernels.hpp"

namespace fpqaoa::kernels {

namespace serial {

void cost_phase(cplx* amp, const double* costs, std::size_t dim, double gamma) {
  for (std::size_t z = 0; z < dim; ++z) amp[z] = phase_times(amp[z], gamma * costs[z]);
}

void mixer_pass(cplx* amp, std::size_t dim, int target, double c, double s) {
  const std::size_t mask = std::size_t{1} << target;
  const std::size_t lo_mask = mask - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::size_t pairs = dim >> 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
    mixer_update(amp[i0], amp[i0 | mask], c, s);
  }
}

}  // namespace serial

namespace par {

// Small arrays dispatch to the serial loops before any pragma is reached:
// entering the OpenMP runtime per call costs more than the whole kernel when
// 2^n is tiny, and it adds up fast when an outer loop is already parallel.

void cost_phase(cplx* amp, const double* costs, std::size_t dim, double gamma) {
  if (dim < kParallelCutoff) {
    serial::cost_phase(amp, costs, dim, gamma);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t z = 0; z < static_cast<std::int64_t>(dim); ++z)
    amp[z] = phase_times(amp[z], gamma * costs[z]);
}

void mixer_pass(cplx* amp, std::size_t dim, int target, double c, double s) {
  if ((dim >> 1) < kParallelCutoff) {
    serial::mixer_pass(amp, dim, target, c, s);
    return;
  }
  const std::size_t mask = std::size_t{1} << target;
  const std::size_t lo_mask = mask - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::size_t pairs = dim >> 1;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs); ++i) {
    const std::size_t i0 = ((static_cast<std::size_t>(i) & hi_mask) << 1) |
                           (static_cast<std::size_t>(i) & lo_mask);
    mixer_update(amp[i0], amp[i0 | mask], c, s);
  }
}

}  // namespace par

double norm_sq(const cplx* amp, std::size_t dim) {
  double acc = 0.0;
  for (std::size_t z = 0; z < dim; ++z)
    acc += amp[z].real() * amp[z].real() + amp[z].imag() * amp[z].imag();
  return acc;
}

double prob_mass(const cplx* amp, const std::uint64_t* members, std::size_t count) {
  double acc = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const cplx a = amp[members[k]];
    acc += a.real() * a.real() + a.imag() * a.imag();
  }
  return acc;
}

double diag_expectation(const cplx* amp, const double* costs, std::size_t dim) {
  double acc = 0.0;
  for (std::size_t z = 0; z < dim; ++z)
    acc += costs[z] * (amp[z].real() * amp[z].real() + amp[z].imag() * amp[z].imag());
  return acc;
}

}  // namespace fpqaoa::kernels
