#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace fpqaoa::kernels {

using cplx = std::complex<double>;

// Arrays smaller than this are not worth a thread team.
inline constexpr std::size_t kParallelCutoff = std::size_t{1} << 12;

// a * exp(-i phi), expanded so both kernel variants share the exact
// floating-point expression.
inline cplx phase_times(cplx a, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {a.real() * c + a.imag() * s, a.imag() * c - a.real() * s};
}

// One butterfly of exp(-i beta X): (a0, a1) -> (c a0 - i s a1, -i s a0 + c a1)
// with c = cos(beta), s = sin(beta).
inline void mixer_update(cplx& a0, cplx& a1, double c, double s) {
  const cplx t0 = a0;
  const cplx t1 = a1;
  a0 = {c * t0.real() + s * t1.imag(), c * t0.imag() - s * t1.real()};
  a1 = {c * t1.real() + s * t0.imag(), c * t1.imag() - s * t0.real()};
}

// Serial reference kernels. These are the ground truth the parallel variants
// are tested against, and the baseline for the kernel benchmark.
namespace serial {

void cost_phase(cplx* amp, const double* costs, std::size_t dim, double gamma);

// butterfly pass pairing indices that differ in bit `target` (0-based)
void mixer_pass(cplx* amp, std::size_t dim, int target, double c, double s);

}  // namespace serial

// OpenMP kernels. Pairs/elements are disjoint across iterations, so results
// are bitwise identical to the serial reference for any thread count.
namespace par {

void cost_phase(cplx* amp, const double* costs, std::size_t dim, double gamma);
void mixer_pass(cplx* amp, std::size_t dim, int target, double c, double s);

}  // namespace par

// Reductions are kept serial on purpose: they are O(dim) against the
// O(n dim) layer work, and a fixed summation order keeps every reported
// number byte-stable across thread counts.
double norm_sq(const cplx* amp, std::size_t dim);
double prob_mass(const cplx* amp, const std::uint64_t* members, std::size_t count);
double diag_expectation(const cplx* amp, const double* costs, std::size_t dim);

}  // namespace fpqaoa::kernels
