#include "fpqaoa/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpqaoa/kernels.hpp"

namespace fpqaoa {

StateVector prepare_plus(int n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("prepare_plus: n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  StateVector s;
  s.n = n;
  // 2^{-n/2} from exact power-of-two scaling (times sqrt(1/2) for odd n)
  const double a = (n % 2 == 0) ? std::ldexp(1.0, -n / 2)
                                : std::ldexp(std::sqrt(0.5), -(n - 1) / 2);
  s.amp.assign(std::uint64_t{1} << n, {a, 0.0});
  return s;
}

void apply_cost_phase(StateVector& state, const Spectrum& spectrum, double gamma) {
  if (state.n != spectrum.n)
    throw std::invalid_argument("apply_cost_phase: state and spectrum sizes differ");
  kernels::par::cost_phase(state.amp.data(), spectrum.costs.data(), state.dim(), gamma);
}

void apply_mixer(StateVector& state, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  for (int k = 0; k < state.n; ++k)
    kernels::par::mixer_pass(state.amp.data(), state.dim(), k, c, s);
}

StateVector run_qaoa(const Spectrum& spectrum, const AngleSchedule& schedule,
                     LayerStats* stats) {
  if (schedule.p() < 1) throw std::invalid_argument("run_qaoa: schedule must have p >= 1");
  StateVector state = prepare_plus(spectrum.n);
  for (int l = 0; l < schedule.p(); ++l) {
    apply_cost_phase(state, spectrum, schedule.gamma[l]);
    if (stats)
      stats->observe(std::abs(kernels::norm_sq(state.amp.data(), state.dim()) - 1.0));
    apply_mixer(state, schedule.beta[l]);
    if (stats)
      stats->observe(std::abs(kernels::norm_sq(state.amp.data(), state.dim()) - 1.0));
  }
  return state;
}

double success_probability(const StateVector& state, const FeasibleSet& fs) {
  return kernels::prob_mass(state.amp.data(), fs.members.data(), fs.members.size());
}

double energy_expectation(const StateVector& state, const Spectrum& spectrum) {
  if (state.n != spectrum.n)
    throw std::invalid_argument("energy_expectation: state and spectrum sizes differ");
  return kernels::diag_expectation(state.amp.data(), spectrum.costs.data(), state.dim());
}

double ar_expectation(const StateVector& state, const Spectrum& spectrum) {
  if (spectrum.degenerate()) return 1.0;
  const double e = energy_expectation(state, spectrum);
  return (spectrum.c_max - e) / (spectrum.c_max - spectrum.c_min);
}

}  // namespace fpqaoa
