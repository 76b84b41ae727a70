#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fpqaoa/encoding.hpp"
#include "fpqaoa/qubo.hpp"

namespace fpqaoa {

struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amp;

  std::uint64_t dim() const { return static_cast<std::uint64_t>(amp.size()); }
};

// Optional per-layer norm bookkeeping; |sum |a|^2 - 1| maxed over all checks.
struct LayerStats {
  double max_norm_drift = 0.0;

  void observe(double drift) {
    if (drift > max_norm_drift) max_norm_drift = drift;
  }
};

// |+>^n: every amplitude 2^{-n/2}, built from exact power-of-two scaling.
StateVector prepare_plus(int n);

// amp[z] *= exp(-i gamma C(z)); diagonal, norm preserved per component.
void apply_cost_phase(StateVector& state, const Spectrum& spectrum, double gamma);

// exp(-i beta X) on every qubit, as n strided butterfly passes in place.
void apply_mixer(StateVector& state, double beta);

// Layers l = 1..p: cost phase with gamma_l, then mixer with beta_l, starting
// from |+>^n. When stats is given, the norm is checked after each apply.
StateVector run_qaoa(const Spectrum& spectrum, const AngleSchedule& schedule,
                     LayerStats* stats = nullptr);

// P_alpha: probability mass on the feasible set.
double success_probability(const StateVector& state, const FeasibleSet& fs);

// <psi| H_C |psi> = sum_z C(z) |a_z|^2.
double energy_expectation(const StateVector& state, const Spectrum& spectrum);

// (c_max - E) / (c_max - c_min); 1 for a degenerate spectrum.
double ar_expectation(const StateVector& state, const Spectrum& spectrum);

// Per-instance evaluation result plus the configuration that produced it.
struct EvalRecord {
  double p_alpha = 0.0;
  double sts = 0.0;  // 1 / p_alpha, +inf when p_alpha == 0
  double energy = 0.0;
  double ar_expect = 0.0;
  double alpha = 0.0;
  int n = 0;
  std::uint64_t seed = 0;
  EnsembleKind ensemble = EnsembleKind::Custom;
  NormKind norm = NormKind::None;
  bool degenerate = false;  // all-zero instance, scored P=1 / STS=1 / AR=1
};

}  // namespace fpqaoa
