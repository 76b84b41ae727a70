#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fpqaoa {

enum class EnsembleKind { Normal, Mixed, Custom };
enum class NormKind { None, Frobenius, MaxAbs, WeightedNorm };

// Hard cap on enumerable problem sizes: 2^26 amplitudes is 1 GiB of state.
inline constexpr int kMaxQubits = 26;

// One stored Ising coefficient s_ij, 1-based with i <= j (i == j is the
// linear term of spin i).
struct QuboEntry {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

// Upper-triangular Ising coefficient matrix plus provenance. Entries are
// kept sorted row-major over the upper triangle; pairs not stored are zero.
// Cost of a spin assignment z in {+1,-1}^n:
//   C(z) = sum_{i<j} s_ij z_i z_j + sum_i s_ii z_i.
struct QuboInstance {
  int n = 0;
  std::vector<QuboEntry> entries;
  EnsembleKind ensemble = EnsembleKind::Custom;
  std::uint64_t seed = 0;
  NormKind norm_applied = NormKind::None;

  // 0.0 when the pair is not stored; requires 1 <= i <= j <= n
  double coeff(int i, int j) const;
  bool all_zero() const;
};

// Exact cost table over all 2^n bitstrings. Bit-to-spin convention, global
// across the project: bit b_k = 0 means z_k = +1, b_k = 1 means z_k = -1,
// and qubit 1 is the least significant bit of the bitstring index.
struct Spectrum {
  int n = 0;
  std::vector<double> costs;  // indexed by bitstring value
  double c_min = 0.0;
  double c_max = 0.0;
  std::vector<std::uint64_t> argmin_set;  // ascending, costs bitwise == c_min

  std::uint64_t dim() const { return static_cast<std::uint64_t>(costs.size()); }
  bool degenerate() const { return c_min == c_max; }
};

// F(alpha): bitstrings within a (1-alpha) fraction of the cost range above
// the optimum.
struct FeasibleSet {
  double alpha = 0.0;
  std::vector<std::uint64_t> members;  // ascending
  double threshold_cost = 0.0;
};

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Normal;
  int n = 0;
  int count = 0;
  std::uint64_t base_seed = 0;
  NormKind normalization = NormKind::None;
};

inline double spin_of_bit(std::uint64_t bits, int qubit) {
  return ((bits >> (qubit - 1)) & 1ull) ? -1.0 : 1.0;
}

// C(z) for one spin assignment (components +-1, size n).
double cost_evaluate(const QuboInstance& inst, std::span<const double> spins);

// Full enumeration; costs[b] accumulates in the exact same order as
// cost_evaluate, so extrema classification is bitwise reproducible.
Spectrum compute_spectrum(const QuboInstance& inst);

// Membership uses a relative slack eps = 1e-9 (|c_min| + |c_max| + 1) so that
// round-off never excludes a state sitting exactly on the threshold.
// alpha == 1 returns the argmin set itself; a degenerate spectrum
// (c_max == c_min) yields every bitstring at any alpha.
FeasibleSet feasible_set(const Spectrum& spectrum, double alpha);

// Independent standard-normal draw for every i <= j (diagonal included),
// row-major order.
QuboInstance generate_normal(int n, std::uint64_t seed);

// Mixed ensemble. Draw order from one SplitMix64(seed) stream: dense n*n
// normal matrix (row-major), bias b uniform on [-1/2,1/2], dense n*n matrix
// uniform on [b-1/2,b+1/2], then a sparsity pass zeroing each entry of the
// sum with probability 1/2; the upper triangle (diagonal included) is kept,
// explicit zeros and all.
QuboInstance generate_mixed(int n, std::uint64_t seed);

QuboInstance generate_instance(EnsembleKind kind, int n, std::uint64_t seed);

}  // namespace fpqaoa
