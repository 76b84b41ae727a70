#include "fpqaoa/qubo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fpqaoa/rng.hpp"

namespace fpqaoa {

namespace {

// Single accumulation routine shared by cost_evaluate and compute_spectrum;
// entry order fixes the floating-point result.
double cost_from_spins(const std::vector<QuboEntry>& entries, const double* z) {
  double acc = 0.0;
  for (const auto& e : entries) {
    if (e.i == e.j)
      acc += e.value * z[e.i - 1];
    else
      acc += e.value * z[e.i - 1] * z[e.j - 1];
  }
  return acc;
}

}  // namespace

double QuboInstance::coeff(int i, int j) const {
  if (i < 1 || j < i || j > n) throw std::out_of_range("coeff: need 1 <= i <= j <= n");
  auto it = std::lower_bound(entries.begin(), entries.end(), std::pair(i, j),
                             [](const QuboEntry& e, const std::pair<int, int>& key) {
                               return std::pair(e.i, e.j) < key;
                             });
  if (it != entries.end() && it->i == i && it->j == j) return it->value;
  return 0.0;
}

bool QuboInstance::all_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const QuboEntry& e) { return e.value == 0.0; });
}

double cost_evaluate(const QuboInstance& inst, std::span<const double> spins) {
  if (static_cast<int>(spins.size()) != inst.n)
    throw std::invalid_argument("cost_evaluate: spin vector has size " +
                                std::to_string(spins.size()) + ", instance has n = " +
                                std::to_string(inst.n));
  return cost_from_spins(inst.entries, spins.data());
}

Spectrum compute_spectrum(const QuboInstance& inst) {
  if (inst.n < 1 || inst.n > kMaxQubits)
    throw std::invalid_argument("compute_spectrum: n = " + std::to_string(inst.n) +
                                " outside [1, " + std::to_string(kMaxQubits) + "]");
  const std::uint64_t dim = std::uint64_t{1} << inst.n;
  Spectrum s;
  s.n = inst.n;
  s.costs.resize(dim);

  const auto& entries = inst.entries;
  const int n = inst.n;
  if (dim < 4096) {
    double z[kMaxQubits];
    for (std::uint64_t b = 0; b < dim; ++b) {
      for (int k = 0; k < n; ++k) z[k] = ((b >> k) & 1) ? -1.0 : 1.0;
      s.costs[b] = cost_from_spins(entries, z);
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b) {
      double z[kMaxQubits];
      for (int k = 0; k < n; ++k) z[k] = ((b >> k) & 1) ? -1.0 : 1.0;
      s.costs[b] = cost_from_spins(entries, z);
    }
  }

  s.c_min = s.costs[0];
  s.c_max = s.costs[0];
  for (std::uint64_t b = 1; b < dim; ++b) {
    s.c_min = std::min(s.c_min, s.costs[b]);
    s.c_max = std::max(s.c_max, s.costs[b]);
  }
  for (std::uint64_t b = 0; b < dim; ++b)
    if (s.costs[b] == s.c_min) s.argmin_set.push_back(b);
  return s;
}

FeasibleSet feasible_set(const Spectrum& spectrum, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("feasible_set: alpha outside [0, 1]");
  FeasibleSet fs;
  fs.alpha = alpha;
  const std::uint64_t dim = spectrum.dim();

  if (spectrum.degenerate()) {
    fs.threshold_cost = spectrum.c_min;
    fs.members.resize(dim);
    for (std::uint64_t b = 0; b < dim; ++b) fs.members[b] = b;
    return fs;
  }

  fs.threshold_cost = spectrum.c_min + (1.0 - alpha) * (spectrum.c_max - spectrum.c_min);
  if (alpha == 1.0) {
    // exact-optimum case: membership is cost == c_min, not a slack compare
    fs.members = spectrum.argmin_set;
    return fs;
  }

  const double eps =
      1e-9 * (std::abs(spectrum.c_min) + std::abs(spectrum.c_max) + 1.0);
  const double cutoff = fs.threshold_cost + eps;
  for (std::uint64_t b = 0; b < dim; ++b)
    if (spectrum.costs[b] <= cutoff) fs.members.push_back(b);
  return fs;
}

QuboInstance generate_normal(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_normal: n must be >= 1");
  SplitMix64 rng(seed);
  QuboInstance q;
  q.n = n;
  q.ensemble = EnsembleKind::Normal;
  q.seed = seed;
  q.entries.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) q.entries.push_back({i, j, rng.next_normal()});
  return q;
}

QuboInstance generate_mixed(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_mixed: n must be >= 1");
  SplitMix64 rng(seed);
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  std::vector<double> m(nn);
  for (auto& x : m) x = rng.next_normal();
  const double b = rng.next_uniform(-0.5, 0.5);
  for (auto& x : m) x += rng.next_uniform(b - 0.5, b + 0.5);
  for (auto& x : m)
    if (rng.next_double() < 0.5) x = 0.0;

  QuboInstance q;
  q.n = n;
  q.ensemble = EnsembleKind::Mixed;
  q.seed = seed;
  q.entries.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      q.entries.push_back({i, j, m[static_cast<std::size_t>(i - 1) * n + (j - 1)]});
  return q;
}

QuboInstance generate_instance(EnsembleKind kind, int n, std::uint64_t seed) {
  switch (kind) {
    case EnsembleKind::Normal:
      return generate_normal(n, seed);
    case EnsembleKind::Mixed:
      return generate_mixed(n, seed);
    default:
      throw std::invalid_argument("generate_instance: no generator for this ensemble");
  }
}

}  // namespace fpqaoa
