#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fpqaoa/encoding.hpp"
#include "fpqaoa/norm.hpp"
#include "fpqaoa/qubo.hpp"
#include "fpqaoa/simulator.hpp"
#include "fpqaoa/training.hpp"

namespace fpqaoa {

struct RunConfig {
  FourierParams params;  // decoded per n unless explicit_schedule is set
  std::optional<AngleSchedule> explicit_schedule;
  double alpha = 0.95;
  std::vector<int> n_range;
  int count = 1000;
  EnsembleKind kind = EnsembleKind::Normal;
  NormKind normalization = NormKind::Frobenius;
  DepthRule depth;
  std::uint64_t base_seed = 1;
  bool track_norm = false;
};

struct SummaryRow {
  int n = 0;
  double median_sts = 0.0;
  double q1_sts = 0.0;
  double q3_sts = 0.0;
  double p01_sts = 0.0;
  double p99_sts = 0.0;
  long outlier_count = 0;  // records with STS outside [p01, p99]
  double median_ar_expect = 0.0;
  double mean_p_alpha = 0.0;
};

struct SuiteResult {
  std::vector<SummaryRow> rows;                  // ordered by n_range
  std::vector<std::vector<EvalRecord>> records;  // per n, indexed by instance
  double max_norm_drift = 0.0;                   // only filled when track_norm
};

// rescale -> spectrum -> feasible set -> decode(p) -> run -> metrics.
// All-zero instances short-circuit to the degenerate record.
EvalRecord evaluate_instance(const QuboInstance& raw, const RunConfig& cfg,
                             LayerStats* stats = nullptr);

// Size n draws its instances from derive_seed(base_seed, n), instance k from
// derive_seed(derive_seed(base_seed, n), k): arms sharing base_seed see
// identical matrices.
SuiteResult run_suite(const RunConfig& cfg);

// Expected uniform-sampling shots to hit F(alpha) once: 2^n / |F(alpha)|.
double brute_force_baseline(const Spectrum& spectrum, double alpha);

enum class Ablation { NoM1, NoM2, NoM3 };

// Parameter provenance for ablation / normalization-comparison arms.
// Retraining under the ablated configuration is the default; reuse keeps the
// base parameters for cheaper runs.
struct ArmOptions {
  bool retrain = true;
  int train_n = 6;
  int train_count = 200;
  std::uint64_t train_seed = 1;
  OptimizerConfig opt;
};

RunConfig apply_ablation(const RunConfig& base, Ablation which);

// NoM1: alpha = 1. NoM2: depth fixed to 8. NoM3: max-abs normalization.
SuiteResult ablation_suite(const RunConfig& base, Ablation which, const ArmOptions& opts);

// One suite per alpha on shared instances; each instance is simulated once
// and scored against every alpha.
std::vector<std::pair<double, SuiteResult>> alpha_sweep(const RunConfig& cfg,
                                                        std::span<const double> alphas);

// Unit-free time-to-solution model: shots times linear-in-n layer time times
// depth; with p = n this is sts * n^2.
double tts_model(double sts, int n, int p);

// run_suite per normalization kind on shared instance seeds.
std::vector<std::pair<NormKind, SuiteResult>> norm_comparison_suite(
    const RunConfig& cfg, std::span<const NormKind> kinds, const ArmOptions& opts);

// Linear interpolation between order statistics (quantile type 7);
// input must be sorted ascending, q in [0, 1].
double percentile_sorted(std::span<const double> sorted, double q);

double pairwise_sum(std::span<const double> values);

SummaryRow summarize_records(int n, std::span<const EvalRecord> records);

}  // namespace fpqaoa
