#include "fpqaoa/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fpqaoa/rng.hpp"

namespace fpqaoa {

double percentile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("percentile_sorted: empty input");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("percentile_sorted: q outside [0, 1]");
  const std::size_t count = sorted.size();
  if (count == 1) return sorted[0];
  const double h = q * static_cast<double>(count - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo >= count - 1) return sorted[count - 1];
  const double frac = h - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  const double a = sorted[lo];
  const double b = sorted[lo + 1];
  if (std::isinf(b)) return b;  // frac > 0; avoids inf - inf
  return a + frac * (b - a);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

SummaryRow summarize_records(int n, std::span<const EvalRecord> records) {
  if (records.empty()) throw std::invalid_argument("summarize_records: no records");
  std::vector<double> sts(records.size());
  std::vector<double> ar(records.size());
  std::vector<double> p(records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    sts[k] = records[k].sts;
    ar[k] = records[k].ar_expect;
    p[k] = records[k].p_alpha;
  }
  std::sort(sts.begin(), sts.end());
  std::sort(ar.begin(), ar.end());

  SummaryRow row;
  row.n = n;
  row.median_sts = percentile_sorted(sts, 0.5);
  row.q1_sts = percentile_sorted(sts, 0.25);
  row.q3_sts = percentile_sorted(sts, 0.75);
  row.p01_sts = percentile_sorted(sts, 0.01);
  row.p99_sts = percentile_sorted(sts, 0.99);
  row.outlier_count = static_cast<long>(
      std::count_if(sts.begin(), sts.end(),
                    [&](double v) { return v < row.p01_sts || v > row.p99_sts; }));
  row.median_ar_expect = percentile_sorted(ar, 0.5);
  row.mean_p_alpha = pairwise_sum(p) / static_cast<double>(p.size());
  return row;
}

namespace {

EvalRecord degenerate_record(const QuboInstance& raw, double alpha, NormKind norm) {
  EvalRecord rec;
  rec.p_alpha = 1.0;
  rec.sts = 1.0;
  rec.energy = 0.0;
  rec.ar_expect = 1.0;
  rec.alpha = alpha;
  rec.n = raw.n;
  rec.seed = raw.seed;
  rec.ensemble = raw.ensemble;
  rec.norm = norm;
  rec.degenerate = true;
  return rec;
}

// One simulation scored against several alphas; alphas must be valid.
std::vector<EvalRecord> evaluate_multi(const QuboInstance& raw, const RunConfig& cfg,
                                       std::span<const double> alphas, LayerStats* stats) {
  std::vector<EvalRecord> out;
  out.reserve(alphas.size());
  if (raw.all_zero()) {
    for (double a : alphas) out.push_back(degenerate_record(raw, a, cfg.normalization));
    return out;
  }

  const QuboInstance inst = rescale(raw, cfg.normalization);
  const Spectrum spectrum = compute_spectrum(inst);
  const AngleSchedule sched = cfg.explicit_schedule
                                  ? *cfg.explicit_schedule
                                  : decode(cfg.params, cfg.depth.depth_for(inst.n));
  const StateVector state = run_qaoa(spectrum, sched, stats);
  const double energy = energy_expectation(state, spectrum);
  const double ar = ar_expectation(state, spectrum);

  for (double a : alphas) {
    EvalRecord rec;
    rec.alpha = a;
    rec.n = raw.n;
    rec.seed = raw.seed;
    rec.ensemble = raw.ensemble;
    rec.norm = cfg.normalization;
    rec.p_alpha = success_probability(state, feasible_set(spectrum, a));
    rec.sts = rec.p_alpha > 0.0 ? 1.0 / rec.p_alpha
                                : std::numeric_limits<double>::infinity();
    rec.energy = energy;
    rec.ar_expect = ar;
    out.push_back(rec);
  }
  return out;
}

void validate_suite_config(const RunConfig& cfg, std::span<const double> alphas) {
  if (cfg.n_range.empty()) throw std::invalid_argument("run_suite: empty n range");
  if (cfg.count < 1) throw std::invalid_argument("run_suite: count must be >= 1");
  for (int n : cfg.n_range)
    if (n < 1 || n > kMaxQubits)
      throw std::invalid_argument("run_suite: n outside [1, " + std::to_string(kMaxQubits) + "]");
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("run_suite: alpha outside [0, 1]");
  if (!cfg.explicit_schedule &&
      (cfg.params.q() < 1 || cfg.params.u.size() != cfg.params.v.size()))
    throw std::invalid_argument("run_suite: invalid Fourier parameters");
}

// Shared driver: per size, evaluate every instance once against all alphas.
std::vector<std::vector<std::vector<EvalRecord>>> sweep_records(
    const RunConfig& cfg, std::span<const double> alphas, double* max_drift) {
  validate_suite_config(cfg, alphas);
  std::vector<std::vector<std::vector<EvalRecord>>> per_alpha_n(alphas.size());
  for (auto& v : per_alpha_n) v.resize(cfg.n_range.size());

  for (std::size_t ni = 0; ni < cfg.n_range.size(); ++ni) {
    const int n = cfg.n_range[ni];
    const std::uint64_t size_seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(n));
    std::vector<std::vector<EvalRecord>> recs(cfg.count);
    std::vector<double> drifts(cfg.track_norm ? cfg.count : 0, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < cfg.count; ++k) {
      const QuboInstance raw = generate_instance(cfg.kind, n, derive_seed(size_seed, k));
      LayerStats stats;
      recs[k] = evaluate_multi(raw, cfg, alphas, cfg.track_norm ? &stats : nullptr);
      if (cfg.track_norm) drifts[k] = stats.max_norm_drift;
    }
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      auto& bucket = per_alpha_n[ai][ni];
      bucket.resize(cfg.count);
      for (int k = 0; k < cfg.count; ++k) bucket[k] = recs[k][ai];
    }
    if (max_drift)
      for (double d : drifts) *max_drift = std::max(*max_drift, d);
  }
  return per_alpha_n;
}

SuiteResult result_from_records(const RunConfig& cfg,
                                std::vector<std::vector<EvalRecord>>&& per_n, double drift) {
  SuiteResult res;
  res.max_norm_drift = drift;
  res.records = std::move(per_n);
  res.rows.reserve(cfg.n_range.size());
  for (std::size_t ni = 0; ni < cfg.n_range.size(); ++ni)
    res.rows.push_back(summarize_records(cfg.n_range[ni], res.records[ni]));
  return res;
}

}  // namespace

EvalRecord evaluate_instance(const QuboInstance& raw, const RunConfig& cfg, LayerStats* stats) {
  const double alphas[1] = {cfg.alpha};
  return evaluate_multi(raw, cfg, alphas, stats)[0];
}

SuiteResult run_suite(const RunConfig& cfg) {
  const double alphas[1] = {cfg.alpha};
  double drift = 0.0;
  auto per_alpha = sweep_records(cfg, alphas, cfg.track_norm ? &drift : nullptr);
  return result_from_records(cfg, std::move(per_alpha[0]), drift);
}

double brute_force_baseline(const Spectrum& spectrum, double alpha) {
  if (spectrum.degenerate()) return 1.0;
  const FeasibleSet fs = feasible_set(spectrum, alpha);
  return static_cast<double>(spectrum.dim()) / static_cast<double>(fs.members.size());
}

RunConfig apply_ablation(const RunConfig& base, Ablation which) {
  RunConfig cfg = base;
  switch (which) {
    case Ablation::NoM1:
      cfg.alpha = 1.0;
      break;
    case Ablation::NoM2:
      cfg.depth.fixed_p = 8;
      break;
    case Ablation::NoM3:
      cfg.normalization = NormKind::MaxAbs;
      break;
  }
  return cfg;
}

namespace {

FourierParams retrain_for(const RunConfig& cfg, const ArmOptions& opts) {
  TrainConfig tc;
  tc.kind = cfg.kind;
  tc.train_n = opts.train_n;
  tc.train_count = opts.train_count;
  tc.alpha = cfg.alpha;
  tc.loss = LossKind::MinPAlpha;
  tc.fourier_q = cfg.params.q() >= 1 ? cfg.params.q() : 1;
  tc.depth = cfg.depth;
  tc.normalization = cfg.normalization;
  tc.opt = opts.opt;
  return train(tc, opts.train_seed).params;
}

}  // namespace

SuiteResult ablation_suite(const RunConfig& base, Ablation which, const ArmOptions& opts) {
  RunConfig cfg = apply_ablation(base, which);
  if (opts.retrain) cfg.params = retrain_for(cfg, opts);
  return run_suite(cfg);
}

std::vector<std::pair<double, SuiteResult>> alpha_sweep(const RunConfig& cfg,
                                                        std::span<const double> alphas) {
  if (alphas.empty()) throw std::invalid_argument("alpha_sweep: no alphas given");
  double drift = 0.0;
  auto per_alpha = sweep_records(cfg, alphas, cfg.track_norm ? &drift : nullptr);
  std::vector<std::pair<double, SuiteResult>> out;
  out.reserve(alphas.size());
  for (std::size_t ai = 0; ai < alphas.size(); ++ai)
    out.emplace_back(alphas[ai], result_from_records(cfg, std::move(per_alpha[ai]), drift));
  return out;
}

double tts_model(double sts, int n, int p) {
  if (!(sts > 0.0) || n < 1 || p < 1)
    throw std::invalid_argument("tts_model: inputs must be positive");
  return sts * static_cast<double>(n) * static_cast<double>(p);
}

std::vector<std::pair<NormKind, SuiteResult>> norm_comparison_suite(
    const RunConfig& cfg, std::span<const NormKind> kinds, const ArmOptions& opts) {
  if (kinds.empty()) throw std::invalid_argument("norm_comparison_suite: no kinds given");
  std::vector<std::pair<NormKind, SuiteResult>> out;
  out.reserve(kinds.size());
  for (NormKind kind : kinds) {
    RunConfig arm = cfg;
    arm.normalization = kind;
    if (opts.retrain && kind != cfg.normalization) arm.params = retrain_for(arm, opts);
    out.emplace_back(kind, run_suite(arm));
  }
  return out;
}

}  // namespace fpqaoa
