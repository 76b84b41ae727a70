#include "fpqaoa/training.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fpqaoa/bench.hpp"
#include "fpqaoa/rng.hpp"

namespace fpqaoa {

std::vector<TrainInstance> build_training_set(const TrainConfig& cfg,
                                              std::uint64_t ensemble_seed) {
  if (cfg.train_count < 1)
    throw std::invalid_argument("build_training_set: train_count must be >= 1");
  std::vector<TrainInstance> set(cfg.train_count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < cfg.train_count; ++k) {
    QuboInstance raw =
        generate_instance(cfg.kind, cfg.train_n, derive_seed(ensemble_seed, k));
    TrainInstance& t = set[k];
    if (raw.all_zero()) {
      t.inst = std::move(raw);
      t.degenerate = true;
      continue;
    }
    t.inst = rescale(raw, cfg.normalization);
    t.spectrum = compute_spectrum(t.inst);
    t.feasible = feasible_set(t.spectrum, cfg.alpha);
  }
  return set;
}

namespace {

// Per-instance losses in index order; reductions over this vector are
// order-independent (min) or use a fixed pairwise tree (mean).
std::vector<double> per_instance_values(const FourierParams& params,
                                        const std::vector<TrainInstance>& set,
                                        const TrainConfig& cfg, bool ar_metric) {
  if (set.empty()) throw std::invalid_argument("training set is empty");
  const AngleSchedule sched = decode(params, cfg.depth.depth_for(cfg.train_n));
  std::vector<double> vals(set.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < set.size(); ++k) {
    const TrainInstance& t = set[k];
    if (t.degenerate) {
      vals[k] = 1.0;
      continue;
    }
    const StateVector out = run_qaoa(t.spectrum, sched);
    vals[k] = ar_metric ? ar_expectation(out, t.spectrum)
                        : success_probability(out, t.feasible);
  }
  return vals;
}

}  // namespace

double loss_min_p_alpha(const FourierParams& params,
                        const std::vector<TrainInstance>& set, const TrainConfig& cfg) {
  const auto vals = per_instance_values(params, set, cfg, false);
  return *std::min_element(vals.begin(), vals.end());
}

double loss_ar_expect(const FourierParams& params,
                      const std::vector<TrainInstance>& set, const TrainConfig& cfg) {
  const auto vals = per_instance_values(params, set, cfg, true);
  return pairwise_sum(vals) / static_cast<double>(vals.size());
}

TrainResult train(const TrainConfig& cfg, std::uint64_t seed) {
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0))
    throw std::domain_error("train: alpha outside [0, 1]");
  if (cfg.fourier_q < 1) throw std::invalid_argument("train: fourier_q must be >= 1");

  const auto set = build_training_set(cfg, derive_seed(seed, 0));
  SplitMix64 rng(derive_seed(seed, 1));

  const auto loss_of = [&](const FourierParams& p) {
    return cfg.loss == LossKind::MinPAlpha ? loss_min_p_alpha(p, set, cfg)
                                           : loss_ar_expect(p, set, cfg);
  };
  const double box = cfg.opt.box_halfwidth;
  const auto clamp_box = [box](double x) { return std::clamp(x, -box, box); };

  TrainResult result;
  result.achieved_loss = -std::numeric_limits<double>::infinity();

  for (int r = 0; r < cfg.opt.restarts; ++r) {
    FourierParams x;
    x.u.resize(cfg.fourier_q);
    x.v.resize(cfg.fourier_q);
    for (auto& c : x.u) c = rng.next_uniform(-box, box);
    for (auto& c : x.v) c = rng.next_uniform(-box, box);
    double fx = loss_of(x);
    ++result.eval_count;
    if (fx > result.achieved_loss) {
      result.achieved_loss = fx;
      result.params = x;
      result.trace.emplace_back(result.eval_count, fx);
    }

    double sigma = cfg.opt.sigma0;
    int rejects = 0;
    for (int step = 0; step < cfg.opt.evals_per_restart; ++step) {
      FourierParams xp = x;
      for (auto& c : xp.u) c = clamp_box(c + sigma * rng.next_normal());
      for (auto& c : xp.v) c = clamp_box(c + sigma * rng.next_normal());
      const double fp = loss_of(xp);
      ++result.eval_count;
      if (fp > fx) {
        x = std::move(xp);
        fx = fp;
        rejects = 0;
        if (fx > result.achieved_loss) {
          result.achieved_loss = fx;
          result.params = x;
          result.trace.emplace_back(result.eval_count, fx);
        }
      } else if (++rejects == cfg.opt.shrink_after) {
        sigma *= cfg.opt.sigma_shrink;
        rejects = 0;
      }
    }
  }

  // (u, v) and (-u, -v) prepare conjugate states with identical probabilities;
  // report the representative with a positive leading gamma coefficient
  if (result.params.u[0] < 0.0) {
    for (auto& c : result.params.u) c = -c;
    for (auto& c : result.params.v) c = -c;
  }

  // achieved_loss is the value of one fresh evaluation of the returned params
  result.achieved_loss = loss_of(result.params);
  return result;
}

}  // namespace fpqaoa
