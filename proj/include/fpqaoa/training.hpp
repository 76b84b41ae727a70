#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fpqaoa/encoding.hpp"
#include "fpqaoa/norm.hpp"
#include "fpqaoa/qubo.hpp"
#include "fpqaoa/simulator.hpp"

namespace fpqaoa {

enum class LossKind { MinPAlpha, MeanArExpect };

// fixed_p == 0 means p = n; fixed_p > 0 pins the depth.
struct DepthRule {
  int fixed_p = 0;

  int depth_for(int n) const { return fixed_p > 0 ? fixed_p : n; }
  bool equals_n() const { return fixed_p == 0; }
};

// Random-mutations search: single point per restart, Gaussian proposals of
// scale sigma clipped to the box, accept on strict improvement; sigma shrinks
// by sigma_shrink after shrink_after consecutive rejections and resets each
// restart. evals_per_restart counts proposals, not the initial evaluation.
struct OptimizerConfig {
  int restarts = 16;
  int evals_per_restart = 2000;
  double sigma0 = 0.5;
  double sigma_shrink = 0.9;
  int shrink_after = 20;
  double box_halfwidth = 4.0;  // every coefficient searched in [-box, box]
};

struct TrainConfig {
  EnsembleKind kind = EnsembleKind::Normal;
  int train_n = 6;
  int train_count = 200;
  double alpha = 0.95;
  LossKind loss = LossKind::MinPAlpha;
  int fourier_q = 1;  // q = 1 is the sine-cosine encoding
  DepthRule depth;
  NormKind normalization = NormKind::Frobenius;
  OptimizerConfig opt;
};

// One training instance with everything precomputed once per run.
struct TrainInstance {
  QuboInstance inst;
  Spectrum spectrum;
  FeasibleSet feasible;
  bool degenerate = false;  // all-zero draw; contributes P = 1, AR = 1
};

// Instance k uses derive_seed(ensemble_seed, k).
std::vector<TrainInstance> build_training_set(const TrainConfig& cfg,
                                              std::uint64_t ensemble_seed);

// min over the set of P_alpha under the decoded schedule (depth per cfg).
double loss_min_p_alpha(const FourierParams& params,
                        const std::vector<TrainInstance>& set, const TrainConfig& cfg);

// arithmetic mean of the AR expectation over the set (pairwise summation).
double loss_ar_expect(const FourierParams& params,
                      const std::vector<TrainInstance>& set, const TrainConfig& cfg);

struct TrainResult {
  FourierParams params;
  double achieved_loss = 0.0;
  long eval_count = 0;
  std::vector<std::pair<long, double>> trace;  // (eval index, best loss so far)
};

// Derives the ensemble stream as derive_seed(seed, 0) and the optimizer
// stream as derive_seed(seed, 1); fully deterministic for a fixed config.
TrainResult train(const TrainConfig& cfg, std::uint64_t seed);

}  // namespace fpqaoa
