#include "fpqaoa/norm.hpp"

#include <cmath>
#include <stdexcept>

namespace fpqaoa {

namespace {

double weighted_norm(const QuboInstance& q) {
  // Dense ensembles count every slot of the triangle; sparsified ones count
  // the terms actually present in the problem hypergraph.
  const bool dense = q.ensemble == EnsembleKind::Normal;
  long e1 = 0, e2 = 0;
  double diag_sq = 0.0, off_sq = 0.0;
  for (const auto& e : q.entries) {
    const bool counts = dense || e.value != 0.0;
    if (e.i == e.j) {
      diag_sq += e.value * e.value;
      if (counts) ++e1;
    } else {
      off_sq += e.value * e.value;
      if (counts) ++e2;
    }
  }
  if (dense) {
    e1 = q.n;
    e2 = static_cast<long>(q.n) * (q.n - 1) / 2;
  }
  const double t1 = e1 > 0 ? diag_sq / static_cast<double>(e1) : 0.0;
  const double t2 = e2 > 0 ? off_sq / static_cast<double>(e2) : 0.0;
  return std::sqrt(t1 + t2);
}

}  // namespace

double norm_value(const QuboInstance& inst, NormKind kind) {
  if (kind == NormKind::None) return 1.0;
  if (inst.all_zero())
    throw std::domain_error("norm_value: cannot rescale an all-zero instance");
  switch (kind) {
    case NormKind::Frobenius: {
      double sq = 0.0;
      for (const auto& e : inst.entries) sq += e.value * e.value;
      return std::sqrt(sq);
    }
    case NormKind::MaxAbs: {
      double m = 0.0;
      for (const auto& e : inst.entries) m = std::max(m, std::abs(e.value));
      return m;
    }
    case NormKind::WeightedNorm:
      return weighted_norm(inst);
    default:
      throw std::logic_error("norm_value: unknown kind");
  }
}

QuboInstance rescale(const QuboInstance& inst, NormKind kind) {
  QuboInstance out = inst;
  if (kind == NormKind::None) return out;
  const double nv = norm_value(inst, kind);
  for (auto& e : out.entries) e.value /= nv;
  out.norm_applied = kind;
  return out;
}

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::None:
      return "none";
    case NormKind::Frobenius:
      return "frobenius";
    case NormKind::MaxAbs:
      return "maxabs";
    case NormKind::WeightedNorm:
      return "wnorm";
  }
  throw std::logic_error("to_string: unknown NormKind");
}

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "none") return NormKind::None;
  if (s == "frobenius") return NormKind::Frobenius;
  if (s == "maxabs") return NormKind::MaxAbs;
  if (s == "wnorm") return NormKind::WeightedNorm;
  throw std::invalid_argument("unknown normalization \"" + s +
                              "\" (expected none|frobenius|maxabs|wnorm)");
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Normal:
      return "normal";
    case EnsembleKind::Mixed:
      return "mixed";
    case EnsembleKind::Custom:
      return "custom";
  }
  throw std::logic_error("to_string: unknown EnsembleKind");
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
  if (s == "normal") return EnsembleKind::Normal;
  if (s == "mixed") return EnsembleKind::Mixed;
  if (s == "custom") return EnsembleKind::Custom;
  throw std::invalid_argument("unknown ensemble \"" + s + "\" (expected normal|mixed|custom)");
}

}  // namespace fpqaoa
