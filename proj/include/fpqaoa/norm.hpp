#pragma once

#include <string>

#include "fpqaoa/qubo.hpp"

namespace fpqaoa {

// Frobenius: sqrt(sum_{i<=j} s_ij^2).
// MaxAbs:    max_{i<=j} |s_ij|.
// WeightedNorm: sqrt( sum_{i<j} s_ij^2 / |E2| + sum_i s_ii^2 / |E1| ), where
// |E_k| counts the order-k terms. Dense ensembles (Normal) count every slot,
// n and n(n-1)/2; sparsified ones (Mixed, Custom) count stored nonzero
// coefficients, and a vanished order contributes zero.
// Throws std::domain_error for an all-zero instance with kind != None.
double norm_value(const QuboInstance& inst, NormKind kind);

// Divides every coefficient by norm_value(inst, kind) and tags the copy.
QuboInstance rescale(const QuboInstance& inst, NormKind kind);

// serialized forms: "none" | "frobenius" | "maxabs" | "wnorm"
std::string to_string(NormKind kind);
NormKind norm_kind_from_string(const std::string& s);

// serialized forms: "normal" | "mixed" | "custom"
std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& s);

}  // namespace fpqaoa
