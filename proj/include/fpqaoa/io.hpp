#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpqaoa/bench.hpp"
#include "fpqaoa/encoding.hpp"
#include "fpqaoa/qubo.hpp"
#include "fpqaoa/training.hpp"

namespace fpqaoa {

// Shortest round-trip decimal form (std::to_chars); infinities print as
// "inf"/"-inf". Used for every number in CSV output so reruns with the same
// seeds are byte-identical.
std::string format_double(double x);

// Instance interchange format:
// {"n": int, "entries": [[i, j, value], ...], "ensemble": str,
//  "seed": uint, "norm": str} with 1-based i <= j; omitted pairs are zero.
nlohmann::json instance_to_json(const QuboInstance& inst);
QuboInstance instance_from_json(const nlohmann::json& j);
void write_instance_file(const std::filesystem::path& path, const QuboInstance& inst);
QuboInstance read_instance_file(const std::filesystem::path& path);

// {"q": int, "u": [...], "v": [...]}
nlohmann::json params_to_json(const FourierParams& params);
FourierParams params_from_json(const nlohmann::json& j);
FourierParams read_params_file(const std::filesystem::path& path);

// {"params": {...}, "loss": real, "config": {...}, "trace": [[iter, loss]...]}
nlohmann::json train_result_to_json(const TrainResult& result, const nlohmann::json& config_echo);

// header: n,median_sts,q1,q3,p01,p99,outliers,median_ar_expect,mean_p_alpha
std::string rows_to_csv(const std::vector<SummaryRow>& rows);

nlohmann::json records_to_json(const std::vector<std::vector<EvalRecord>>& records);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace fpqaoa
