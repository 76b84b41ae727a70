#include "fpqaoa/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace fpqaoa {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json instance_to_json(const QuboInstance& inst) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : inst.entries) entries.push_back({e.i, e.j, e.value});
  return {{"n", inst.n},
          {"entries", entries},
          {"ensemble", to_string(inst.ensemble)},
          {"seed", inst.seed},
          {"norm", to_string(inst.norm_applied)}};
}

QuboInstance instance_from_json(const nlohmann::json& j) {
  QuboInstance q;
  q.n = j.at("n").get<int>();
  if (q.n < 1) throw std::invalid_argument("instance: n must be >= 1");
  q.ensemble = ensemble_kind_from_string(j.value("ensemble", "custom"));
  q.seed = j.value("seed", std::uint64_t{0});
  q.norm_applied = norm_kind_from_string(j.value("norm", "none"));
  for (const auto& row : j.at("entries")) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("instance: each entry must be [i, j, value]");
    QuboEntry e{row[0].get<int>(), row[1].get<int>(), row[2].get<double>()};
    if (e.i < 1 || e.j < e.i || e.j > q.n)
      throw std::invalid_argument("instance: entry indices need 1 <= i <= j <= n");
    q.entries.push_back(e);
  }
  std::sort(q.entries.begin(), q.entries.end(), [](const QuboEntry& a, const QuboEntry& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  for (std::size_t k = 1; k < q.entries.size(); ++k)
    if (q.entries[k].i == q.entries[k - 1].i && q.entries[k].j == q.entries[k - 1].j)
      throw std::invalid_argument("instance: duplicate entry for one index pair");
  return q;
}

void write_instance_file(const std::filesystem::path& path, const QuboInstance& inst) {
  write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

QuboInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  nlohmann::json j;
  in >> j;
  return instance_from_json(j);
}

nlohmann::json params_to_json(const FourierParams& params) {
  return {{"q", params.q()}, {"u", params.u}, {"v", params.v}};
}

FourierParams params_from_json(const nlohmann::json& j) {
  FourierParams p;
  p.u = j.at("u").get<std::vector<double>>();
  p.v = j.at("v").get<std::vector<double>>();
  if (p.u.empty() || p.u.size() != p.v.size())
    throw std::invalid_argument("params: u and v must share a length q >= 1");
  if (j.contains("q") && j.at("q").get<int>() != p.q())
    throw std::invalid_argument("params: q does not match u/v length");
  return p;
}

FourierParams read_params_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open params file " + path.string());
  nlohmann::json j;
  in >> j;
  // accept either a bare params object or a full training result
  if (j.contains("params")) return params_from_json(j.at("params"));
  return params_from_json(j);
}

nlohmann::json train_result_to_json(const TrainResult& result,
                                    const nlohmann::json& config_echo) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& [it, loss] : result.trace) trace.push_back({it, loss});
  return {{"params", params_to_json(result.params)},
          {"loss", result.achieved_loss},
          {"eval_count", result.eval_count},
          {"config", config_echo},
          {"trace", trace}};
}

std::string rows_to_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "n,median_sts,q1,q3,p01,p99,outliers,median_ar_expect,mean_p_alpha\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.median_sts);
    out += ',';
    out += format_double(r.q1_sts);
    out += ',';
    out += format_double(r.q3_sts);
    out += ',';
    out += format_double(r.p01_sts);
    out += ',';
    out += format_double(r.p99_sts);
    out += ',';
    out += std::to_string(r.outlier_count);
    out += ',';
    out += format_double(r.median_ar_expect);
    out += ',';
    out += format_double(r.mean_p_alpha);
    out += '\n';
  }
  return out;
}

nlohmann::json records_to_json(const std::vector<std::vector<EvalRecord>>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& per_n : records)
    for (const auto& r : per_n) {
      out.push_back({{"n", r.n},
                     {"seed", r.seed},
                     {"ensemble", to_string(r.ensemble)},
                     {"norm", to_string(r.norm)},
                     {"alpha", r.alpha},
                     {"p_alpha", r.p_alpha},
                     {"sts", r.sts},  // +inf serializes as null
                     {"energy", r.energy},
                     {"ar_expect", r.ar_expect},
                     {"degenerate", r.degenerate}});
    }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace fpqaoa
