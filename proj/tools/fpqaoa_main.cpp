// Experiment CLI: instance generation, fixed-parameter training, and
// shots-to-solution benchmarking with ablations, alpha sweeps and
// normalization comparisons. Every run writes a config echo that is
// sufficient to reproduce its outputs byte for byte.

#include <omp.h>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpqaoa/bench.hpp"
#include "fpqaoa/io.hpp"
#include "fpqaoa/norm.hpp"
#include "fpqaoa/qubo.hpp"
#include "fpqaoa/rng.hpp"
#include "fpqaoa/training.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fpqaoa;

namespace {

// Sizes past this need --force (a memory estimate is printed first).
constexpr int kDeskCap = 16;

std::vector<int> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw CLI::ValidationError("--n", "malformed size range \"" + text + "\"");
    return v;
  };
  int lo, hi;
  if (sep == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, sep));
    hi = to_int(text.substr(sep + 2));
  }
  if (lo < 1 || hi < lo)
    throw CLI::ValidationError("--n", "need 1 <= A <= B in A..B, got \"" + text + "\"");
  std::vector<int> range;
  for (int n = lo; n <= hi; ++n) range.push_back(n);
  return range;
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t pos = 0;
    const double a = std::stod(tok, &pos);
    if (pos != tok.size() || !(a >= 0.0 && a <= 1.0))
      throw CLI::ValidationError("--alphas", "alpha \"" + tok + "\" not in [0, 1]");
    out.push_back(a);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("--alphas", "empty list");
  return out;
}

std::vector<NormKind> parse_norms(const std::string& text) {
  std::vector<NormKind> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    out.push_back(norm_kind_from_string(
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void apply_jobs(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

void ensure_out_dir(const fs::path& out) {
  fs::create_directories(out);
}

void check_size_guard(const std::vector<int>& n_range, int count, bool force) {
  int n_max = 0;
  for (int n : n_range) n_max = std::max(n_max, n);
  if (n_max <= kDeskCap) return;
  // state vector + cost table per in-flight instance
  const double mib_each =
      static_cast<double>((std::uint64_t{1} << n_max) * 24) / (1024.0 * 1024.0);
  if (!force)
    throw std::runtime_error("n = " + std::to_string(n_max) + " exceeds the desk-scale cap " +
                             std::to_string(kDeskCap) + "; rerun with --force (about " +
                             format_double(mib_each) + " MiB per worker, " +
                             std::to_string(count) + " instances per size)");
  std::cerr << "note: n = " << n_max << " needs about " << format_double(mib_each)
            << " MiB per worker\n";
}

// Suite flags shared by eval, ablate, sweep-alpha and compare-norms.
struct SuiteFlags {
  std::string params_file;
  double u = 0.0, v = 0.0;
  bool have_uv = false;
  double alpha = 0.95;
  std::string kind = "normal";
  std::string range_text = "6..14";
  int count = 1000;
  std::string norm = "frobenius";
  int p_fixed = 0;
  std::uint64_t seed = 1;
  std::string out = ".";
  bool full = false;
  int jobs = 0;
  bool force = false;

  void add_to(CLI::App* cmd) {
    auto* pf = cmd->add_option("--params", params_file, "training result or params JSON");
    auto* uo = cmd->add_option("--u", u, "gamma-side coefficient (q = 1)");
    auto* vo = cmd->add_option("--v", v, "beta-side coefficient (q = 1)");
    uo->needs(vo);
    vo->needs(uo);
    pf->excludes(uo);
    cmd->add_option("--alpha", alpha, "target approximation ratio")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--kind", kind, "instance ensemble: normal|mixed")
        ->check(CLI::IsMember({"normal", "mixed"}));
    cmd->add_option("--n", range_text, "problem sizes, A..B inclusive or a single integer");
    cmd->add_option("--count", count, "instances per size")->check(CLI::PositiveNumber);
    cmd->add_option("--norm", norm, "coefficient rescaling: none|frobenius|maxabs|wnorm");
    cmd->add_option("--p-fixed", p_fixed, "fix circuit depth (0 keeps p = n)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", seed, "base seed; all randomness derives from it");
    cmd->add_option("--out", out, "output directory");
    cmd->add_flag("--full", full, "also write per-instance records JSON");
    cmd->add_option("--jobs", jobs, "worker threads (default: all cores)");
    cmd->add_flag("--force", force, "allow sizes past the desk-scale cap");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!params_file.empty())
      cfg.params = read_params_file(params_file);
    else if (have_uv)
      cfg.params = FourierParams{{u}, {v}};
    else
      throw CLI::ValidationError("--params", "give --params FILE or --u and --v");
    cfg.alpha = alpha;
    cfg.kind = ensemble_kind_from_string(kind);
    cfg.n_range = parse_range(range_text);
    cfg.count = count;
    cfg.normalization = norm_kind_from_string(norm);
    cfg.depth.fixed_p = p_fixed;
    cfg.base_seed = seed;
    check_size_guard(cfg.n_range, count, force);
    apply_jobs(jobs);
    return cfg;
  }

  json echo(const RunConfig& cfg, const char* command) const {
    return {{"command", command},
            {"params", params_to_json(cfg.params)},
            {"alpha", cfg.alpha},
            {"kind", to_string(cfg.kind)},
            {"n_range", cfg.n_range},
            {"count", cfg.count},
            {"norm", to_string(cfg.normalization)},
            {"depth_rule", cfg.depth.equals_n() ? json("equal_n") : json(cfg.depth.fixed_p)},
            {"seed", cfg.base_seed},
            {"jobs", jobs},
            {"full", full}};
  }
};

struct TrainArmFlags {
  bool reuse_params = false;
  int train_n = 6;
  int train_count = 200;
  std::uint64_t train_seed = 1;
  int restarts = 16;
  int budget = 2000;
  double sigma0 = 0.5;

  void add_to(CLI::App* cmd) {
    cmd->add_flag("--reuse-params", reuse_params,
                  "evaluate the given parameters instead of retraining per arm");
    cmd->add_option("--train-n", train_n, "training problem size")->check(CLI::PositiveNumber);
    cmd->add_option("--train-count", train_count, "training set size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--train-seed", train_seed, "seed for the per-arm training run");
    cmd->add_option("--restarts", restarts, "optimizer restarts")->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget", budget, "mutations per restart")->check(CLI::NonNegativeNumber);
    cmd->add_option("--sigma0", sigma0, "initial mutation scale");
  }

  ArmOptions resolve() const {
    ArmOptions opts;
    opts.retrain = !reuse_params;
    opts.train_n = train_n;
    opts.train_count = train_count;
    opts.train_seed = train_seed;
    opts.opt.restarts = restarts;
    opts.opt.evals_per_restart = budget;
    opts.opt.sigma0 = sigma0;
    return opts;
  }

  json echo() const {
    return {{"reuse_params", reuse_params}, {"train_n", train_n},
            {"train_count", train_count},   {"train_seed", train_seed},
            {"restarts", restarts},         {"budget", budget},
            {"sigma0", sigma0}};
  }
};

void write_suite_outputs(const fs::path& dir, const std::string& csv_name,
                         const SuiteResult& res, bool full) {
  write_text_file(dir / csv_name, rows_to_csv(res.rows));
  if (full) {
    fs::path rec = dir / csv_name;
    rec.replace_extension(".records.json");
    write_text_file(rec, records_to_json(res.records).dump(2) + "\n");
  }
}

int cmd_generate(const std::string& kind_text, int n, int count, std::uint64_t seed,
                 const std::string& norm_text, const std::string& out) {
  const EnsembleKind kind = ensemble_kind_from_string(kind_text);
  const NormKind norm = norm_kind_from_string(norm_text);
  const fs::path dir(out);
  ensure_out_dir(dir);

  json files = json::array();
  long zero_count = 0, coeff_count = 0;
  for (int k = 0; k < count; ++k) {
    QuboInstance inst = generate_instance(kind, n, derive_seed(seed, k));
    for (const auto& e : inst.entries) {
      ++coeff_count;
      if (e.value == 0.0) ++zero_count;
    }
    if (norm != NormKind::None && !inst.all_zero()) inst = rescale(inst, norm);
    char name[32];
    std::snprintf(name, sizeof name, "instance_%05d.json", k);
    write_instance_file(dir / name, inst);
    files.push_back(name);
  }

  const json manifest = {{"kind", kind_text},
                         {"n", n},
                         {"count", count},
                         {"seed", seed},
                         {"norm", norm_text},
                         {"files", files},
                         {"zero_coeff_fraction",
                          static_cast<double>(zero_count) / static_cast<double>(coeff_count)}};
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  const json echo = {{"command", "generate"}, {"kind", kind_text},       {"n", n},
                     {"count", count},        {"seed", seed},            {"norm", norm_text},
                     {"out", out}};
  write_text_file(dir / "config_echo.json", echo.dump(2) + "\n");
  std::cout << "wrote " << count << " instances to " << dir.string() << "\n";
  return 0;
}

int cmd_train(const TrainConfig& cfg, std::uint64_t seed, const std::string& out, int jobs) {
  apply_jobs(jobs);
  const TrainResult result = train(cfg, seed);

  const json echo = {{"command", "train"},
                     {"kind", to_string(cfg.kind)},
                     {"n", cfg.train_n},
                     {"count", cfg.train_count},
                     {"alpha", cfg.alpha},
                     {"loss", cfg.loss == LossKind::MinPAlpha ? "min-palpha" : "ar-expect"},
                     {"q", cfg.fourier_q},
                     {"depth_rule", cfg.depth.equals_n() ? json("equal_n") : json(cfg.depth.fixed_p)},
                     {"norm", to_string(cfg.normalization)},
                     {"restarts", cfg.opt.restarts},
                     {"budget", cfg.opt.evals_per_restart},
                     {"sigma0", cfg.opt.sigma0},
                     {"seed", seed},
                     {"jobs", jobs}};
  const fs::path dir(out);
  ensure_out_dir(dir);
  write_text_file(dir / "train_result.json",
                  train_result_to_json(result, echo).dump(2) + "\n");
  write_text_file(dir / "config_echo.json", echo.dump(2) + "\n");

  std::cout << "achieved loss " << format_double(result.achieved_loss) << " after "
            << result.eval_count << " evaluations\n";
  for (int k = 0; k < result.params.q(); ++k)
    std::cout << "  u" << (k + 1) << " = " << format_double(result.params.u[k]) << "  v"
              << (k + 1) << " = " << format_double(result.params.v[k]) << "\n";
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"fixed-parameter QAOA benchmark harness"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write random QUBO instance files");
  std::string g_kind = "normal", g_norm = "none", g_out = ".";
  int g_n = 6, g_count = 1;
  std::uint64_t g_seed = 1;
  gen->add_option("--kind", g_kind, "ensemble: normal|mixed")
      ->check(CLI::IsMember({"normal", "mixed"}));
  gen->add_option("--n", g_n, "problem size")->check(CLI::PositiveNumber);
  gen->add_option("--count", g_count, "number of instances")->check(CLI::PositiveNumber);
  gen->add_option("--seed", g_seed, "base seed");
  gen->add_option("--norm", g_norm, "rescale written instances: none|frobenius|maxabs|wnorm");
  gen->add_option("--out", g_out, "output directory");

  // train
  auto* tr = app.add_subcommand("train", "search fixed parameters on a training ensemble");
  TrainConfig t_cfg;
  std::string t_kind = "normal", t_loss = "min-palpha", t_norm = "frobenius", t_out = ".";
  std::uint64_t t_seed = 1;
  int t_jobs = 0;
  tr->add_option("--kind", t_kind, "ensemble: normal|mixed")
      ->check(CLI::IsMember({"normal", "mixed"}));
  tr->add_option("--n", t_cfg.train_n, "training problem size")->check(CLI::PositiveNumber);
  tr->add_option("--count", t_cfg.train_count, "training set size")->check(CLI::PositiveNumber);
  tr->add_option("--alpha", t_cfg.alpha, "target approximation ratio")
      ->check(CLI::Range(0.0, 1.0));
  tr->add_option("--loss", t_loss, "objective: min-palpha|ar-expect")
      ->check(CLI::IsMember({"min-palpha", "ar-expect"}));
  tr->add_option("--q", t_cfg.fourier_q, "Fourier encoding order (1 = sine-cosine)")
      ->check(CLI::PositiveNumber);
  tr->add_option("--p-fixed", t_cfg.depth.fixed_p, "fix circuit depth (0 keeps p = n)")
      ->check(CLI::NonNegativeNumber);
  tr->add_option("--norm", t_norm, "rescaling: none|frobenius|maxabs|wnorm");
  tr->add_option("--restarts", t_cfg.opt.restarts, "optimizer restarts")
      ->check(CLI::NonNegativeNumber);
  tr->add_option("--budget", t_cfg.opt.evals_per_restart, "mutations per restart")
      ->check(CLI::NonNegativeNumber);
  tr->add_option("--sigma0", t_cfg.opt.sigma0, "initial mutation scale");
  tr->add_option("--seed", t_seed, "seed (ensemble and optimizer streams derive from it)");
  tr->add_option("--out", t_out, "output directory");
  tr->add_option("--jobs", t_jobs, "worker threads");

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate fixed parameters over test ensembles");
  SuiteFlags e_flags;
  e_flags.add_to(ev);

  // ablate
  auto* ab = app.add_subcommand("ablate", "rerun the suite with one modification removed");
  SuiteFlags a_flags;
  a_flags.add_to(ab);
  TrainArmFlags a_train;
  a_train.add_to(ab);
  std::string a_which;
  ab->add_option("--which", a_which, "ablation: no-m1|no-m2|no-m3")
      ->required()
      ->check(CLI::IsMember({"no-m1", "no-m2", "no-m3"}));

  // sweep-alpha
  auto* sw = app.add_subcommand("sweep-alpha", "suites over several target ARs, shared instances");
  SuiteFlags s_flags;
  s_flags.add_to(sw);
  std::string s_alphas = "0.9,0.95,0.99,1.0";
  sw->add_option("--alphas", s_alphas, "comma-separated list of ARs");

  // compare-norms
  auto* cn = app.add_subcommand("compare-norms", "suites per rescaling strategy, shared seeds");
  SuiteFlags c_flags;
  c_flags.add_to(cn);
  TrainArmFlags c_train;
  c_train.add_to(cn);
  std::string c_norms = "frobenius,maxabs,wnorm";
  cn->add_option("--norms", c_norms, "comma-separated rescaling kinds");

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "enumerate the exact cost table of one instance");
  std::string sp_in, sp_out, sp_norm = "none";
  double sp_alpha = -1.0;
  bool sp_full = false;
  sp->add_option("--in", sp_in, "instance JSON file")->required();
  sp->add_option("--alpha", sp_alpha, "also report the feasible set at this AR")
      ->check(CLI::Range(0.0, 1.0));
  sp->add_option("--norm", sp_norm, "rescale before enumerating");
  sp->add_option("--out", sp_out, "write a spectrum JSON file");
  sp->add_flag("--full", sp_full, "include the full cost table in --out");

  // wire the flags that CLI11 stores by pointer
  ev->callback([&] { e_flags.have_uv = ev->count("--u") > 0; });
  ab->callback([&] { a_flags.have_uv = ab->count("--u") > 0; });
  sw->callback([&] { s_flags.have_uv = sw->count("--u") > 0; });
  cn->callback([&] { c_flags.have_uv = cn->count("--u") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // exit codes: 0 success, 1 usage error, 2 runtime error
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (gen->parsed()) return cmd_generate(g_kind, g_n, g_count, g_seed, g_norm, g_out);

  if (tr->parsed()) {
    t_cfg.kind = ensemble_kind_from_string(t_kind);
    t_cfg.loss = t_loss == "min-palpha" ? LossKind::MinPAlpha : LossKind::MeanArExpect;
    t_cfg.normalization = norm_kind_from_string(t_norm);
    return cmd_train(t_cfg, t_seed, t_out, t_jobs);
  }

  if (ev->parsed()) {
    const RunConfig cfg = e_flags.resolve();
    const fs::path dir(e_flags.out);
    ensure_out_dir(dir);
    const SuiteResult res = run_suite(cfg);
    write_suite_outputs(dir, "results.csv", res, e_flags.full);
    write_text_file(dir / "config_echo.json", e_flags.echo(cfg, "eval").dump(2) + "\n");
    std::cout << rows_to_csv(res.rows);
    return 0;
  }

  if (ab->parsed()) {
    const RunConfig base = a_flags.resolve();
    const Ablation which = a_which == "no-m1"   ? Ablation::NoM1
                           : a_which == "no-m2" ? Ablation::NoM2
                                                : Ablation::NoM3;
    const ArmOptions opts = a_train.resolve();
    const fs::path dir(a_flags.out);
    ensure_out_dir(dir);
    const SuiteResult res = ablation_suite(base, which, opts);
    write_suite_outputs(dir, "results.csv", res, a_flags.full);
    json echo = a_flags.echo(apply_ablation(base, which), "ablate");
    echo["which"] = a_which;
    echo["arm"] = a_train.echo();
    write_text_file(dir / "config_echo.json", echo.dump(2) + "\n");
    std::cout << rows_to_csv(res.rows);
    return 0;
  }

  if (sw->parsed()) {
    const RunConfig cfg = s_flags.resolve();
    const std::vector<double> alphas = parse_alphas(s_alphas);
    const fs::path dir(s_flags.out);
    ensure_out_dir(dir);
    const auto results = alpha_sweep(cfg, alphas);
    for (const auto& [a, res] : results) {
      const std::string name = "sweep_alpha_" + format_double(a) + ".csv";
      write_suite_outputs(dir, name, res, s_flags.full);
    }
    json echo = s_flags.echo(cfg, "sweep-alpha");
    echo["alphas"] = alphas;
    write_text_file(dir / "config_echo.json", echo.dump(2) + "\n");
    std::cout << "wrote " << results.size() << " sweep CSV files to " << dir.string() << "\n";
    return 0;
  }

  if (cn->parsed()) {
    const RunConfig cfg = c_flags.resolve();
    const std::vector<NormKind> kinds = parse_norms(c_norms);
    const ArmOptions opts = c_train.resolve();
    const fs::path dir(c_flags.out);
    ensure_out_dir(dir);
    const auto results = norm_comparison_suite(cfg, kinds, opts);
    for (const auto& [kind, res] : results)
      write_suite_outputs(dir, "compare_" + to_string(kind) + ".csv", res, c_flags.full);
    json echo = c_flags.echo(cfg, "compare-norms");
    json kind_names = json::array();
    for (NormKind k : kinds) kind_names.push_back(to_string(k));
    echo["norms"] = kind_names;
    echo["arm"] = c_train.echo();
    write_text_file(dir / "config_echo.json", echo.dump(2) + "\n");
    std::cout << "wrote " << results.size() << " comparison CSV files to " << dir.string() << "\n";
    return 0;
  }

  if (sp->parsed()) {
    QuboInstance inst = read_instance_file(sp_in);
    const NormKind norm = norm_kind_from_string(sp_norm);
    if (norm != NormKind::None) inst = rescale(inst, norm);
    const Spectrum spec = compute_spectrum(inst);
    std::cout << "n = " << spec.n << "\nc_min = " << format_double(spec.c_min)
              << "\nc_max = " << format_double(spec.c_max)
              << "\nargmin states = " << spec.argmin_set.size()
              << (spec.degenerate() ? " (degenerate spectrum)" : "") << "\n";
    json out = {{"n", spec.n},
                {"c_min", spec.c_min},
                {"c_max", spec.c_max},
                {"argmin_set", spec.argmin_set},
                {"degenerate", spec.degenerate()}};
    if (sp_alpha >= 0.0) {
      const FeasibleSet fsn = feasible_set(spec, sp_alpha);
      std::cout << "|F(" << format_double(sp_alpha) << ")| = " << fsn.members.size()
                << ", threshold = " << format_double(fsn.threshold_cost)
                << ", brute-force shots = "
                << format_double(brute_force_baseline(spec, sp_alpha)) << "\n";
      out["alpha"] = sp_alpha;
      out["feasible_count"] = fsn.members.size();
      out["threshold_cost"] = fsn.threshold_cost;
    }
    if (!sp_out.empty()) {
      if (sp_full) out["costs"] = spec.costs;
      write_text_file(sp_out, out.dump(2) + "\n");
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // validation errors raised after parsing are still usage errors
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
