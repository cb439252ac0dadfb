// Command line front end for the slslab shared library. Subcommands:
//   gen        write a random K-SAT instance as DIMACS CNF
//   solve      run one trajectory, emit the run record as JSON
//   whiten     whiteness depths of an assignment against an instance
//   cdf        solution-time CDF over an ensemble of fresh instances
//   scan       success fraction across a parameter grid
//   xsat       distance-constrained searches around a reference solution
//   chainstats ChainSAT chain-length / whiteness-depth table
// Exit code 0 on completion, nonzero on configuration or runtime error.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slslab.h"

namespace {

int fail(sls_status status) {
  std::fprintf(stderr, "slslab: error: %s\n", sls_error_message());
  return static_cast<int>(status);
}

// Accepts "a,b,c" or "lo:hi:step" (hi inclusive up to rounding slack).
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
      throw CLI::ValidationError("grid", "expected lo:hi:step with step > 0");
    for (int i = 0;; ++i) {
      const double v = lo + i * step;
      if (v > hi + step * 1e-9) break;
      values.push_back(v);
    }
  } else {
    std::string token;
    for (size_t pos = 0; pos <= spec.size(); ++pos) {
      if (pos == spec.size() || spec[pos] == ',') {
        if (!token.empty()) values.push_back(std::stod(token));
        token.clear();
      } else {
        token += spec[pos];
      }
    }
  }
  if (values.empty()) throw CLI::ValidationError("grid", "no values");
  return values;
}

sls_algorithm algorithm_from(const std::string& name) {
  if (name == "rwsat") return SLS_ALGO_RWSAT;
  if (name == "walksat") return SLS_ALGO_WALKSAT;
  if (name == "fms") return SLS_ALGO_FMS;
  return SLS_ALGO_CHAINSAT;
}

sls_scan_parameter scan_parameter_from(const std::string& name) {
  if (name == "eta") return SLS_SCAN_ETA;
  if (name == "noise") return SLS_SCAN_NOISE;
  if (name == "p1") return SLS_SCAN_P1;
  return SLS_SCAN_P2;
}

int emit_text(char* text, size_t length, const std::string& out) {
  int rc = 0;
  if (out.empty() || out == "-") {
    if (std::fwrite(text, 1, length, stdout) != length) rc = 1;
  } else {
    std::FILE* f = std::fopen(out.c_str(), "wb");
    if (!f || std::fwrite(text, 1, length, f) != length) {
      std::fprintf(stderr, "slslab: error: cannot write %s\n", out.c_str());
      rc = 1;
    }
    if (f) std::fclose(f);
  }
  sls_string_free(text);
  return rc;
}

struct InstanceArgs {
  std::string file;
  int32_t k = 4;
  int32_t n = 10000;
  double alpha = 9.6;
};

// Positional CNF file wins; otherwise generate from (k, n, alpha, seed).
int open_instance(const InstanceArgs& args, uint64_t seed, sls_instance** inst) {
  const sls_status status =
      args.file.empty() ? sls_instance_generate(args.k, args.n, args.alpha, seed, inst)
                        : sls_instance_load(args.file.c_str(), inst);
  return status == SLS_OK ? 0 : fail(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stochastic local search laboratory for random K-SAT"};
  app.require_subcommand(1);

  std::string out = "-";
  std::string format = "csv";
  uint64_t seed = 1;
  int32_t threads = 0;
  InstanceArgs inst_args;

  const auto add_ensemble = [&](CLI::App* cmd, bool with_file) {
    if (with_file)
      cmd->add_option("cnf", inst_args.file, "DIMACS CNF file (otherwise generated)");
    cmd->add_option("--k", inst_args.k, "clause width");
    cmd->add_option("--n", inst_args.n, "number of variables");
    cmd->add_option("--alpha", inst_args.alpha, "clause-to-variable ratio");
    cmd->add_option("--seed", seed, "master RNG seed");
    cmd->add_option("--out", out, "output path, - for stdout");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random K-SAT instance");
  add_ensemble(gen, false);

  // solve
  sls_params params{SLS_ALGO_FMS, 0.293, 0.5, 0.0001, 0.0001, 10000};
  std::string algo = "fms";
  std::string solution_out;
  auto* solve = app.add_subcommand("solve", "run one trajectory");
  add_ensemble(solve, true);
  solve->add_option("--algo", algo, "rwsat|walksat|fms|chainsat")
      ->check(CLI::IsMember({"rwsat", "walksat", "fms", "chainsat"}));
  solve->add_option("--eta", params.eta, "FMS temperature");
  solve->add_option("--noise", params.noise, "WalkSAT noise");
  solve->add_option("--p1", params.p1, "ChainSAT descent probability");
  solve->add_option("--p2", params.p2, "ChainSAT chain-termination probability");
  solve->add_option("--cutoff", params.cutoff,
                    "max flips per variable (iterations for chainsat)");
  solve->add_option("--solution-out", solution_out, "write the solution value line here");

  // whiten
  std::string assignment_file;
  auto* whiten = app.add_subcommand("whiten", "whiteness depths of an assignment");
  whiten->add_option("cnf", inst_args.file, "DIMACS CNF file")->required();
  whiten->add_option("assignment", assignment_file, "value-line file (v ... 0)")->required();
  whiten->add_option("--out", out, "output path, - for stdout");

  // cdf
  int32_t trials = 50;
  auto* cdf = app.add_subcommand("cdf", "solution-time CDF over fresh instances");
  add_ensemble(cdf, false);
  cdf->add_option("--algo", algo, "rwsat|walksat|fms|chainsat")
      ->check(CLI::IsMember({"rwsat", "walksat", "fms", "chainsat"}));
  cdf->add_option("--eta", params.eta, "FMS temperature");
  cdf->add_option("--noise", params.noise, "WalkSAT noise");
  cdf->add_option("--p1", params.p1, "ChainSAT descent probability");
  cdf->add_option("--p2", params.p2, "ChainSAT chain-termination probability");
  cdf->add_option("--cutoff", params.cutoff, "cutoff per variable");
  cdf->add_option("--trials", trials, "number of instances");
  cdf->add_option("--threads", threads, "worker threads (0 = all cores)");
  cdf->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  // scan
  std::string scan_param = "eta";
  std::string grid_spec;
  auto* scan = app.add_subcommand("scan", "success fraction across a parameter grid");
  add_ensemble(scan, false);
  scan->add_option("--algo", algo, "rwsat|walksat|fms|chainsat")
      ->check(CLI::IsMember({"rwsat", "walksat", "fms", "chainsat"}));
  scan->add_option("--eta", params.eta, "FMS temperature");
  scan->add_option("--noise", params.noise, "WalkSAT noise");
  scan->add_option("--p1", params.p1, "ChainSAT descent probability");
  scan->add_option("--p2", params.p2, "ChainSAT chain-termination probability");
  scan->add_option("--cutoff", params.cutoff, "cutoff per variable");
  scan->add_option("--trials", trials, "trials per grid value");
  scan->add_option("--param", scan_param, "eta|noise|p1|p2")
      ->check(CLI::IsMember({"eta", "noise", "p1", "p2"}));
  scan->add_option("--grid", grid_spec, "values `a,b,c` or range `lo:hi:step`")->required();
  scan->add_option("--threads", threads, "worker threads (0 = all cores)");
  scan->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  // xsat
  std::string distances_spec = "0:0.5:0.0025";
  int32_t searches_per_distance = 1;
  double window = 0.004;
  double xsat_eta = 0.293;
  double xsat_cutoff = 60000;
  auto* xsat = app.add_subcommand("xsat", "distance-constrained searches around a reference");
  add_ensemble(xsat, false);
  xsat->add_option("--eta", xsat_eta, "FMS temperature");
  xsat->add_option("--cutoff", xsat_cutoff, "max flips per variable");
  xsat->add_option("--distances", distances_spec, "initial distances `lo:hi:step` or `a,b,c`");
  xsat->add_option("--searches-per-distance", searches_per_distance, "searches per distance");
  xsat->add_option("--window", window, "moving window for the CSV percentile bands");
  xsat->add_option("--threads", threads, "worker threads (0 = all cores)");
  xsat->add_option("--format", format, "csv (bands) | json (raw records)")
      ->check(CLI::IsMember({"csv", "json"}));

  // chainstats
  std::vector<int32_t> ks{4};
  std::string alphas_spec;
  double p1 = 0.0001, p2 = 0.0001;
  double chain_cutoff = 100000;
  auto* chainstats =
      app.add_subcommand("chainstats", "ChainSAT chain length and whiteness depth vs alpha");
  chainstats->add_option("--k", ks, "clause widths (repeatable)");
  chainstats->add_option("--n", inst_args.n, "number of variables");
  chainstats->add_option("--alphas", alphas_spec, "alpha grid `a,b,c` or `lo:hi:step`")
      ->required();
  chainstats->add_option("--p1", p1, "descent probability");
  chainstats->add_option("--p2", p2, "chain-termination probability");
  chainstats->add_option("--trials", trials, "instances per (K, alpha) cell");
  chainstats->add_option("--cutoff", chain_cutoff, "max iterations per variable");
  chainstats->add_option("--seed", seed, "master RNG seed");
  chainstats->add_option("--threads", threads, "worker threads (0 = all cores)");
  chainstats->add_option("--out", out, "output path, - for stdout");
  chainstats->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  const sls_format fmt = format == "csv" ? SLS_FORMAT_CSV : SLS_FORMAT_JSON;
  const char* out_path = out.c_str();
  params.algorithm = algorithm_from(algo);

  if (gen->parsed()) {
    sls_instance* inst = nullptr;
    if (int rc = open_instance(inst_args, seed, &inst)) return rc;
    char* text = nullptr;
    size_t length = 0;
    const sls_status status = sls_instance_format(inst, &text, &length);
    sls_instance_free(inst);
    if (status != SLS_OK) return fail(status);
    return emit_text(text, length, out);
  }

  if (solve->parsed()) {
    sls_instance* inst = nullptr;
    // Generated instances draw from child 0 and the run from child 1 of
    // the seed, so `solve --seed s` matches trial 0 conventions.
    const uint64_t instance_seed =
        inst_args.file.empty() ? sls_derive_seed(seed, 0) : 0;
    const uint64_t run_seed = inst_args.file.empty() ? sls_derive_seed(seed, 1) : seed;
    if (int rc = open_instance(inst_args, instance_seed, &inst)) return rc;
    const int32_t n = sls_instance_variables(inst);
    std::vector<uint8_t> solution(static_cast<size_t>(n), 0);
    sls_run_record record;
    sls_status status = sls_solve(inst, &params, run_seed, nullptr, &record, solution.data());
    if (status != SLS_OK) {
      sls_instance_free(inst);
      return fail(status);
    }
    if (!solution_out.empty() && record.solved) {
      status = sls_assignment_save(solution_out.c_str(), solution.data(), n);
      if (status != SLS_OK) {
        sls_instance_free(inst);
        return fail(status);
      }
    }
    sls_instance_free(inst);
    char* text = nullptr;
    size_t length = 0;
    status = sls_run_record_json(&record, &text, &length);
    if (status != SLS_OK) return fail(status);
    return emit_text(text, length, out);
  }

  if (whiten->parsed()) {
    sls_instance* inst = nullptr;
    sls_status status = sls_instance_load(inst_args.file.c_str(), &inst);
    if (status != SLS_OK) return fail(status);
    const int32_t n = sls_instance_variables(inst);
    std::vector<uint8_t> values(static_cast<size_t>(n), 0);
    status = sls_assignment_load(assignment_file.c_str(), n, values.data());
    if (status != SLS_OK) {
      sls_instance_free(inst);
      return fail(status);
    }
    char* text = nullptr;
    size_t length = 0;
    status = sls_whiten_json(inst, values.data(), &text, &length);
    sls_instance_free(inst);
    if (status != SLS_OK) return fail(status);
    return emit_text(text, length, out);
  }

  if (cdf->parsed() || scan->parsed()) {
    sls_plan plan;
    plan.algorithm = params.algorithm;
    plan.k = inst_args.k;
    plan.n = inst_args.n;
    plan.alpha = inst_args.alpha;
    plan.eta = params.eta;
    plan.noise = params.noise;
    plan.p1 = params.p1;
    plan.p2 = params.p2;
    plan.trials = trials;
    plan.cutoff = params.cutoff;
    plan.master_seed = seed;
    plan.threads = threads;
    sls_status status;
    if (cdf->parsed()) {
      status = sls_cdf(&plan, fmt, out_path);
    } else {
      const std::vector<double> grid = parse_grid(grid_spec);
      status = sls_scan(&plan, scan_parameter_from(scan_param), grid.data(), grid.size(),
                        fmt, out_path);
    }
    return status == SLS_OK ? 0 : fail(status);
  }

  if (xsat->parsed()) {
    const std::vector<double> distances = parse_grid(distances_spec);
    sls_xsat_plan plan;
    plan.k = inst_args.k;
    plan.n = inst_args.n;
    plan.alpha = inst_args.alpha;
    plan.eta = xsat_eta;
    plan.cutoff = xsat_cutoff;
    plan.distances = distances.data();
    plan.distance_count = distances.size();
    plan.searches_per_distance = searches_per_distance;
    plan.window = window;
    plan.master_seed = seed;
    plan.threads = threads;
    const sls_status status = sls_xsat(&plan, fmt, out_path);
    return status == SLS_OK ? 0 : fail(status);
  }

  if (chainstats->parsed()) {
    const std::vector<double> alphas = parse_grid(alphas_spec);
    sls_chain_stats_plan plan;
    plan.ks = ks.data();
    plan.k_count = ks.size();
    plan.alphas = alphas.data();
    plan.alpha_count = alphas.size();
    plan.n = inst_args.n;
    plan.p1 = p1;
    plan.p2 = p2;
    plan.trials = trials;
    plan.cutoff = chain_cutoff;
    plan.master_seed = seed;
    plan.threads = threads;
    const sls_status status = sls_chain_stats(&plan, fmt, out_path);
    return status == SLS_OK ? 0 : fail(status);
  }

  return 0;
}
