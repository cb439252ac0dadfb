#include "slslab.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>

#include "dimacs.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "serialize.hpp"

struct sls_instance {
  slslab::Instance impl;
};

namespace {

thread_local std::string t_error;

template <class Fn>
sls_status guarded(Fn&& fn) {
  try {
    fn();
    t_error.clear();
    return SLS_OK;
  } catch (const slslab::ParseError& e) {
    t_error = e.what();
    return SLS_ERR_PARSE;
  } catch (const slslab::IoError& e) {
    t_error = e.what();
    return SLS_ERR_IO;
  } catch (const slslab::SearchError& e) {
    t_error = e.what();
    return SLS_ERR_SEARCH;
  } catch (const std::invalid_argument& e) {
    t_error = e.what();
    return SLS_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    t_error = "out of memory";
    return SLS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_error = e.what();
    return SLS_ERR_INTERNAL;
  }
}

sls_status argument_error(const char* message) {
  t_error = message;
  return SLS_ERR_ARGUMENT;
}

char* copy_out(const std::string& s, size_t* length) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  if (length) *length = s.size();
  return buf;
}

// 0-based byte array -> 1-based internal assignment.
slslab::Assignment to_assignment(const uint8_t* values, int32_t n) {
  slslab::Assignment a(static_cast<size_t>(n) + 1, 0);
  for (int32_t v = 0; v < n; ++v) a[v + 1] = values[v] ? 1 : 0;
  return a;
}

void from_assignment(const slslab::Assignment& a, uint8_t* values) {
  for (size_t v = 1; v < a.size(); ++v) values[v - 1] = a[v];
}

slslab::RunRecord run_with(const slslab::Instance& inst, const sls_params& params,
                           uint64_t seed, const slslab::Assignment* initial) {
  switch (params.algorithm) {
    case SLS_ALGO_RWSAT:
      return slslab::run_randomwalksat(inst, params.cutoff, seed, initial);
    case SLS_ALGO_WALKSAT:
      return slslab::run_walksat(inst, params.noise, params.cutoff, seed, initial);
    case SLS_ALGO_FMS:
      return slslab::run_fms(inst, {params.eta, params.cutoff}, seed, initial);
    case SLS_ALGO_CHAINSAT:
      return slslab::run_chainsat(inst, {params.p1, params.p2, params.cutoff}, seed, initial);
  }
  throw std::invalid_argument("unknown algorithm");
}

sls_run_record to_c_record(const slslab::RunRecord& rec) {
  sls_run_record out;
  out.solved = rec.solved ? 1 : 0;
  out.flips = rec.flips;
  out.iterations = rec.iterations;
  out.chain_starts = rec.chain_starts;
  out.avg_chain_length = rec.avg_chain_length;
  out.final_energy = rec.final_energy;
  out.seed = rec.seed;
  out.elapsed_s = rec.elapsed_s;
  return out;
}

slslab::RunRecord from_c_record(const sls_run_record& rec) {
  slslab::RunRecord out;
  out.solved = rec.solved != 0;
  out.flips = rec.flips;
  out.iterations = rec.iterations;
  out.chain_starts = rec.chain_starts;
  out.avg_chain_length = rec.avg_chain_length;
  out.final_energy = rec.final_energy;
  out.seed = rec.seed;
  out.elapsed_s = rec.elapsed_s;
  return out;
}

slslab::ExperimentPlan to_plan(const sls_plan& plan) {
  slslab::ExperimentPlan out;
  switch (plan.algorithm) {
    case SLS_ALGO_RWSAT: out.algorithm = slslab::Algorithm::kRandomWalkSat; break;
    case SLS_ALGO_WALKSAT: out.algorithm = slslab::Algorithm::kWalkSat; break;
    case SLS_ALGO_FMS: out.algorithm = slslab::Algorithm::kFms; break;
    case SLS_ALGO_CHAINSAT: out.algorithm = slslab::Algorithm::kChainSat; break;
    default: throw std::invalid_argument("unknown algorithm");
  }
  out.k = plan.k;
  out.n = plan.n;
  out.alpha = plan.alpha;
  out.eta = plan.eta;
  out.noise = plan.noise;
  out.p1 = plan.p1;
  out.p2 = plan.p2;
  out.trials = plan.trials;
  out.cutoff = plan.cutoff;
  out.master_seed = plan.master_seed;
  out.threads = plan.threads;
  return out;
}

void emit(const std::string& text, const char* out_path) {
  if (!out_path || std::strcmp(out_path, "-") == 0) {
    if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size())
      throw slslab::IoError("write failure on stdout");
    std::fflush(stdout);
    return;
  }
  slslab::write_text_file(out_path, text);
}

}  // namespace

extern "C" {

const char* sls_error_message(void) { return t_error.c_str(); }

uint64_t sls_derive_seed(uint64_t master_seed, uint64_t index) {
  return slslab::derive_seed(master_seed, index);
}

void sls_string_free(char* text) { std::free(text); }

sls_status sls_instance_generate(int32_t k, int32_t n, double alpha, uint64_t seed,
                                 sls_instance** out) {
  if (!out) return argument_error("out is null");
  *out = nullptr;
  return guarded([&] {
    *out = new sls_instance{slslab::Instance::generate(k, n, alpha, seed)};
  });
}

sls_status sls_instance_parse(const char* text, size_t length, sls_instance** out) {
  if (!text || !out) return argument_error("text/out is null");
  *out = nullptr;
  return guarded([&] {
    std::string_view view = length > 0 ? std::string_view(text, length)
                                       : std::string_view(text);
    *out = new sls_instance{slslab::parse_dimacs(view)};
  });
}

sls_status sls_instance_load(const char* path, sls_instance** out) {
  if (!path || !out) return argument_error("path/out is null");
  *out = nullptr;
  return guarded([&] { *out = new sls_instance{slslab::read_dimacs_file(path)}; });
}

sls_status sls_instance_format(const sls_instance* inst, char** text, size_t* length) {
  if (!inst || !text) return argument_error("instance/text is null");
  return guarded([&] { *text = copy_out(slslab::write_dimacs(inst->impl), length); });
}

sls_status sls_instance_save(const sls_instance* inst, const char* path) {
  if (!inst || !path) return argument_error("instance/path is null");
  return guarded([&] { slslab::write_dimacs_file(inst->impl, path); });
}

void sls_instance_free(sls_instance* inst) { delete inst; }

int32_t sls_instance_width(const sls_instance* inst) { return inst->impl.width(); }
int32_t sls_instance_variables(const sls_instance* inst) { return inst->impl.variables(); }
int32_t sls_instance_clauses(const sls_instance* inst) { return inst->impl.clause_count(); }

sls_status sls_assignment_load(const char* path, int32_t n, uint8_t* values) {
  if (!path || !values) return argument_error("path/values is null");
  return guarded([&] {
    const slslab::Assignment a = slslab::read_assignment_file(path, n);
    from_assignment(a, values);
  });
}

sls_status sls_assignment_save(const char* path, const uint8_t* values, int32_t n) {
  if (!path || !values) return argument_error("path/values is null");
  return guarded(
      [&] { slslab::write_assignment_file(to_assignment(values, n), path); });
}

sls_status sls_assignment_check(const sls_instance* inst, const uint8_t* values,
                                int32_t* satisfied) {
  if (!inst || !values || !satisfied) return argument_error("instance/values/satisfied is null");
  return guarded([&] {
    *satisfied =
        slslab::satisfies(inst->impl, to_assignment(values, inst->impl.variables())) ? 1 : 0;
  });
}

sls_status sls_solve(const sls_instance* inst, const sls_params* params, uint64_t seed,
                     const uint8_t* initial, sls_run_record* record, uint8_t* solution) {
  if (!inst || !params || !record) return argument_error("instance/params/record is null");
  return guarded([&] {
    slslab::Assignment start;
    const slslab::Assignment* start_ptr = nullptr;
    if (initial) {
      start = to_assignment(initial, inst->impl.variables());
      start_ptr = &start;
    }
    const slslab::RunRecord rec = run_with(inst->impl, *params, seed, start_ptr);
    *record = to_c_record(rec);
    if (solution && rec.solution) from_assignment(*rec.solution, solution);
  });
}

sls_status sls_run_record_json(const sls_run_record* record, char** text, size_t* length) {
  if (!record || !text) return argument_error("record/text is null");
  return guarded(
      [&] { *text = copy_out(slslab::run_record_json(from_c_record(*record)), length); });
}

sls_status sls_whiten(const sls_instance* inst, const uint8_t* values, int32_t* outcome,
                      double* awd, int32_t* depths) {
  if (!inst || !values || !outcome || !awd)
    return argument_error("instance/values/outcome/awd is null");
  return guarded([&] {
    const slslab::WhitenessResult res =
        slslab::whiten(inst->impl, to_assignment(values, inst->impl.variables()));
    *outcome = res.outcome == slslab::WhitenessOutcome::kCompletelyWhite
                   ? SLS_COMPLETELY_WHITE
                   : SLS_CORE;
    *awd = res.awd;
    if (depths)
      for (size_t v = 1; v < res.depth.size(); ++v) depths[v - 1] = res.depth[v];
  });
}

sls_status sls_whiten_json(const sls_instance* inst, const uint8_t* values, char** text,
                           size_t* length) {
  if (!inst || !values || !text) return argument_error("instance/values/text is null");
  return guarded([&] {
    const slslab::WhitenessResult res =
        slslab::whiten(inst->impl, to_assignment(values, inst->impl.variables()));
    *text = copy_out(slslab::whiteness_json(res), length);
  });
}

sls_status sls_cdf(const sls_plan* plan, sls_format format, const char* out_path) {
  if (!plan) return argument_error("plan is null");
  return guarded([&] {
    const slslab::ExperimentPlan p = to_plan(*plan);
    const slslab::CdfResult result = slslab::run_cdf(p);
    emit(format == SLS_FORMAT_CSV ? slslab::cdf_csv(p, result)
                                  : slslab::cdf_jsonl(p, result),
         out_path);
  });
}

sls_status sls_scan(const sls_plan* plan, sls_scan_parameter parameter, const double* grid,
                    size_t grid_length, sls_format format, const char* out_path) {
  if (!plan || !grid) return argument_error("plan/grid is null");
  return guarded([&] {
    slslab::ScanParameter param;
    switch (parameter) {
      case SLS_SCAN_ETA: param = slslab::ScanParameter::kEta; break;
      case SLS_SCAN_NOISE: param = slslab::ScanParameter::kNoise; break;
      case SLS_SCAN_P1: param = slslab::ScanParameter::kP1; break;
      case SLS_SCAN_P2: param = slslab::ScanParameter::kP2; break;
      default: throw std::invalid_argument("unknown scan parameter");
    }
    const slslab::ExperimentPlan p = to_plan(*plan);
    const std::vector<double> values(grid, grid + grid_length);
    const slslab::ScanResult result = slslab::scan_parameter(p, param, values);
    emit(format == SLS_FORMAT_CSV ? slslab::scan_csv(p, param, result)
                                  : slslab::scan_jsonl(p, param, result),
         out_path);
  });
}

sls_status sls_xsat(const sls_xsat_plan* plan, sls_format format, const char* out_path) {
  if (!plan || !plan->distances) return argument_error("plan/distances is null");
  return guarded([&] {
    slslab::XsatPlan p;
    p.k = plan->k;
    p.n = plan->n;
    p.alpha = plan->alpha;
    p.eta = plan->eta;
    p.cutoff = plan->cutoff;
    p.distances.assign(plan->distances, plan->distances + plan->distance_count);
    p.searches_per_distance = plan->searches_per_distance;
    p.window = plan->window;
    p.master_seed = plan->master_seed;
    p.threads = plan->threads;
    const slslab::XsatResult result = slslab::run_xsat(p);
    emit(format == SLS_FORMAT_CSV ? slslab::xsat_bands_csv(p, result)
                                  : slslab::xsat_jsonl(p, result),
         out_path);
  });
}

sls_status sls_chain_stats(const sls_chain_stats_plan* plan, sls_format format,
                           const char* out_path) {
  if (!plan || !plan->ks || !plan->alphas) return argument_error("plan/ks/alphas is null");
  return guarded([&] {
    slslab::ChainStatsPlan p;
    p.ks.assign(plan->ks, plan->ks + plan->k_count);
    p.alphas.assign(plan->alphas, plan->alphas + plan->alpha_count);
    p.n = plan->n;
    p.p1 = plan->p1;
    p.p2 = plan->p2;
    p.trials = plan->trials;
    p.cutoff = plan->cutoff;
    p.master_seed = plan->master_seed;
    p.threads = plan->threads;
    const slslab::ChainStatsResult result = slslab::run_chain_stats(p);
    emit(format == SLS_FORMAT_CSV ? slslab::chain_stats_csv(p, result)
                                  : slslab::chain_stats_jsonl(p, result),
         out_path);
  });
}

double sls_alpha_sat(int32_t k) {
  switch (k) {
    case 3: case 4: case 5: case 6: return slslab::alpha_sat(k);
    default: return 0.0;
  }
}

}  // extern "C"
