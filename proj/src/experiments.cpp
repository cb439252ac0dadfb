#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "errors.hpp"

namespace slslab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs body(0..count-1) on up to `threads` workers. Work items must write
// only to their own slot of a preallocated result vector; aggregation
// afterwards is then independent of the schedule.
void parallel_for(int64_t count, int32_t threads, const std::function<void(int64_t)>& body) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int32_t>(hw) : 1;
  }
  threads = static_cast<int32_t>(std::min<int64_t>(threads, count));
  if (threads <= 1) {
    for (int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int32_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void validate(const ExperimentPlan& plan) {
  if (plan.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(plan.cutoff > 0)) throw std::invalid_argument("cutoff must be positive");
}

double percentile(std::vector<double>& values, double q) {
  const size_t n = values.size();
  const double pos = q * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(pos);
  auto nth = values.begin() + static_cast<ptrdiff_t>(lo);
  std::nth_element(values.begin(), nth, values.end());
  const double v_lo = *nth;
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || lo + 1 == n) return v_lo;
  const double v_hi = *std::min_element(nth + 1, values.end());
  return v_lo + frac * (v_hi - v_lo);
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kRandomWalkSat: return "rwsat";
    case Algorithm::kWalkSat: return "walksat";
    case Algorithm::kFms: return "fms";
    case Algorithm::kChainSat: return "chainsat";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "rwsat") return Algorithm::kRandomWalkSat;
  if (name == "walksat") return Algorithm::kWalkSat;
  if (name == "fms") return Algorithm::kFms;
  if (name == "chainsat") return Algorithm::kChainSat;
  return std::nullopt;
}

const char* scan_parameter_name(ScanParameter p) {
  switch (p) {
    case ScanParameter::kEta: return "eta";
    case ScanParameter::kNoise: return "noise";
    case ScanParameter::kP1: return "p1";
    case ScanParameter::kP2: return "p2";
  }
  return "?";
}

double alpha_sat(int32_t k) {
  switch (k) {
    case 3: return 4.267;
    case 4: return 9.931;
    case 5: return 21.117;
    case 6: return 43.37;
    default:
      throw std::invalid_argument("no alpha_sat reference value for K = " + std::to_string(k));
  }
}

RunRecord run_plan_once(const Instance& inst, const ExperimentPlan& plan, uint64_t seed,
                        const Assignment* initial) {
  switch (plan.algorithm) {
    case Algorithm::kRandomWalkSat:
      return run_randomwalksat(inst, plan.cutoff, seed, initial);
    case Algorithm::kWalkSat:
      return run_walksat(inst, plan.noise, plan.cutoff, seed, initial);
    case Algorithm::kFms:
      return run_fms(inst, {plan.eta, plan.cutoff}, seed, initial);
    case Algorithm::kChainSat:
      return run_chainsat(inst, {plan.p1, plan.p2, plan.cutoff}, seed, initial);
  }
  throw std::invalid_argument("unknown algorithm");
}

CdfResult run_cdf(const ExperimentPlan& plan, bool keep_solutions) {
  validate(plan);
  CdfResult result;
  result.records.resize(static_cast<size_t>(plan.trials));
  parallel_for(plan.trials, plan.threads, [&](int64_t t) {
    const uint64_t base = derive_seed(plan.master_seed, static_cast<uint64_t>(t));
    const Instance inst =
        Instance::generate(plan.k, plan.n, plan.alpha, derive_seed(base, 0));
    RunRecord rec = run_plan_once(inst, plan, derive_seed(base, 1));
    if (!keep_solutions) rec.solution.reset();
    result.records[static_cast<size_t>(t)] = std::move(rec);
  });

  std::vector<double> times;
  for (const RunRecord& rec : result.records) {
    if (rec.solved) {
      ++result.solved;
      times.push_back(static_cast<double>(rec.flips) / plan.n);
    }
  }
  std::sort(times.begin(), times.end());
  result.points.reserve(times.size() + 1);
  for (size_t i = 0; i < times.size(); ++i)
    result.points.push_back({times[i], static_cast<double>(i + 1) / plan.trials});
  result.points.push_back({plan.cutoff, static_cast<double>(result.solved) / plan.trials});
  return result;
}

ScanResult scan_parameter(const ExperimentPlan& plan, ScanParameter param,
                          const std::vector<double>& grid, bool keep_solutions) {
  validate(plan);
  if (grid.empty()) throw std::invalid_argument("parameter grid is empty");
  ScanResult result;
  result.records.assign(grid.size(), {});
  for (auto& r : result.records) r.resize(static_cast<size_t>(plan.trials));

  const int64_t total = static_cast<int64_t>(grid.size()) * plan.trials;
  parallel_for(total, plan.threads, [&](int64_t i) {
    const size_t g = static_cast<size_t>(i) / plan.trials;
    ExperimentPlan point = plan;
    switch (param) {
      case ScanParameter::kEta: point.eta = grid[g]; break;
      case ScanParameter::kNoise: point.noise = grid[g]; break;
      case ScanParameter::kP1: point.p1 = grid[g]; break;
      case ScanParameter::kP2: point.p2 = grid[g]; break;
    }
    const uint64_t base = derive_seed(plan.master_seed, static_cast<uint64_t>(i));
    const Instance inst =
        Instance::generate(point.k, point.n, point.alpha, derive_seed(base, 0));
    RunRecord rec = run_plan_once(inst, point, derive_seed(base, 1));
    if (!keep_solutions) rec.solution.reset();
    result.records[g][static_cast<size_t>(i) % plan.trials] = std::move(rec);
  });

  result.points.reserve(grid.size());
  for (size_t g = 0; g < grid.size(); ++g) {
    ScanPoint point;
    point.value = grid[g];
    int32_t solved = 0;
    double sum = 0.0;
    for (const RunRecord& rec : result.records[g]) {
      if (rec.solved) {
        ++solved;
        sum += static_cast<double>(rec.flips) / plan.n;
      }
    }
    point.fraction_solved = static_cast<double>(solved) / plan.trials;
    if (solved == plan.trials) point.mean_flips_per_var = sum / plan.trials;
    result.points.push_back(point);
  }
  return result;
}

XsatResult run_xsat(const XsatPlan& plan) {
  if (plan.distances.empty()) throw std::invalid_argument("distance grid is empty");
  for (double x : plan.distances)
    if (!(x >= 0.0 && x <= 1.0))
      throw std::invalid_argument("distances must lie in [0, 1]");
  if (plan.searches_per_distance < 1)
    throw std::invalid_argument("searches per distance must be at least 1");
  if (!(plan.cutoff > 0)) throw std::invalid_argument("cutoff must be positive");

  const uint64_t base = derive_seed(plan.master_seed, 0);
  const Instance inst = Instance::generate(plan.k, plan.n, plan.alpha, derive_seed(base, 0));
  const FmsParams fms{plan.eta, plan.cutoff};

  XsatResult result;
  result.reference = run_fms(inst, fms, derive_seed(base, 1));
  if (!result.reference.solved)
    throw SearchError("reference solution search ended at the cutoff (energy " +
                      std::to_string(result.reference.final_energy) + ")");
  const Assignment& reference = *result.reference.solution;

  const int64_t searches =
      static_cast<int64_t>(plan.distances.size()) * plan.searches_per_distance;
  result.records.resize(static_cast<size_t>(searches));
  parallel_for(searches, plan.threads, [&](int64_t j) {
    const double x = plan.distances[static_cast<size_t>(j) / plan.searches_per_distance];
    const uint64_t sbase = derive_seed(plan.master_seed, static_cast<uint64_t>(1 + j));
    const Assignment initial = sample_at_distance(reference, x, derive_seed(sbase, 0));
    const RunRecord rec = run_fms(inst, fms, derive_seed(sbase, 1), &initial);
    XSatRecord& out = result.records[static_cast<size_t>(j)];
    out.x_init = hamming_distance(initial, reference);
    out.solved = rec.solved;
    out.flips = rec.flips;
    out.x_final = rec.solved ? hamming_distance(*rec.solution, reference) : kNaN;
  });
  for (const XSatRecord& rec : result.records) result.solved += rec.solved ? 1 : 0;
  return result;
}

std::vector<BandPoint> percentile_bands(const std::vector<XSatRecord>& records,
                                        double window) {
  if (!(window > 0)) throw std::invalid_argument("window must be positive");
  std::vector<const XSatRecord*> solved;
  for (const XSatRecord& r : records)
    if (r.solved) solved.push_back(&r);
  if (solved.empty()) throw std::invalid_argument("no solved records to aggregate");
  std::sort(solved.begin(), solved.end(),
            [](const XSatRecord* a, const XSatRecord* b) { return a->x_init < b->x_init; });

  std::vector<BandPoint> bands;
  std::vector<double> values;
  const double half = window / 2.0;
  size_t lo = 0, hi = 0;
  for (size_t i = 0; i < solved.size(); ++i) {
    const double x = solved[i]->x_init;
    if (i > 0 && x == solved[i - 1]->x_init) continue;  // one band point per distinct x
    while (lo < solved.size() && solved[lo]->x_init < x - half) ++lo;
    if (hi < lo) hi = lo;
    while (hi < solved.size() && solved[hi]->x_init <= x + half) ++hi;
    values.clear();
    for (size_t j = lo; j < hi; ++j) values.push_back(solved[j]->x_final);
    BandPoint band;
    band.x_init = x;
    band.p10 = percentile(values, 0.10);
    band.p90 = percentile(values, 0.90);
    bands.push_back(band);
  }
  return bands;
}

ChainStatsResult run_chain_stats(const ChainStatsPlan& plan) {
  if (plan.ks.empty() || plan.alphas.empty())
    throw std::invalid_argument("chain statistics need at least one (K, alpha) cell");
  if (plan.trials < 1) throw std::invalid_argument("trials must be at least 1");
  for (int32_t k : plan.ks) alpha_sat(k);  // reject K without a reference threshold

  ChainStatsResult result;
  const size_t cells = plan.ks.size() * plan.alphas.size();
  result.trial_records.resize(cells * static_cast<size_t>(plan.trials));

  const int64_t total = static_cast<int64_t>(cells) * plan.trials;
  parallel_for(total, plan.threads, [&](int64_t i) {
    const size_t cell = static_cast<size_t>(i) / plan.trials;
    const int32_t k = plan.ks[cell / plan.alphas.size()];
    const double alpha = plan.alphas[cell % plan.alphas.size()];
    const uint64_t base = derive_seed(plan.master_seed, static_cast<uint64_t>(i));
    const Instance inst = Instance::generate(k, plan.n, alpha, derive_seed(base, 0));
    RunRecord run = run_chainsat(inst, {plan.p1, plan.p2, plan.cutoff}, derive_seed(base, 1));

    ChainTrialRecord& rec = result.trial_records[static_cast<size_t>(i)];
    rec.k = k;
    rec.alpha = alpha;
    rec.awd = kNaN;
    if (run.solved) {
      const WhitenessResult w = whiten(inst, *run.solution);
      rec.white = w.outcome == WhitenessOutcome::kCompletelyWhite;
      if (rec.white) rec.awd = w.awd;
    }
    run.solution.reset();
    rec.run = std::move(run);
  });

  result.rows.reserve(cells);
  for (size_t cell = 0; cell < cells; ++cell) {
    ChainStatsRow row;
    row.k = plan.ks[cell / plan.alphas.size()];
    row.alpha = plan.alphas[cell % plan.alphas.size()];
    row.alpha_ratio = row.alpha / alpha_sat(row.k);
    row.trials = plan.trials;
    double chain_sum = 0.0, awd_sum = 0.0;
    int32_t white = 0;
    for (int32_t t = 0; t < plan.trials; ++t) {
      const ChainTrialRecord& rec =
          result.trial_records[cell * static_cast<size_t>(plan.trials) + t];
      if (!rec.run.solved) continue;
      ++row.solved;
      chain_sum += rec.run.avg_chain_length;
      if (rec.white) {
        ++white;
        awd_sum += rec.awd;
      } else {
        ++row.non_white;
      }
    }
    row.mean_chain_length = row.solved > 0 ? chain_sum / row.solved : kNaN;
    row.mean_awd = white > 0 ? awd_sum / white : kNaN;
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace slslab
