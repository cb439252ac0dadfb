#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvers.hpp"
#include "whitening.hpp"

namespace slslab {

enum class Algorithm { kRandomWalkSat, kWalkSat, kFms, kChainSat };

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

// Empirical satisfiability thresholds used to normalize plot axes:
// alpha_sat(3) = 4.267, alpha_sat(4) = 9.931, alpha_sat(5) = 21.117,
// alpha_sat(6) = 43.37. Throws for other K.
double alpha_sat(int32_t k);

// One trial ensemble: `trials` independent instances of the (k, n, alpha)
// ensemble, one trajectory each. `cutoff` is in flips per variable
// (iterations per variable for ChainSAT). Trial t derives its streams from
// derive_seed(master_seed, t): child 0 generates the instance, child 1
// drives the run, so results are independent of scheduling.
struct ExperimentPlan {
  Algorithm algorithm = Algorithm::kFms;
  int32_t k = 4;
  int32_t n = 10000;
  double alpha = 9.6;
  double eta = 0.293;
  double noise = 0.5;
  double p1 = 0.0001;
  double p2 = 0.0001;
  int32_t trials = 50;
  double cutoff = 10000;
  uint64_t master_seed = 1;
  int32_t threads = 1;  // 0 = hardware concurrency
};

// Runs one trajectory of the plan's algorithm on the given instance.
RunRecord run_plan_once(const Instance& inst, const ExperimentPlan& plan, uint64_t seed,
                        const Assignment* initial = nullptr);

struct CdfPoint {
  double flips_per_var = 0.0;
  double fraction_solved = 0.0;
};

struct CdfResult {
  std::vector<CdfPoint> points;  // non-decreasing; final point sits at the cutoff
  std::vector<RunRecord> records;
  int32_t solved = 0;
};

// Empirical CDF of solution times in flips per variable; unsolved trials
// are censored mass at the cutoff. Solutions are dropped from the records
// unless keep_solutions is set.
CdfResult run_cdf(const ExperimentPlan& plan, bool keep_solutions = false);

enum class ScanParameter { kEta, kNoise, kP1, kP2 };

const char* scan_parameter_name(ScanParameter p);

struct ScanPoint {
  double value = 0.0;
  double fraction_solved = 0.0;
  // Mean solution time in flips per variable, present only when every
  // trial at this grid point solved.
  std::optional<double> mean_flips_per_var;
};

struct ScanResult {
  std::vector<ScanPoint> points;
  std::vector<std::vector<RunRecord>> records;  // [grid index][trial]
};

// Runs the plan once per grid value with the scanned parameter replaced.
// Grid point g, trial t uses trial index g*trials + t for seed derivation.
ScanResult scan_parameter(const ExperimentPlan& plan, ScanParameter param,
                          const std::vector<double>& grid, bool keep_solutions = false);

// Distance-constrained restarts around one reference solution.
struct XsatPlan {
  int32_t k = 4;
  int32_t n = 20000;
  double alpha = 9.6;
  double eta = 0.293;
  double cutoff = 60000;  // flips per variable, also for the reference search
  std::vector<double> distances;
  int32_t searches_per_distance = 1;
  double window = 0.004;  // percentile-band window on the x_init axis
  uint64_t master_seed = 1;
  int32_t threads = 1;
};

struct XSatRecord {
  double x_init = 0.0;
  double x_final = 0.0;  // NaN when unsolved
  bool solved = false;
  uint64_t flips = 0;
};

struct XsatResult {
  std::vector<XSatRecord> records;
  RunRecord reference;  // the run that produced the reference solution
  int32_t solved = 0;
};

// Generates one instance, finds a reference solution with FMS from a
// uniform start, then for every grid distance x starts FMS from a uniform
// configuration at Hamming distance round(x*N)/N from the reference.
// Throws SearchError if the reference search hits the cutoff.
XsatResult run_xsat(const XsatPlan& plan);

struct BandPoint {
  double x_init = 0.0;
  double p10 = 0.0;
  double p90 = 0.0;
};

// Moving-window 10th/90th percentiles of x_final against x_init over the
// solved records. Percentiles interpolate linearly between order
// statistics. Window is the full width on the x_init axis.
std::vector<BandPoint> percentile_bands(const std::vector<XSatRecord>& records,
                                        double window);

// ChainSAT chain-length and whiteness-depth statistics over an
// (K, alpha) grid.
struct ChainStatsPlan {
  std::vector<int32_t> ks = {4};
  std::vector<double> alphas;
  int32_t n = 10000;
  double p1 = 0.0001;
  double p2 = 0.0001;
  int32_t trials = 21;
  double cutoff = 100000;  // iterations per variable
  uint64_t master_seed = 1;
  int32_t threads = 1;
};

struct ChainTrialRecord {
  int32_t k = 0;
  double alpha = 0.0;
  RunRecord run;
  double awd = 0.0;  // NaN when unsolved or not completely white
  bool white = false;
};

struct ChainStatsRow {
  int32_t k = 0;
  double alpha = 0.0;
  double alpha_ratio = 0.0;        // alpha / alpha_sat(k)
  double mean_chain_length = 0.0;  // over solved trials; NaN when none
  double mean_awd = 0.0;           // over completely white solutions; NaN when none
  int32_t solved = 0;
  int32_t non_white = 0;
  int32_t trials = 0;
};

struct ChainStatsResult {
  std::vector<ChainStatsRow> rows;
  std::vector<ChainTrialRecord> trial_records;
};

ChainStatsResult run_chain_stats(const ChainStatsPlan& plan);

}  // namespace slslab
