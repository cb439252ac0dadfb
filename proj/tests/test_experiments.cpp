#include <doctest.h>

#include <cmath>

#include "experiments.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "serialize.hpp"

using namespace slslab;

namespace {

ExperimentPlan tiny_plan() {
  ExperimentPlan plan;
  plan.algorithm = Algorithm::kRandomWalkSat;
  plan.k = 3;
  plan.n = 50;
  plan.alpha = 1.5;
  plan.trials = 8;
  plan.cutoff = 500;
  plan.master_seed = 42;
  plan.threads = 1;
  return plan;
}

}  // namespace

TEST_CASE("CDF of an empty formula jumps to 1 at zero flips") {
  ExperimentPlan plan = tiny_plan();
  plan.alpha = 0.0;
  plan.trials = 1;
  const CdfResult result = run_cdf(plan);
  REQUIRE(result.points.size() == 2);
  CHECK(result.points[0].flips_per_var == 0.0);
  CHECK(result.points[0].fraction_solved == 1.0);
  CHECK(result.points[1].flips_per_var == plan.cutoff);
  CHECK(result.points[1].fraction_solved == 1.0);
}

TEST_CASE("CDF of an unsatisfiable ensemble is identically zero below the cutoff") {
  ExperimentPlan plan = tiny_plan();
  plan.k = 2;
  plan.alpha = 5.0;  // far above the 2-SAT threshold
  plan.cutoff = 20;
  const CdfResult result = run_cdf(plan);
  REQUIRE(result.points.size() == 1);
  CHECK(result.points[0].flips_per_var == plan.cutoff);
  CHECK(result.points[0].fraction_solved == 0.0);
  CHECK(result.solved == 0);
}

TEST_CASE("CDF censoring is exact and the curve is non-decreasing") {
  ExperimentPlan plan = tiny_plan();
  plan.alpha = 3.5;
  plan.cutoff = 30;
  plan.trials = 40;
  const CdfResult result = run_cdf(plan);
  int32_t solved = 0;
  for (const RunRecord& rec : result.records) solved += rec.solved ? 1 : 0;
  CHECK(result.solved == solved);
  CHECK(result.points.back().fraction_solved ==
        static_cast<double>(solved) / plan.trials);
  for (size_t i = 1; i < result.points.size(); ++i) {
    CHECK(result.points[i].flips_per_var >= result.points[i - 1].flips_per_var);
    CHECK(result.points[i].fraction_solved >= result.points[i - 1].fraction_solved);
  }
}

TEST_CASE("solutions are verified and dropped unless requested") {
  ExperimentPlan plan = tiny_plan();
  const CdfResult bare = run_cdf(plan);
  for (const RunRecord& rec : bare.records) CHECK(!rec.solution.has_value());
  const CdfResult kept = run_cdf(plan, true);
  for (size_t t = 0; t < kept.records.size(); ++t) {
    if (!kept.records[t].solved) continue;
    REQUIRE(kept.records[t].solution.has_value());
    const uint64_t base = derive_seed(plan.master_seed, t);
    const Instance inst =
        Instance::generate(plan.k, plan.n, plan.alpha, derive_seed(base, 0));
    CHECK(oracle::recount_energy(inst, *kept.records[t].solution) == 0);
  }
}

TEST_CASE("experiment results are independent of the thread count") {
  ExperimentPlan plan = tiny_plan();
  plan.trials = 12;
  ExperimentPlan threaded = plan;
  threaded.threads = 4;
  CHECK(cdf_csv(plan, run_cdf(plan)) == cdf_csv(threaded, run_cdf(threaded)));

  const std::vector<double> grid = {0.2, 0.8};
  CHECK(scan_csv(plan, ScanParameter::kNoise, scan_parameter(plan, ScanParameter::kNoise, grid)) ==
        scan_csv(threaded, ScanParameter::kNoise,
                 scan_parameter(threaded, ScanParameter::kNoise, grid)));
}

TEST_CASE("scan reports full-success mean times only") {
  ExperimentPlan plan = tiny_plan();
  plan.algorithm = Algorithm::kFms;
  plan.alpha = 0.5;  // trivially satisfiable: every grid point fully solved
  const ScanResult easy = scan_parameter(plan, ScanParameter::kEta, {0.3});
  REQUIRE(easy.points.size() == 1);
  CHECK(easy.points[0].fraction_solved == 1.0);
  CHECK(easy.points[0].mean_flips_per_var.has_value());

  plan.k = 2;
  plan.alpha = 5.0;
  plan.cutoff = 20;
  const ScanResult hard = scan_parameter(plan, ScanParameter::kEta, {0.3, 0.5});
  for (const ScanPoint& p : hard.points) {
    CHECK(p.fraction_solved == 0.0);
    CHECK(!p.mean_flips_per_var.has_value());
  }
  CHECK_THROWS_AS(scan_parameter(plan, ScanParameter::kEta, {}), std::invalid_argument);
}

TEST_CASE("xsat from distance zero returns the reference immediately") {
  XsatPlan plan;
  plan.k = 3;
  plan.n = 150;
  plan.alpha = 2.5;
  plan.eta = 0.4;
  plan.cutoff = 2000;
  plan.distances = {0.0};
  plan.searches_per_distance = 3;
  plan.master_seed = 5;
  const XsatResult result = run_xsat(plan);
  REQUIRE(result.records.size() == 3);
  for (const XSatRecord& rec : result.records) {
    CHECK(rec.solved);
    CHECK(rec.x_init == 0.0);
    CHECK(rec.x_final == 0.0);
    CHECK(rec.flips == 0);
  }
}

TEST_CASE("xsat surfaces a failed reference search") {
  XsatPlan plan;
  plan.k = 2;
  plan.n = 100;
  plan.alpha = 5.0;  // unsatisfiable, the reference search must hit the cutoff
  plan.eta = 0.3;
  plan.cutoff = 10;
  plan.distances = {0.1};
  plan.master_seed = 6;
  CHECK_THROWS_AS(run_xsat(plan), SearchError);
}

TEST_CASE("percentile bands on degenerate inputs") {
  std::vector<XSatRecord> records;
  for (int i = 0; i < 10; ++i)
    records.push_back({0.001 * i, 0.25, true, 1});
  const auto bands = percentile_bands(records, 0.004);
  for (const BandPoint& band : bands) {
    CHECK(band.p10 == 0.25);
    CHECK(band.p90 == 0.25);
  }

  const std::vector<XSatRecord> single = {{0.5, 0.33, true, 1}};
  const auto one = percentile_bands(single, 0.004);
  REQUIRE(one.size() == 1);
  CHECK(one[0].p10 == 0.33);
  CHECK(one[0].p90 == 0.33);

  CHECK_THROWS_AS(percentile_bands({}, 0.004), std::invalid_argument);
  CHECK_THROWS_AS(percentile_bands(single, 0.0), std::invalid_argument);
}

TEST_CASE("percentile bands match a sort-based oracle") {
  Rng rng(77);
  std::vector<XSatRecord> records;
  for (int i = 0; i < 400; ++i)
    records.push_back({rng.next_double() * 0.1, rng.next_double(), true, 1});
  const double window = 0.01;
  const auto bands = percentile_bands(records, window);
  REQUIRE(!bands.empty());
  for (const BandPoint& band : bands) {
    std::vector<double> in_window;
    for (const XSatRecord& rec : records)
      if (std::abs(rec.x_init - band.x_init) <= window / 2.0)
        in_window.push_back(rec.x_final);
    CHECK(band.p10 == doctest::Approx(oracle::percentile_by_sort(in_window, 0.10)));
    CHECK(band.p90 == doctest::Approx(oracle::percentile_by_sort(in_window, 0.90)));
  }
}

TEST_CASE("chain statistics at p2=1 report zero chain length") {
  // With p2=1 chains never start, so the walker can strand in a local
  // minimum; solved trials still must show zero chain length.
  ChainStatsPlan plan;
  plan.ks = {3};
  plan.alphas = {0.8, 1.2};
  plan.n = 80;
  plan.p1 = 0.9;
  plan.p2 = 1.0;
  plan.trials = 4;
  plan.cutoff = 20000;
  plan.master_seed = 8;
  const ChainStatsResult result = run_chain_stats(plan);
  REQUIRE(result.rows.size() == 2);
  for (const ChainStatsRow& row : result.rows) {
    CHECK(row.solved >= 1);
    CHECK(row.mean_chain_length == 0.0);
    CHECK(row.non_white == 0);
    CHECK(std::isfinite(row.mean_awd));
    CHECK(row.alpha_ratio == doctest::Approx(row.alpha / 4.267));
  }
  for (const ChainTrialRecord& rec : result.trial_records)
    CHECK(rec.run.chain_starts == rec.run.iterations);
}

TEST_CASE("alpha_sat covers K 3..6 only") {
  CHECK(alpha_sat(3) == 4.267);
  CHECK(alpha_sat(4) == 9.931);
  CHECK(alpha_sat(5) == 21.117);
  CHECK(alpha_sat(6) == 43.37);
  CHECK_THROWS_AS(alpha_sat(7), std::invalid_argument);
  ChainStatsPlan plan;
  plan.ks = {7};
  plan.alphas = {50.0};
  CHECK_THROWS_AS(run_chain_stats(plan), std::invalid_argument);
}

TEST_CASE("serialized outputs carry the plan and stable field names") {
  ExperimentPlan plan = tiny_plan();
  plan.trials = 3;
  const CdfResult result = run_cdf(plan);
  const std::string csv = cdf_csv(plan, result);
  CHECK(csv.rfind("# plan {", 0) == 0);
  CHECK(csv.find("\"master_seed\":42") != std::string::npos);
  CHECK(csv.find("flips_per_var,fraction_solved\n") != std::string::npos);

  const std::string jsonl = cdf_jsonl(plan, result);
  CHECK(jsonl.rfind("{\"plan\":", 0) == 0);
  CHECK(jsonl.find("\"solved\":") != std::string::npos);
  CHECK(jsonl.find("\"flips\":") != std::string::npos);
  CHECK(jsonl.find("elapsed") == std::string::npos);  // record lines carry no wall-clock
}

TEST_CASE("repeated runs serialize byte-identically") {
  ExperimentPlan plan = tiny_plan();
  plan.algorithm = Algorithm::kChainSat;
  plan.p1 = 0.3;
  plan.p2 = 0.2;
  plan.cutoff = 2000;
  CHECK(cdf_jsonl(plan, run_cdf(plan)) == cdf_jsonl(plan, run_cdf(plan)));

  XsatPlan xplan;
  xplan.k = 3;
  xplan.n = 120;
  xplan.alpha = 2.0;
  xplan.eta = 0.4;
  xplan.cutoff = 1000;
  xplan.distances = {0.0, 0.1, 0.2, 0.3};
  xplan.searches_per_distance = 2;
  xplan.master_seed = 12;
  const std::string a = xsat_jsonl(xplan, run_xsat(xplan));
  XsatPlan threaded = xplan;
  threaded.threads = 3;
  const std::string b = xsat_jsonl(threaded, run_xsat(threaded));
  CHECK(a == b);
}

TEST_CASE("run_record_json uses the stable field order") {
  RunRecord rec;
  rec.solved = true;
  rec.flips = 10;
  rec.iterations = 12;
  rec.seed = 3;
  rec.elapsed_s = 0.5;
  const std::string json = run_record_json(rec);
  CHECK(json.find("\"solved\":true,\"flips\":10,\"iterations\":12,\"chain_starts\":0") !=
        std::string::npos);
  CHECK(json.find("\"elapsed_s\":") != std::string::npos);
}
