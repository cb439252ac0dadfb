#include "serialize.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include <json.hpp>

namespace slslab {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

// NaN has no JSON literal; emit null instead.
Json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

Json record_fields(const RunRecord& rec, bool with_elapsed) {
  Json j;
  j["solved"] = rec.solved;
  j["flips"] = rec.flips;
  j["iterations"] = rec.iterations;
  j["chain_starts"] = rec.chain_starts;
  j["avg_chain_length"] = rec.avg_chain_length;
  j["final_energy"] = rec.final_energy;
  j["seed"] = rec.seed;
  if (with_elapsed) j["elapsed_s"] = rec.elapsed_s;
  return j;
}

Json plan_json(const ExperimentPlan& plan) {
  Json j;
  j["algorithm"] = algorithm_name(plan.algorithm);
  j["k"] = plan.k;
  j["n"] = plan.n;
  j["alpha"] = plan.alpha;
  switch (plan.algorithm) {
    case Algorithm::kRandomWalkSat: break;
    case Algorithm::kWalkSat: j["noise"] = plan.noise; break;
    case Algorithm::kFms: j["eta"] = plan.eta; break;
    case Algorithm::kChainSat:
      j["p1"] = plan.p1;
      j["p2"] = plan.p2;
      break;
  }
  j["trials"] = plan.trials;
  j["cutoff"] = plan.cutoff;
  j["master_seed"] = plan.master_seed;
  return j;
}

Json plan_json(const XsatPlan& plan) {
  Json j;
  j["command"] = "xsat";
  j["k"] = plan.k;
  j["n"] = plan.n;
  j["alpha"] = plan.alpha;
  j["eta"] = plan.eta;
  j["cutoff"] = plan.cutoff;
  j["distances"] = plan.distances;
  j["searches_per_distance"] = plan.searches_per_distance;
  j["window"] = plan.window;
  j["master_seed"] = plan.master_seed;
  return j;
}

Json plan_json(const ChainStatsPlan& plan) {
  Json j;
  j["command"] = "chainstats";
  j["k"] = plan.ks;
  j["alphas"] = plan.alphas;
  j["n"] = plan.n;
  j["p1"] = plan.p1;
  j["p2"] = plan.p2;
  j["trials"] = plan.trials;
  j["cutoff"] = plan.cutoff;
  j["master_seed"] = plan.master_seed;
  return j;
}

template <class Plan>
std::string plan_comment(const Plan& plan) {
  return "# plan " + plan_json(plan).dump() + "\n";
}

template <class Plan>
std::string plan_line(const Plan& plan) {
  Json j;
  j["plan"] = plan_json(plan);
  return j.dump() + "\n";
}

}  // namespace

std::string run_record_json(const RunRecord& rec) {
  return record_fields(rec, true).dump() + "\n";
}

std::string whiteness_json(const WhitenessResult& result) {
  Json j;
  const bool white = result.outcome == WhitenessOutcome::kCompletelyWhite;
  j["outcome"] = white ? "completely_white" : "core";
  j["awd"] = json_number(result.awd);
  std::map<int32_t, int64_t> histogram;
  int64_t infinite = 0;
  for (size_t v = 1; v < result.depth.size(); ++v) {
    if (result.depth[v] < 0)
      ++infinite;
    else
      ++histogram[result.depth[v]];
  }
  Json h;
  for (const auto& [depth, count] : histogram) h[std::to_string(depth)] = count;
  if (infinite > 0) h["inf"] = infinite;
  j["depth_histogram"] = std::move(h);
  return j.dump() + "\n";
}

std::string cdf_csv(const ExperimentPlan& plan, const CdfResult& result) {
  std::string out = plan_comment(plan);
  out += "flips_per_var,fraction_solved\n";
  for (const CdfPoint& p : result.points)
    out += format_double(p.flips_per_var) + "," + format_double(p.fraction_solved) + "\n";
  return out;
}

std::string cdf_jsonl(const ExperimentPlan& plan, const CdfResult& result) {
  std::string out = plan_line(plan);
  for (size_t t = 0; t < result.records.size(); ++t) {
    Json j;
    j["trial"] = t;
    j.update(record_fields(result.records[t], false));
    out += j.dump() + "\n";
  }
  return out;
}

std::string scan_csv(const ExperimentPlan& plan, ScanParameter param,
                     const ScanResult& result) {
  std::string out = plan_comment(plan);
  out += std::string(scan_parameter_name(param)) + ",fraction_solved,mean_flips_per_var\n";
  for (const ScanPoint& p : result.points) {
    out += format_double(p.value) + "," + format_double(p.fraction_solved) + ",";
    if (p.mean_flips_per_var) out += format_double(*p.mean_flips_per_var);
    out += "\n";
  }
  return out;
}

std::string scan_jsonl(const ExperimentPlan& plan, ScanParameter param,
                       const ScanResult& result) {
  std::string out = plan_line(plan);
  for (size_t g = 0; g < result.records.size(); ++g) {
    for (size_t t = 0; t < result.records[g].size(); ++t) {
      Json j;
      j[scan_parameter_name(param)] = result.points[g].value;
      j["trial"] = t;
      j.update(record_fields(result.records[g][t], false));
      out += j.dump() + "\n";
    }
  }
  return out;
}

std::string xsat_jsonl(const XsatPlan& plan, const XsatResult& result) {
  std::string out = plan_line(plan);
  for (const XSatRecord& rec : result.records) {
    Json j;
    j["x_init"] = rec.x_init;
    j["x_final"] = json_number(rec.x_final);
    j["solved"] = rec.solved;
    j["flips"] = rec.flips;
    out += j.dump() + "\n";
  }
  return out;
}

std::string xsat_bands_csv(const XsatPlan& plan, const XsatResult& result) {
  std::string out = plan_comment(plan);
  out += "x_init,p10_x_final,p90_x_final\n";
  for (const BandPoint& band : percentile_bands(result.records, plan.window))
    out += format_double(band.x_init) + "," + format_double(band.p10) + "," +
           format_double(band.p90) + "\n";
  return out;
}

std::string chain_stats_csv(const ChainStatsPlan& plan, const ChainStatsResult& result) {
  std::string out = plan_comment(plan);
  out += "k,alpha,alpha_over_alpha_sat,mean_chain_length,mean_awd,solved,non_white,trials\n";
  for (const ChainStatsRow& row : result.rows) {
    out += std::to_string(row.k) + "," + format_double(row.alpha) + "," +
           format_double(row.alpha_ratio) + "," + format_double(row.mean_chain_length) +
           "," + format_double(row.mean_awd) + "," + std::to_string(row.solved) + "," +
           std::to_string(row.non_white) + "," + std::to_string(row.trials) + "\n";
  }
  return out;
}

std::string chain_stats_jsonl(const ChainStatsPlan& plan, const ChainStatsResult& result) {
  std::string out = plan_line(plan);
  for (size_t i = 0; i < result.trial_records.size(); ++i) {
    const ChainTrialRecord& rec = result.trial_records[i];
    Json j;
    j["k"] = rec.k;
    j["alpha"] = rec.alpha;
    j["trial"] = i % static_cast<size_t>(plan.trials);
    j.update(record_fields(rec.run, false));
    j["awd"] = json_number(rec.awd);
    j["white"] = rec.run.solved ? Json(rec.white) : Json(nullptr);
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace slslab
