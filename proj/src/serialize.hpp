#pragma once

#include <string>

#include "experiments.hpp"

namespace slslab {

// Shortest round-trip decimal form of a double ("nan" for NaN), so equal
// values always serialize to equal bytes.
std::string format_double(double v);

// One JSON object with the stable field names solved, flips, iterations,
// chain_starts, avg_chain_length, final_energy, seed, elapsed_s.
std::string run_record_json(const RunRecord& rec);

// {outcome, awd, depth_histogram}; awd is null for a core, the histogram
// maps depth to count with an "inf" bucket for never-marked variables.
std::string whiteness_json(const WhitenessResult& result);

// Curve outputs are CSV with a `# plan {...}` provenance comment carrying
// every plan field including the master seed; raw-record outputs are JSON
// lines whose first line is {"plan": {...}}. Record lines deliberately
// carry no wall-clock field, so a repeated run is byte-identical.
std::string cdf_csv(const ExperimentPlan& plan, const CdfResult& result);
std::string cdf_jsonl(const ExperimentPlan& plan, const CdfResult& result);
std::string scan_csv(const ExperimentPlan& plan, ScanParameter param, const ScanResult& result);
std::string scan_jsonl(const ExperimentPlan& plan, ScanParameter param, const ScanResult& result);
std::string xsat_jsonl(const XsatPlan& plan, const XsatResult& result);
std::string xsat_bands_csv(const XsatPlan& plan, const XsatResult& result);
std::string chain_stats_csv(const ChainStatsPlan& plan, const ChainStatsResult& result);
std::string chain_stats_jsonl(const ChainStatsPlan& plan, const ChainStatsResult& result);

}  // namespace slslab
