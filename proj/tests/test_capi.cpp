#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "slslab.h"

#include "dimacs.hpp"
#include "instance.hpp"

namespace {

std::string slurp(const char* path) { return slslab::read_text_file(path); }

std::string tmp_path(const char* name) {
  return std::string("capi_") + name;  // test working directory
}

}  // namespace

TEST_CASE("instance lifecycle through the C surface") {
  sls_instance* inst = nullptr;
  REQUIRE(sls_instance_generate(3, 50, 2.0, 9, &inst) == SLS_OK);
  REQUIRE(inst != nullptr);
  CHECK(sls_instance_width(inst) == 3);
  CHECK(sls_instance_variables(inst) == 50);
  CHECK(sls_instance_clauses(inst) == 100);

  char* text = nullptr;
  size_t length = 0;
  REQUIRE(sls_instance_format(inst, &text, &length) == SLS_OK);
  CHECK(std::string(text, length) ==
        slslab::write_dimacs(slslab::Instance::generate(3, 50, 2.0, 9)));

  sls_instance* reparsed = nullptr;
  REQUIRE(sls_instance_parse(text, length, &reparsed) == SLS_OK);
  CHECK(sls_instance_clauses(reparsed) == 100);
  sls_string_free(text);
  sls_instance_free(reparsed);
  sls_instance_free(inst);
}

TEST_CASE("status codes and error messages") {
  sls_instance* inst = nullptr;
  CHECK(sls_instance_generate(1, 50, 2.0, 9, &inst) == SLS_ERR_ARGUMENT);
  CHECK(std::strlen(sls_error_message()) > 0);
  CHECK(sls_instance_parse("p cnf 2 1\n1 1 0\n", 0, &inst) == SLS_ERR_PARSE);
  CHECK(sls_instance_load("/nonexistent/file.cnf", &inst) == SLS_ERR_IO);
  CHECK(sls_instance_generate(3, 50, 2.0, 9, nullptr) == SLS_ERR_ARGUMENT);

  REQUIRE(sls_instance_generate(3, 50, 2.0, 9, &inst) == SLS_OK);
  CHECK(std::strlen(sls_error_message()) == 0);  // success clears the detail
  sls_instance_free(inst);
}

TEST_CASE("solve verifies its solution against the instance") {
  sls_instance* inst = nullptr;
  REQUIRE(sls_instance_generate(3, 100, 2.0, 4, &inst) == SLS_OK);
  sls_params params{};
  params.algorithm = SLS_ALGO_FMS;
  params.eta = 0.35;
  params.cutoff = 2000;
  sls_run_record record;
  std::vector<uint8_t> solution(100, 0);
  REQUIRE(sls_solve(inst, &params, 11, nullptr, &record, solution.data()) == SLS_OK);
  REQUIRE(record.solved == 1);
  int32_t ok = 0;
  REQUIRE(sls_assignment_check(inst, solution.data(), &ok) == SLS_OK);
  CHECK(ok == 1);
  CHECK(record.final_energy == 0);
  CHECK(record.seed == 11);

  char* json = nullptr;
  REQUIRE(sls_run_record_json(&record, &json, nullptr) == SLS_OK);
  CHECK(std::string(json).find("\"solved\":true") != std::string::npos);
  sls_string_free(json);
  sls_instance_free(inst);
}

TEST_CASE("explicit initial assignments are honored") {
  sls_instance* inst = nullptr;
  REQUIRE(sls_instance_parse("p cnf 3 1\n1 2 3 0\n", 0, &inst) == SLS_OK);
  const std::vector<uint8_t> initial = {0, 0, 0};
  sls_params params{};
  params.algorithm = SLS_ALGO_RWSAT;
  params.cutoff = 10;
  sls_run_record record;
  REQUIRE(sls_solve(inst, &params, 1, initial.data(), &record, nullptr) == SLS_OK);
  CHECK(record.solved == 1);
  CHECK(record.flips == 1);
  sls_instance_free(inst);
}

TEST_CASE("whitening through the C surface") {
  sls_instance* inst = nullptr;
  REQUIRE(sls_instance_parse("p cnf 3 1\n1 2 3 0\n", 0, &inst) == SLS_OK);
  const std::vector<uint8_t> values = {1, 0, 0};
  int32_t outcome = -1;
  double awd = 0.0;
  std::vector<int32_t> depths(3, -2);
  REQUIRE(sls_whiten(inst, values.data(), &outcome, &awd, depths.data()) == SLS_OK);
  CHECK(outcome == SLS_COMPLETELY_WHITE);
  CHECK(awd == doctest::Approx(1.0 / 3.0));
  CHECK(depths[0] == 1);
  CHECK(depths[1] == 0);
  CHECK(depths[2] == 0);

  char* json = nullptr;
  REQUIRE(sls_whiten_json(inst, values.data(), &json, nullptr) == SLS_OK);
  const std::string text = json;
  CHECK(text.find("\"outcome\":\"completely_white\"") != std::string::npos);
  CHECK(text.find("\"depth_histogram\":{\"0\":2,\"1\":1}") != std::string::npos);
  sls_string_free(json);
  sls_instance_free(inst);
}

TEST_CASE("assignment files round trip") {
  const std::string path = tmp_path("assignment.txt");
  const std::vector<uint8_t> values = {1, 0, 1, 1};
  REQUIRE(sls_assignment_save(path.c_str(), values.data(), 4) == SLS_OK);
  CHECK(slurp(path.c_str()) == "v 1 -2 3 4 0\n");
  std::vector<uint8_t> back(4, 9);
  REQUIRE(sls_assignment_load(path.c_str(), 4, back.data()) == SLS_OK);
  CHECK(back == values);
}

TEST_CASE("harness runners write deterministic files") {
  sls_plan plan{};
  plan.algorithm = SLS_ALGO_RWSAT;
  plan.k = 3;
  plan.n = 60;
  plan.alpha = 1.5;
  plan.trials = 6;
  plan.cutoff = 300;
  plan.master_seed = 21;
  plan.threads = 1;

  const std::string a = tmp_path("cdf_a.csv");
  const std::string b = tmp_path("cdf_b.csv");
  REQUIRE(sls_cdf(&plan, SLS_FORMAT_CSV, a.c_str()) == SLS_OK);
  plan.threads = 3;
  REQUIRE(sls_cdf(&plan, SLS_FORMAT_CSV, b.c_str()) == SLS_OK);
  CHECK(slurp(a.c_str()) == slurp(b.c_str()));

  const double grid[2] = {0.2, 0.9};
  const std::string s = tmp_path("scan.csv");
  REQUIRE(sls_scan(&plan, SLS_SCAN_NOISE, grid, 2, SLS_FORMAT_CSV, s.c_str()) == SLS_OK);
  CHECK(slurp(s.c_str()).rfind("# plan {", 0) == 0);

  const double distances[3] = {0.0, 0.1, 0.2};
  sls_xsat_plan xplan{};
  xplan.k = 3;
  xplan.n = 100;
  xplan.alpha = 2.0;
  xplan.eta = 0.4;
  xplan.cutoff = 2000;
  xplan.distances = distances;
  xplan.distance_count = 3;
  xplan.searches_per_distance = 2;
  xplan.window = 0.004;
  xplan.master_seed = 31;
  const std::string x = tmp_path("xsat.jsonl");
  REQUIRE(sls_xsat(&xplan, SLS_FORMAT_JSON, x.c_str()) == SLS_OK);
  CHECK(slurp(x.c_str()).rfind("{\"plan\":", 0) == 0);

  const int32_t ks[1] = {3};
  const double alphas[1] = {1.5};
  sls_chain_stats_plan cplan{};
  cplan.ks = ks;
  cplan.k_count = 1;
  cplan.alphas = alphas;
  cplan.alpha_count = 1;
  cplan.n = 60;
  cplan.p1 = 0.5;
  cplan.p2 = 0.5;
  cplan.trials = 3;
  cplan.cutoff = 4000;
  cplan.master_seed = 41;
  const std::string c = tmp_path("chain.csv");
  REQUIRE(sls_chain_stats(&cplan, SLS_FORMAT_CSV, c.c_str()) == SLS_OK);
  CHECK(slurp(c.c_str()).find("mean_chain_length") != std::string::npos);
}

TEST_CASE("reference thresholds through the C surface") {
  CHECK(sls_alpha_sat(4) == 9.931);
  CHECK(sls_alpha_sat(7) == 0.0);
  CHECK(sls_derive_seed(5, 9) == sls_derive_seed(5, 9));
  CHECK(sls_derive_seed(5, 9) != sls_derive_seed(5, 10));
}
