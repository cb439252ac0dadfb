#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "dynamics.hpp"
#include "oracles.hpp"

using namespace slslab;

namespace {

Assignment all_set(int32_t n, uint8_t value) {
  Assignment a(static_cast<size_t>(n) + 1, value);
  a[0] = 0;
  return a;
}

std::set<ClauseId> unsat_of(const SolverState& state) {
  const auto span = state.unsat_clauses();
  return {span.begin(), span.end()};
}

}  // namespace

TEST_CASE("initial bookkeeping matches direct counts on a single clause") {
  const Instance inst = Instance::from_clauses(3, 3, {1, 2, 3});
  SolverState all_true(inst, all_set(3, 1), 1);
  CHECK(all_true.energy() == 0);
  CHECK(all_true.true_count(0) == 3);
  CHECK(all_true.solved());

  SolverState all_false(inst, all_set(3, 0), 1);
  CHECK(all_false.energy() == 1);
  CHECK(unsat_of(all_false) == std::set<ClauseId>{0});
}

TEST_CASE("initial energy equals a brute-force recount on random instances") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = Instance::generate(3, 12, 40.0 / 12.0, seed);
    Rng rng(seed + 1000);
    const Assignment a = random_assignment(12, rng);
    SolverState state(inst, a, seed);
    CHECK(state.energy() == oracle::recount_energy(inst, a));
    CHECK(unsat_of(state) == oracle::unsat_set(inst, a));
  }
}

TEST_CASE("state rejects a wrong-length assignment") {
  const Instance inst = Instance::from_clauses(3, 3, {1, 2, 3});
  CHECK_THROWS_AS(SolverState(inst, Assignment(3, 0), 1), std::invalid_argument);
}

TEST_CASE("delta_energy on hand-checked cases") {
  const Instance inst = Instance::from_clauses(5, 3, {1, 2, 3});
  SolverState state(inst, all_set(5, 0), 1);
  CHECK(state.delta_energy(1) == -1);  // flipping x1 satisfies the only unsat clause
  CHECK(state.delta_energy(5) == 0);   // x5 occurs nowhere
  CHECK_THROWS_AS(state.delta_energy(0), std::invalid_argument);
  CHECK_THROWS_AS(state.delta_energy(6), std::invalid_argument);
}

TEST_CASE("delta_energy equals recomputed difference for all variables") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = Instance::generate(3, 12, 40.0 / 12.0, seed);
    Rng rng(seed + 2000);
    Assignment a = random_assignment(12, rng);
    SolverState state(inst, a, seed);
    for (Var v = 1; v <= 12; ++v)
      CHECK(state.delta_energy(v) == oracle::delta_by_recount(inst, a, v));
  }
}

TEST_CASE("delta_energy is a pure observer and consumes no randomness") {
  const Instance inst = Instance::generate(3, 12, 3.0, 5);
  Rng rng(17);
  const Assignment a = random_assignment(12, rng);
  SolverState probed(inst, a, 99);
  SolverState untouched(inst, a, 99);
  for (int i = 0; i < 100; ++i) probed.delta_energy(1 + i % 12);
  for (int i = 0; i < 20; ++i) {
    if (probed.energy() == 0) break;
    CHECK(probed.sample_unsat_clause() == untouched.sample_unsat_clause());
  }
}

TEST_CASE("flip twice restores assignment, energy and unsat set") {
  const Instance inst = Instance::generate(4, 20, 6.0, 3);
  Rng rng(3);
  const Assignment a = random_assignment(20, rng);
  SolverState state(inst, a, 12);
  const int64_t e0 = state.energy();
  const auto unsat0 = unsat_of(state);
  for (Var v = 1; v <= 20; ++v) {
    state.flip(v);
    state.flip(v);
  }
  CHECK(state.assignment() == a);
  CHECK(state.energy() == e0);
  CHECK(unsat_of(state) == unsat0);
  CHECK(state.flips() == 40);
}

TEST_CASE("incremental bookkeeping survives a long random flip sequence") {
  const Instance inst = Instance::generate(3, 15, 45.0 / 15.0, 8);
  Rng rng(123);
  Assignment a = random_assignment(15, rng);
  SolverState state(inst, a, 77);
  Rng flip_rng(55);
  for (int step = 0; step < 2000; ++step) {
    const Var v = static_cast<Var>(flip_rng.next_below(15)) + 1;
    const int32_t predicted = state.delta_energy(v);
    const int64_t before = state.energy();
    state.flip(v);
    a[v] ^= 1;
    CHECK(state.energy() == before + predicted);
    CHECK(state.energy() == oracle::recount_energy(inst, a));
    if (step % 97 == 0) {
      CHECK(unsat_of(state) == oracle::unsat_set(inst, a));
      for (ClauseId c = 0; c < inst.clause_count(); ++c)
        CHECK(state.true_count(c) == oracle::clause_true_count(inst, c, a));
    }
  }
}

TEST_CASE("prepared fast path matches the plain operations") {
  const Instance inst = Instance::generate(4, 30, 6.0, 41);
  Rng rng(41);
  const Assignment a = random_assignment(30, rng);
  SolverState plain(inst, a, 7);
  SolverState fast(inst, a, 7);
  Rng step_rng(91);
  for (int step = 0; step < 3000; ++step) {
    const Var v = static_cast<Var>(step_rng.next_below(30)) + 1;
    const int32_t de = plain.delta_energy(v);
    REQUIRE(fast.delta_energy_prepared(v) == de);
    if (de > 0) {
      const auto crit = plain.critically_satisfied_clauses(v);
      // Same candidate list means the same uniform draw.
      REQUIRE(plain.sample_critical_clause(v) == fast.sample_critical_prepared());
    }
    plain.flip(v);
    fast.flip_prepared(v);
    REQUIRE(plain.energy() == fast.energy());
  }
  CHECK(plain.assignment() == fast.assignment());
  const auto pu = plain.unsat_clauses();
  const auto fu = fast.unsat_clauses();
  CHECK(std::set<ClauseId>(pu.begin(), pu.end()) == std::set<ClauseId>(fu.begin(), fu.end()));
}

TEST_CASE("delta magnitude is bounded by the occurrence degree") {
  const Instance inst = Instance::generate(3, 10, 4.0, 2);
  Rng rng(9);
  const Assignment a = random_assignment(10, rng);
  SolverState state(inst, a, 1);
  for (Var v = 1; v <= 10; ++v)
    CHECK(std::abs(state.delta_energy(v)) <= inst.degree(v));
}

TEST_CASE("unsat clause sampling is uniform") {
  // Three clauses, all unsatisfied under the all-false assignment.
  const Instance inst = Instance::from_clauses(6, 2, {1, 2, 3, 4, 5, 6});
  SolverState state(inst, all_set(6, 0), 31);
  REQUIRE(state.energy() == 3);
  std::map<ClauseId, int64_t> counts;
  const int64_t draws = 100000;
  for (int64_t i = 0; i < draws; ++i) ++counts[state.sample_unsat_clause()];
  const double expected = draws / 3.0;
  const double bound = 4.0 * std::sqrt(draws * (1.0 / 3.0) * (2.0 / 3.0));
  for (ClauseId c = 0; c < 3; ++c)
    CHECK(std::abs(counts[c] - expected) <= bound);
}

TEST_CASE("sampling an unsat clause at energy 0 is an error") {
  const Instance inst = Instance::from_clauses(3, 3, {1, 2, 3});
  SolverState state(inst, all_set(3, 1), 1);
  CHECK_THROWS_AS(state.sample_unsat_clause(), std::logic_error);
}

TEST_CASE("sampling with one unsat clause returns it") {
  const Instance inst = Instance::from_clauses(3, 3, {1, 2, 3});
  SolverState state(inst, all_set(3, 0), 1);
  CHECK(state.sample_unsat_clause() == 0);
}

TEST_CASE("critically satisfied clauses on a hand-checked case") {
  const Instance inst = Instance::from_clauses(2, 2, {1, 2});
  Assignment a = all_set(2, 0);
  a[1] = 1;  // x1 true, x2 false: the clause is satisfied only by x1
  SolverState state(inst, a, 1);
  CHECK(state.critically_satisfied_clauses(1) == std::vector<ClauseId>{0});
  CHECK(state.critically_satisfied_clauses(2).empty());
}

TEST_CASE("critically satisfied clauses match a full scan; nonempty when uphill") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = Instance::generate(3, 12, 3.5, seed);
    Rng rng(seed);
    const Assignment a = random_assignment(12, rng);
    SolverState state(inst, a, seed);
    for (Var v = 1; v <= 12; ++v) {
      CHECK(state.critically_satisfied_clauses(v) == oracle::critical_clauses(inst, a, v));
      if (state.delta_energy(v) > 0) CHECK(!state.critically_satisfied_clauses(v).empty());
    }
  }
}

TEST_CASE("hamming distance on fixed vectors") {
  const Assignment a = {0, 0, 0, 1, 1};
  const Assignment b = {0, 0, 1, 0, 1};
  CHECK(hamming_distance(a, a) == 0.0);
  CHECK(hamming_distance(a, b) == 0.5);
  Assignment complement = a;
  for (size_t v = 1; v < a.size(); ++v) complement[v] ^= 1;
  CHECK(hamming_distance(a, complement) == 1.0);
  CHECK_THROWS_AS(hamming_distance(a, Assignment(3, 0)), std::invalid_argument);
}

TEST_CASE("sample_at_distance endpoints") {
  Rng rng(4);
  const Assignment ref = random_assignment(9, rng);
  CHECK(sample_at_distance(ref, 0.0, 1) == ref);
  const Assignment far = sample_at_distance(ref, 1.0, 2);
  CHECK(hamming_distance(ref, far) == 1.0);
  CHECK_THROWS_AS(sample_at_distance(ref, 1.5, 1), std::invalid_argument);
}

TEST_CASE("sample_at_distance is uniform over two-flip neighbors at N=4") {
  const Assignment ref = {0, 0, 0, 0, 0};
  std::map<std::set<Var>, int64_t> counts;
  const int64_t draws = 60000;
  for (int64_t i = 0; i < draws; ++i) {
    const Assignment out = sample_at_distance(ref, 0.5, static_cast<uint64_t>(i));
    std::set<Var> flipped;
    for (Var v = 1; v <= 4; ++v)
      if (out[v] != ref[v]) flipped.insert(v);
    REQUIRE(flipped.size() == 2);
    ++counts[flipped];
  }
  CHECK(counts.size() == 6);
  const double expected = draws / 6.0;
  const double bound = 4.0 * std::sqrt(draws * (1.0 / 6.0) * (5.0 / 6.0));
  for (const auto& [set, count] : counts)
    CHECK(std::abs(count - expected) <= bound);
}
