#pragma once

#include <functional>
#include <optional>

#include "dynamics.hpp"

namespace slslab {

// Focused Metropolis Search parameters. eta is the "temperature": uphill
// moves with energy change d > 0 are accepted with probability eta^d.
struct FmsParams {
  double eta = 0.293;
  double max_flips_per_var = 10000;
};

// ChainSAT parameters: p1 gates downhill flips, p2 terminates chains.
struct ChainSatParams {
  double p1 = 0.0001;
  double p2 = 0.0001;
  double max_iterations_per_var = 10000;
};

// Outcome of one trial. `iterations` counts main-loop passes, `flips`
// counts accepted flips; `chain_starts` counts the non-chaining branch of
// ChainSAT (zero for the other algorithms), and
// avg_chain_length = iterations/chain_starts - 1 when chain_starts > 0.
// A solved record carries the solution, re-verified against the full
// clause list before the record is emitted.
struct RunRecord {
  bool solved = false;
  uint64_t flips = 0;
  uint64_t iterations = 0;
  uint64_t chain_starts = 0;
  double avg_chain_length = 0.0;
  int64_t final_energy = 0;
  uint64_t seed = 0;
  double elapsed_s = 0.0;
  std::optional<Assignment> solution;
};

// Test instrumentation; all callbacks optional. on_flip fires after a flip
// with the new energy; on_proposal fires for every evaluated move of FMS.
struct StepHooks {
  std::function<void(Var, int64_t)> on_flip;
  std::function<void(int32_t, bool)> on_proposal;
};

// Draw-order contract (one entry = one RNG draw on the run's stream):
//   start:     N next_bool draws for the initial assignment (v = 1..N),
//              skipped when an explicit initial assignment is supplied.
//   RWSAT:     per iteration: unsat-clause draw, in-clause variable draw.
//   FMS:       per iteration: unsat-clause draw, in-clause variable draw,
//              then one next_double acceptance draw only if the move is
//              uphill AND eta^dE < 1. With eta = 1 no acceptance draw is
//              consumed, so FMS and RWSAT produce identical flip sequences
//              for the same seed.
//   WalkSAT:   per iteration: unsat-clause draw; if free moves exist, one
//              draw among them; otherwise one next_double noise draw, then
//              one draw among all K variables (noise branch) or among the
//              minimum-break variables (greedy branch).
//   ChainSAT:  per iteration: when not chaining, unsat-clause draw and
//              in-clause variable draw; after dE: no draw if dE == 0, one
//              next_double (vs p1) if dE < 0, one next_double (vs 1 - p2)
//              if dE > 0, and when chaining engages one draw among the
//              critically satisfied clauses plus one among the K-1 other
//              variables of the chosen clause.
// eta^dE is computed by repeated multiplication, so identical seeds give
// bit-identical runs on any platform.

// Focused random walk: satisfy a uniformly chosen broken clause by
// flipping one of its variables uniformly at random.
RunRecord run_randomwalksat(const Instance& inst, double max_flips_per_var, uint64_t seed,
                            const Assignment* initial = nullptr,
                            const StepHooks* hooks = nullptr);

// WalkSAT/SKC baseline: free move if some variable of the clause has break
// count 0; otherwise random walk with probability `noise`, else a
// minimum-break flip (ties uniform).
RunRecord run_walksat(const Instance& inst, double noise, double max_flips_per_var,
                      uint64_t seed, const Assignment* initial = nullptr,
                      const StepHooks* hooks = nullptr);

// Focused Metropolis Search: flip if dE <= 0, else flip with probability
// eta^dE. Cuts on accepted flips. A run that stops accepting flips ends
// unsolved once iterations exceed 64*(flip limit + N) + 2^16; only
// eta ~ 0 can reach that guard.
RunRecord run_fms(const Instance& inst, const FmsParams& params, uint64_t seed,
                  const Assignment* initial = nullptr, const StepHooks* hooks = nullptr);

// ChainSAT: never moves up in energy. Equal-energy flips always accepted,
// downhill flips with probability p1; an uphill candidate instead starts a
// chain with probability 1 - p2 through one of its critically satisfied
// clauses. Cuts on iterations (chains advance without flipping). The
// energy trace is checked at every flip; a rise aborts the run.
RunRecord run_chainsat(const Instance& inst, const ChainSatParams& params, uint64_t seed,
                       const Assignment* initial = nullptr,
                       const StepHooks* hooks = nullptr);

}  // namespace slslab
