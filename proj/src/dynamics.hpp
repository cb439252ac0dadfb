#pragma once

#include <span>
#include <vector>

#include "instance.hpp"
#include "rng.hpp"

namespace slslab {

// A configuration over an instance together with the incremental
// bookkeeping that makes single flips O(occurrence degree):
//   true_count[c]  number of satisfied literals of clause c
//   unsat          dense array of clauses with true_count == 0, with a
//                  clause -> position map for O(1) insert/remove/sample
//   energy         |unsat|
// The state owns its RNG stream; each run owns exactly one state.
//
// Hot paths work on raw pointers hoisted into locals: the byte stores into
// true_count would otherwise force reloads of every container's internals
// on each step.
class SolverState {
 public:
  SolverState(const Instance& inst, Assignment a, uint64_t rng_seed);
  // Adopts an already-advanced stream (e.g. after initial-assignment draws).
  SolverState(const Instance& inst, Assignment a, Rng rng);

  int64_t energy() const { return unsat_size_; }
  bool solved() const { return unsat_size_ == 0; }

  // break(v) - make(v): clauses broken minus clauses fixed if v flipped.
  // Pure observer; consumes no randomness.
  int32_t delta_energy(Var v) const;

  // Clauses in which v's currently-true literal is the sole satisfier
  // (occurrence-list scan).
  int32_t break_count(Var v) const;
  // Currently unsatisfied clauses containing v (maintained incrementally
  // as clauses enter and leave the unsat set).
  int32_t make_count(Var v) const;

  // Negates v and updates all bookkeeping by visiting only the occurrence
  // lists of v. Increments the flip counter.
  void flip(Var v);

  // Fast path for propose-then-flip loops: delta_energy_prepared stashes
  // the true-literal occurrence list (and the critically satisfied
  // clauses) in scratch buffers; flip_prepared and
  // sample_critical_prepared then reuse them instead of walking the
  // occurrence index again. Observable behavior is identical to
  // delta_energy/flip/sample_critical_clause as long as no other mutation
  // happens in between.
  int32_t delta_energy_prepared(Var v);
  void flip_prepared(Var v);
  ClauseId sample_critical_prepared();

  // Uniform over the unsatisfied clauses; advances the RNG. Energy must be
  // positive.
  ClauseId sample_unsat_clause();

  // Same draw, but returns the stored unsat entry: entry[0] is the clause
  // id, entry[1..k] its literals. Sampling then needs no access to the
  // clause table.
  const int32_t* sample_unsat_entry();

  // Exactly the clauses where v's literal is true and true_count == 1.
  std::vector<ClauseId> critically_satisfied_clauses(Var v) const;

  // Uniform draw among the critically satisfied clauses of v; requires at
  // least one (guaranteed while delta_energy(v) > 0). One bounded draw.
  ClauseId sample_critical_clause(Var v);

  const Assignment& assignment() const { return a_; }
  const Instance& instance() const { return *inst_; }
  uint8_t true_count(ClauseId c) const { return true_count_[c]; }
  std::vector<ClauseId> unsat_clauses() const;

  uint64_t flips() const { return flips_; }
  uint64_t iterations() const { return iterations_; }
  void count_iteration() { ++iterations_; }

  Rng& rng() { return rng_; }

 private:
  void check_var(Var v) const;

  const Instance* inst_;
  Assignment a_;
  std::vector<uint8_t> true_count_;
  // Unsat stack entries of stride_ = 1+k ints: clause id then its
  // literals, so one cache line serves both the sample and the in-clause
  // variable choice. First unsat_size_ entries are live.
  std::vector<int32_t> unsat_;
  std::vector<int32_t> unsat_pos_;  // entry index in unsat_, -1 when satisfied
  int32_t unsat_size_ = 0;
  int32_t stride_ = 1;
  std::vector<int32_t> make_count_; // per variable, over the unsat set
  std::vector<ClauseId> prepared_;  // stashed true-literal occurrence list
  int32_t prepared_true_len_ = 0;
  std::vector<ClauseId> critical_scratch_;
  int32_t critical_len_ = 0;
  uint64_t flips_ = 0;
  uint64_t iterations_ = 0;
  Rng rng_;
};

// One fair-coin value per variable, drawn in order v = 1..N.
Assignment random_assignment(int32_t n, Rng& rng);

// Fraction of positions at which the two assignments differ.
double hamming_distance(const Assignment& a, const Assignment& b);

// Flips exactly round(x*N) positions of the reference, the position set
// uniform over all sets of that size (partial Fisher-Yates).
Assignment sample_at_distance(const Assignment& reference, double x, uint64_t seed);

}  // namespace slslab
