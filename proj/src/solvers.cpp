#include "solvers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slslab {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t scaled_limit(double per_var, int32_t n) {
  const double total = per_var * static_cast<double>(n);
  if (!(total >= 0)) throw std::invalid_argument("cutoff must be nonnegative");
  if (total >= 9.2e18) return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(std::llround(total));
}

// eta^d for small integer d via repeated multiplication; exact IEEE ops
// keep runs platform-independent.
double int_pow(double eta, int32_t d) {
  double p = 1.0;
  for (int32_t i = 0; i < d; ++i) p *= eta;
  return p;
}

Assignment start_assignment(const Instance& inst, Rng& rng, const Assignment* initial) {
  if (!initial) return random_assignment(inst.variables(), rng);
  if (initial->size() != static_cast<size_t>(inst.variables()) + 1)
    throw std::invalid_argument("initial assignment length does not match the instance");
  return *initial;
}

RunRecord finish(SolverState& state, uint64_t chain_starts, uint64_t seed,
                 Clock::time_point t0) {
  RunRecord rec;
  rec.solved = state.solved();
  rec.flips = state.flips();
  rec.iterations = state.iterations();
  rec.chain_starts = chain_starts;
  rec.avg_chain_length =
      chain_starts > 0
          ? static_cast<double>(state.iterations()) / static_cast<double>(chain_starts) - 1.0
          : 0.0;
  rec.final_energy = state.energy();
  rec.seed = seed;
  rec.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (rec.solved) {
    if (!satisfies(state.instance(), state.assignment()))
      throw std::logic_error("bookkeeping reports energy 0 but a clause is unsatisfied");
    rec.solution = state.assignment();
  }
  return rec;
}

// One uniform draw over the variables of a sampled unsat entry.
inline Var entry_var(const int32_t* entry, int32_t k, Rng& rng) {
  return lit_var(entry[1 + rng.next_below(static_cast<uint64_t>(k))]);
}

}  // namespace

RunRecord run_randomwalksat(const Instance& inst, double max_flips_per_var, uint64_t seed,
                            const Assignment* initial, const StepHooks* hooks) {
  const auto t0 = Clock::now();
  const uint64_t limit = scaled_limit(max_flips_per_var, inst.variables());
  Rng rng(seed);
  Assignment start = start_assignment(inst, rng, initial);
  SolverState state(inst, std::move(start), rng);

  const int32_t k = inst.width();
  while (!state.solved() && state.flips() < limit) {
    state.count_iteration();
    const int32_t* entry = state.sample_unsat_entry();
    const Var v = entry_var(entry, k, state.rng());
    state.flip(v);
    if (hooks && hooks->on_flip) hooks->on_flip(v, state.energy());
  }
  return finish(state, 0, seed, t0);
}

RunRecord run_fms(const Instance& inst, const FmsParams& params, uint64_t seed,
                  const Assignment* initial, const StepHooks* hooks) {
  if (!(params.eta >= 0.0 && params.eta <= 1.0))
    throw std::invalid_argument("eta must lie in [0, 1]");
  const auto t0 = Clock::now();
  const uint64_t limit = scaled_limit(params.max_flips_per_var, inst.variables());
  const uint64_t stall_guard =
      64 * (limit + static_cast<uint64_t>(inst.variables())) + (1ull << 16);
  Rng rng(seed);
  Assignment start = start_assignment(inst, rng, initial);
  SolverState state(inst, std::move(start), rng);

  const int32_t k = inst.width();
  while (!state.solved() && state.flips() < limit && state.iterations() < stall_guard) {
    state.count_iteration();
    const int32_t* entry = state.sample_unsat_entry();
    const Var v = entry_var(entry, k, state.rng());
    const int32_t de = state.delta_energy_prepared(v);
    bool accept = true;
    if (de > 0) {
      const double p = int_pow(params.eta, de);
      if (p < 1.0) accept = state.rng().next_double() < p;
    }
    if (hooks && hooks->on_proposal) hooks->on_proposal(de, accept);
    if (accept) {
      state.flip_prepared(v);
      if (hooks && hooks->on_flip) hooks->on_flip(v, state.energy());
    }
  }
  return finish(state, 0, seed, t0);
}

RunRecord run_walksat(const Instance& inst, double noise, double max_flips_per_var,
                      uint64_t seed, const Assignment* initial, const StepHooks* hooks) {
  if (!(noise >= 0.0 && noise <= 1.0))
    throw std::invalid_argument("noise must lie in [0, 1]");
  const auto t0 = Clock::now();
  const uint64_t limit = scaled_limit(max_flips_per_var, inst.variables());
  Rng rng(seed);
  Assignment start = start_assignment(inst, rng, initial);
  SolverState state(inst, std::move(start), rng);

  const int32_t k = inst.width();
  std::vector<int32_t> breaks(static_cast<size_t>(k), 0);
  std::vector<Var> candidates(static_cast<size_t>(k), 0);
  while (!state.solved() && state.flips() < limit) {
    state.count_iteration();
    const int32_t* entry = state.sample_unsat_entry();
    int32_t min_break = std::numeric_limits<int32_t>::max();
    for (int32_t j = 0; j < k; ++j) {
      breaks[j] = state.break_count(lit_var(entry[1 + j]));
      min_break = std::min(min_break, breaks[j]);
    }
    Var chosen;
    if (min_break == 0) {
      int32_t count = 0;
      for (int32_t j = 0; j < k; ++j)
        if (breaks[j] == 0) candidates[count++] = lit_var(entry[1 + j]);
      chosen = candidates[state.rng().next_below(static_cast<uint64_t>(count))];
    } else if (state.rng().next_double() < noise) {
      chosen = lit_var(entry[1 + state.rng().next_below(static_cast<uint64_t>(k))]);
    } else {
      int32_t count = 0;
      for (int32_t j = 0; j < k; ++j)
        if (breaks[j] == min_break) candidates[count++] = lit_var(entry[1 + j]);
      chosen = candidates[state.rng().next_below(static_cast<uint64_t>(count))];
    }
    state.flip(chosen);
    if (hooks && hooks->on_flip) hooks->on_flip(chosen, state.energy());
  }
  return finish(state, 0, seed, t0);
}

RunRecord run_chainsat(const Instance& inst, const ChainSatParams& params, uint64_t seed,
                       const Assignment* initial, const StepHooks* hooks) {
  if (!(params.p1 > 0.0 && params.p1 <= 1.0))
    throw std::invalid_argument("p1 must lie in (0, 1]");
  if (!(params.p2 > 0.0 && params.p2 <= 1.0))
    throw std::invalid_argument("p2 must lie in (0, 1]");
  if (inst.width() == 1)
    throw std::invalid_argument("ChainSAT needs clause width >= 2 to chain");
  const auto t0 = Clock::now();
  const uint64_t limit = scaled_limit(params.max_iterations_per_var, inst.variables());
  Rng rng(seed);
  Assignment start = start_assignment(inst, rng, initial);
  SolverState state(inst, std::move(start), rng);

  const auto monotone_flip = [&](Var u) {
    const int64_t before = state.energy();
    state.flip_prepared(u);
    if (state.energy() > before)
      throw std::logic_error("ChainSAT energy rose from " + std::to_string(before) + " to " +
                             std::to_string(state.energy()) + " flipping variable " +
                             std::to_string(u));
    if (hooks && hooks->on_flip) hooks->on_flip(u, state.energy());
  };

  uint64_t chain_starts = 0;
  bool chaining = false;
  Var v = 0;
  while (!state.solved() && state.iterations() < limit) {
    state.count_iteration();
    if (!chaining) {
      ++chain_starts;
      const int32_t* entry = state.sample_unsat_entry();
      v = entry_var(entry, inst.width(), state.rng());
    }
    const int32_t de = state.delta_energy_prepared(v);
    chaining = false;
    if (de == 0) {
      monotone_flip(v);
    } else if (de < 0) {
      if (state.rng().next_double() < params.p1) monotone_flip(v);
    } else if (state.rng().next_double() < 1.0 - params.p2) {
      const ClauseId c = state.sample_critical_prepared();
      const auto lits = inst.clause(c);
      const int32_t k = static_cast<int32_t>(lits.size());
      uint64_t r = state.rng().next_below(static_cast<uint64_t>(k - 1));
      Var next = 0;
      for (int32_t j = 0; j < k; ++j) {
        const Var u = lit_var(lits[j]);
        if (u == v) continue;
        if (r == 0) {
          next = u;
          break;
        }
        --r;
      }
      v = next;
      chaining = true;
    }
  }
  return finish(state, chain_starts, seed, t0);
}

}  // namespace slslab
