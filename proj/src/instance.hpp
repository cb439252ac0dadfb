#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rng.hpp"

namespace slslab {

using Var = int32_t;       // 1-based variable index
using Lit = int32_t;       // signed DIMACS-style literal, never 0
using ClauseId = int32_t;  // 0-based clause index

// Truth values per variable; entry 0 is unused so that indexing matches the
// 1-based external convention.
using Assignment = std::vector<uint8_t>;

inline Var lit_var(Lit l) { return l > 0 ? l : -l; }

// Literal code in [0, 2N): positive literal of v -> 2(v-1), negative ->
// 2(v-1)+1. The two occurrence lists of a variable are adjacent.
inline int32_t lit_code(Lit l) {
  return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
}

inline bool lit_true_under(Lit l, const Assignment& a) {
  return (a[lit_var(l)] != 0) == (l > 0);
}

// A K-uniform CNF formula: every clause has exactly `width()` literals over
// pairwise distinct variables. Immutable after construction and safe to
// share across concurrent runs. Duplicate clauses are permitted.
class Instance {
 public:
  // M = round(alpha * N) clauses, each drawn independently: K distinct
  // variables uniformly without replacement, then K fair-coin polarities.
  // Draw order per clause: the K variable draws (rejecting repeats within
  // the clause), then the K polarity draws (one next_bool each).
  static Instance generate(int32_t k, int32_t n, double alpha, uint64_t seed);

  // `flat_lits` holds m*k literals, clause by clause. Validates width,
  // variable range and per-clause distinctness.
  static Instance from_clauses(int32_t n, int32_t k, std::vector<Lit> flat_lits);

  int32_t width() const { return k_; }        // K (0 only when empty)
  int32_t variables() const { return n_; }    // N
  int32_t clause_count() const { return m_; } // M
  double alpha() const { return n_ > 0 ? static_cast<double>(m_) / n_ : 0.0; }

  std::span<const Lit> clause(ClauseId c) const {
    return {lits_.data() + static_cast<size_t>(c) * k_, static_cast<size_t>(k_)};
  }

  // Clauses containing exactly this literal (matching polarity).
  std::span<const ClauseId> occurrences(Lit l) const {
    const int32_t code = lit_code(l);
    return {occ_list_.data() + occ_start_[code],
            static_cast<size_t>(occ_start_[code + 1] - occ_start_[code])};
  }

  // Clauses containing the variable with either polarity.
  std::span<const ClauseId> occurrences_of_var(Var v) const {
    const int32_t code = 2 * (v - 1);
    return {occ_list_.data() + occ_start_[code],
            static_cast<size_t>(occ_start_[code + 2] - occ_start_[code])};
  }

  int32_t degree(Var v) const {
    const int32_t code = 2 * (v - 1);
    return occ_start_[code + 2] - occ_start_[code];
  }

  const std::vector<Lit>& flat_literals() const { return lits_; }

  // Raw views for the solver hot loops.
  const int32_t* occ_start_ptr() const { return occ_start_.data(); }
  const ClauseId* occ_list_ptr() const { return occ_list_.data(); }
  const Lit* literal_ptr() const { return lits_.data(); }

  bool operator==(const Instance& other) const {
    return k_ == other.k_ && n_ == other.n_ && lits_ == other.lits_;
  }

 private:
  Instance(int32_t n, int32_t k, std::vector<Lit> lits);
  void build_occurrence_index();

  int32_t k_ = 0;
  int32_t n_ = 0;
  int32_t m_ = 0;
  std::vector<Lit> lits_;            // m*k literals, clause-major
  std::vector<int32_t> occ_start_;   // 2n+1 CSR offsets into occ_list_
  std::vector<ClauseId> occ_list_;   // m*k clause ids grouped by literal code
};

// True iff the assignment satisfies every clause; direct scan over the
// clause list, independent of any incremental bookkeeping.
bool satisfies(const Instance& inst, const Assignment& a);

}  // namespace slslab
