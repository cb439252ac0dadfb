#pragma once

#include <vector>

#include "instance.hpp"

namespace slslab {

enum class WhitenessOutcome { kCompletelyWhite, kCore };

// Per-variable whiteness depths of a configuration. depth[v] is the round
// at which v was marked, or -1 if it never was (only possible for a Core
// outcome). awd is the mean depth, defined only when completely white.
struct WhitenessResult {
  WhitenessOutcome outcome = WhitenessOutcome::kCompletelyWhite;
  std::vector<int32_t> depth;  // 1-based like assignments; depth[0] unused
  double awd = 0.0;            // NaN when outcome == kCore
  int32_t rounds = 0;          // value of the round counter at the halt
};

// Round-synchronous whitening. Initially marks every unsatisfied clause
// and every clause with more than one true literal; then each round marks
// the variables whose satisfying-literal occurrences all lie in marked
// clauses (vacuously, variables with no satisfying occurrence), halts when
// all variables are marked (completely white) or no new variable was
// marked (core), and otherwise marks every clause containing a marked
// variable before the next round. Deterministic; no randomness anywhere.
WhitenessResult whiten(const Instance& inst, const Assignment& a);

struct WhitenessSummary {
  std::vector<WhitenessResult> results;
  double mean_awd = 0.0;  // over completely white solutions; NaN when none
  double max_awd = 0.0;   // likewise
  int32_t non_white = 0;  // count of Core outcomes
};

// Whitens each assignment, all of which must satisfy the instance.
WhitenessSummary awd_of_solutions(const Instance& inst,
                                  const std::vector<Assignment>& solutions);

}  // namespace slslab
