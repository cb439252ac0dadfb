#include "whitening.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace slslab {

WhitenessResult whiten(const Instance& inst, const Assignment& a) {
  const int32_t n = inst.variables();
  const int32_t m = inst.clause_count();
  const int32_t k = inst.width();
  if (a.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("assignment length does not match the instance");

  WhitenessResult res;
  res.depth.assign(static_cast<size_t>(n) + 1, -1);

  std::vector<uint8_t> clause_marked(static_cast<size_t>(m), 0);
  std::vector<uint8_t> var_marked(static_cast<size_t>(n) + 1, 0);
  // Unmarked clauses containing v's satisfying literal; v becomes markable
  // when this hits zero.
  std::vector<int32_t> sat_unmarked(static_cast<size_t>(n) + 1, 0);

  const auto& lits = inst.flat_literals();
  for (int32_t c = 0; c < m; ++c) {
    int32_t t = 0;
    for (int32_t j = 0; j < k; ++j)
      t += lit_true_under(lits[static_cast<size_t>(c) * k + j], a) ? 1 : 0;
    if (t != 1) clause_marked[c] = 1;  // unsatisfied or more than one true literal
  }
  for (int32_t c = 0; c < m; ++c) {
    if (clause_marked[c]) continue;
    for (int32_t j = 0; j < k; ++j) {
      const Lit l = lits[static_cast<size_t>(c) * k + j];
      if (lit_true_under(l, a)) ++sat_unmarked[lit_var(l)];
    }
  }

  std::vector<Var> frontier, next;
  for (Var v = 1; v <= n; ++v)
    if (sat_unmarked[v] == 0) frontier.push_back(v);

  int32_t marked_vars = 0;
  int32_t round = 0;
  for (;;) {
    for (Var v : frontier) {
      var_marked[v] = 1;
      res.depth[v] = round;
    }
    marked_vars += static_cast<int32_t>(frontier.size());
    if (marked_vars == n) {
      res.outcome = WhitenessOutcome::kCompletelyWhite;
      break;
    }
    if (frontier.empty()) {
      res.outcome = WhitenessOutcome::kCore;
      break;
    }
    next.clear();
    for (Var v : frontier) {
      for (ClauseId c : inst.occurrences_of_var(v)) {
        if (clause_marked[c]) continue;
        clause_marked[c] = 1;
        for (int32_t j = 0; j < k; ++j) {
          const Lit l = lits[static_cast<size_t>(c) * k + j];
          const Var u = lit_var(l);
          if (!var_marked[u] && lit_true_under(l, a) && --sat_unmarked[u] == 0)
            next.push_back(u);
        }
      }
    }
    ++round;
    frontier.swap(next);
  }
  res.rounds = round;

  if (res.outcome == WhitenessOutcome::kCompletelyWhite) {
    int64_t total = 0;
    for (Var v = 1; v <= n; ++v) total += res.depth[v];
    res.awd = n > 0 ? static_cast<double>(total) / static_cast<double>(n) : 0.0;
  } else {
    res.awd = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

WhitenessSummary awd_of_solutions(const Instance& inst,
                                  const std::vector<Assignment>& solutions) {
  WhitenessSummary summary;
  summary.results.reserve(solutions.size());
  double sum = 0.0;
  double max = -std::numeric_limits<double>::infinity();
  int32_t white = 0;
  for (size_t i = 0; i < solutions.size(); ++i) {
    if (!satisfies(inst, solutions[i]))
      throw std::invalid_argument("assignment " + std::to_string(i) +
                                  " does not satisfy the instance");
    WhitenessResult r = whiten(inst, solutions[i]);
    if (r.outcome == WhitenessOutcome::kCompletelyWhite) {
      sum += r.awd;
      max = std::max(max, r.awd);
      ++white;
    } else {
      ++summary.non_white;
    }
    summary.results.push_back(std::move(r));
  }
  if (white > 0) {
    summary.mean_awd = sum / white;
    summary.max_awd = max;
  } else {
    summary.mean_awd = std::numeric_limits<double>::quiet_NaN();
    summary.max_awd = std::numeric_limits<double>::quiet_NaN();
  }
  return summary;
}

}  // namespace slslab
