#include "dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slslab {

SolverState::SolverState(const Instance& inst, Assignment a, uint64_t rng_seed)
    : SolverState(inst, std::move(a), Rng(rng_seed)) {}

SolverState::SolverState(const Instance& inst, Assignment a, Rng rng)
    : inst_(&inst), a_(std::move(a)), rng_(rng) {
  if (a_.size() != static_cast<size_t>(inst.variables()) + 1)
    throw std::invalid_argument("assignment length does not match the instance");

  const int32_t m = inst.clause_count();
  stride_ = 1 + inst.width();
  true_count_.assign(static_cast<size_t>(m), 0);
  unsat_pos_.assign(static_cast<size_t>(m), -1);
  unsat_.resize(static_cast<size_t>(m) * stride_);
  make_count_.assign(static_cast<size_t>(inst.variables()) + 1, 0);
  int32_t max_degree = 0;
  for (Var v = 1; v <= inst.variables(); ++v)
    max_degree = std::max(max_degree, inst.degree(v));
  prepared_.resize(static_cast<size_t>(max_degree));
  critical_scratch_.resize(static_cast<size_t>(max_degree));

  const int32_t k = inst.width();
  const auto& lits = inst.flat_literals();
  for (int32_t c = 0; c < m; ++c) {
    uint8_t t = 0;
    for (int32_t j = 0; j < k; ++j)
      t += lit_true_under(lits[static_cast<size_t>(c) * k + j], a_) ? 1 : 0;
    true_count_[c] = t;
    if (t == 0) {
      unsat_pos_[c] = unsat_size_;
      int32_t* entry = unsat_.data() + static_cast<size_t>(unsat_size_) * stride_;
      entry[0] = c;
      for (int32_t j = 0; j < k; ++j) {
        const Lit l = lits[static_cast<size_t>(c) * k + j];
        entry[1 + j] = l;
        ++make_count_[lit_var(l)];
      }
      ++unsat_size_;
    }
  }
}

void SolverState::check_var(Var v) const {
  if (v < 1 || v > inst_->variables())
    throw std::invalid_argument("variable index " + std::to_string(v) + " out of range");
}

int32_t SolverState::delta_energy(Var v) const {
  check_var(v);
  return break_count(v) - make_count_[static_cast<size_t>(v)];
}

int32_t SolverState::break_count(Var v) const {
  check_var(v);
  const uint8_t* const tc = true_count_.data();
  const int32_t* const start = inst_->occ_start_ptr();
  const ClauseId* const occ = inst_->occ_list_ptr();
  const int32_t code = 2 * (v - 1) + (a_[v] ? 0 : 1);
  int32_t breaks = 0;
  for (int32_t i = start[code]; i < start[code + 1]; ++i) breaks += tc[occ[i]] == 1;
  return breaks;
}

int32_t SolverState::make_count(Var v) const {
  check_var(v);
  return make_count_[static_cast<size_t>(v)];
}

void SolverState::flip(Var v) {
  check_var(v);
  uint8_t* const tc = true_count_.data();
  ClauseId* const unsat = unsat_.data();
  int32_t* const pos = unsat_pos_.data();
  int32_t* const make = make_count_.data();
  const int32_t* const start = inst_->occ_start_ptr();
  const ClauseId* const occ = inst_->occ_list_ptr();
  const Lit* const lits = inst_->literal_ptr();
  const int32_t k = inst_->width();
  const uint8_t old = a_[v];
  const int32_t true_code = 2 * (v - 1) + (old ? 0 : 1);
  const int32_t false_code = true_code ^ 1;
  int32_t usize = unsat_size_;

  const int32_t stride = stride_;
  for (int32_t i = start[true_code]; i < start[true_code + 1]; ++i) {
    const ClauseId c = occ[i];
    if (--tc[c] == 0) {
      pos[c] = usize;
      int32_t* entry = unsat + static_cast<size_t>(usize) * stride;
      entry[0] = c;
      const Lit* cl = lits + static_cast<size_t>(c) * k;
      for (int32_t j = 0; j < k; ++j) {
        entry[1 + j] = cl[j];
        ++make[lit_var(cl[j])];
      }
      ++usize;
    }
  }
  for (int32_t i = start[false_code]; i < start[false_code + 1]; ++i) {
    const ClauseId c = occ[i];
    if (tc[c]++ == 0) {
      const int32_t p = pos[c];
      int32_t* gone = unsat + static_cast<size_t>(p) * stride;
      const int32_t* moved = unsat + static_cast<size_t>(--usize) * stride;
      for (int32_t j = 0; j < stride; ++j) gone[j] = moved[j];
      pos[moved[0]] = p;
      pos[c] = -1;
      const Lit* cl = lits + static_cast<size_t>(c) * k;
      for (int32_t j = 0; j < k; ++j) --make[lit_var(cl[j])];
    }
  }
  unsat_size_ = usize;
  a_[v] = old ^ 1;
  ++flips_;
}

int32_t SolverState::delta_energy_prepared(Var v) {
  check_var(v);
  const uint8_t* const tc = true_count_.data();
  const int32_t* const start = inst_->occ_start_ptr();
  const ClauseId* const occ = inst_->occ_list_ptr();
  ClauseId* const stash = prepared_.data();
  ClauseId* const crit = critical_scratch_.data();
  const int32_t code = 2 * (v - 1) + (a_[v] ? 0 : 1);

  // Only the currently-true literal's list is scanned; the make side comes
  // from the maintained per-variable count of unsatisfied clauses.
  int32_t len = 0, breaks = 0;
  for (int32_t i = start[code]; i < start[code + 1]; ++i) {
    const ClauseId c = occ[i];
    stash[len++] = c;
    if (tc[c] == 1) crit[breaks++] = c;
  }
  prepared_true_len_ = len;
  critical_len_ = breaks;
  return breaks - make_count_[static_cast<size_t>(v)];
}

void SolverState::flip_prepared(Var v) {
  uint8_t* const tc = true_count_.data();
  ClauseId* const unsat = unsat_.data();
  int32_t* const pos = unsat_pos_.data();
  int32_t* const make = make_count_.data();
  const ClauseId* const stash = prepared_.data();
  const int32_t* const start = inst_->occ_start_ptr();
  const ClauseId* const occ = inst_->occ_list_ptr();
  const Lit* const lits = inst_->literal_ptr();
  const int32_t k = inst_->width();
  const uint8_t old = a_[v];
  const int32_t false_code = 2 * (v - 1) + (old ? 1 : 0);
  int32_t usize = unsat_size_;

  const int32_t true_len = prepared_true_len_;
  for (int32_t i = 0; i < true_len; ++i) {
    const ClauseId c = stash[i];
    if (--tc[c] == 0) {
      pos[c] = usize;
      unsat[usize++] = c;
      const Lit* cl = lits + static_cast<size_t>(c) * k;
      for (int32_t j = 0; j < k; ++j) ++make[lit_var(cl[j])];
    }
  }
  for (int32_t i = start[false_code]; i < start[false_code + 1]; ++i) {
    const ClauseId c = occ[i];
    if (tc[c]++ == 0) {
      const int32_t p = pos[c];
      const ClauseId last = unsat[--usize];
      unsat[p] = last;
      pos[last] = p;
      pos[c] = -1;
      const Lit* cl = lits + static_cast<size_t>(c) * k;
      for (int32_t j = 0; j < k; ++j) --make[lit_var(cl[j])];
    }
  }
  unsat_size_ = usize;
  a_[v] = old ^ 1;
  ++flips_;
}

ClauseId SolverState::sample_critical_prepared() {
  if (critical_len_ == 0)
    throw std::logic_error("no critically satisfied clause prepared");
  return critical_scratch_[rng_.next_below(static_cast<uint64_t>(critical_len_))];
}

ClauseId SolverState::sample_unsat_clause() { return sample_unsat_entry()[0]; }

const int32_t* SolverState::sample_unsat_entry() {
  if (unsat_size_ == 0) throw std::logic_error("sample_unsat_clause called at energy 0");
  const uint64_t r = rng_.next_below(static_cast<uint64_t>(unsat_size_));
  return unsat_.data() + static_cast<size_t>(r) * stride_;
}

std::vector<ClauseId> SolverState::unsat_clauses() const {
  std::vector<ClauseId> out;
  out.reserve(static_cast<size_t>(unsat_size_));
  for (int32_t i = 0; i < unsat_size_; ++i)
    out.push_back(unsat_[static_cast<size_t>(i) * stride_]);
  return out;
}

std::vector<ClauseId> SolverState::critically_satisfied_clauses(Var v) const {
  check_var(v);
  const Lit true_lit = a_[v] ? v : -v;
  std::vector<ClauseId> out;
  for (ClauseId c : inst_->occurrences(true_lit))
    if (true_count_[c] == 1) out.push_back(c);
  return out;
}

ClauseId SolverState::sample_critical_clause(Var v) {
  check_var(v);
  const Lit true_lit = a_[v] ? v : -v;
  critical_len_ = 0;
  for (ClauseId c : inst_->occurrences(true_lit))
    if (true_count_[c] == 1) critical_scratch_[critical_len_++] = c;
  if (critical_len_ == 0)
    throw std::logic_error("no critically satisfied clause for variable " + std::to_string(v));
  return critical_scratch_[rng_.next_below(static_cast<uint64_t>(critical_len_))];
}

Assignment random_assignment(int32_t n, Rng& rng) {
  Assignment a(static_cast<size_t>(n) + 1, 0);
  for (int32_t v = 1; v <= n; ++v) a[v] = rng.next_bool() ? 1 : 0;
  return a;
}

double hamming_distance(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) throw std::invalid_argument("assignment lengths differ");
  if (a.size() <= 1) return 0.0;
  int64_t diff = 0;
  for (size_t v = 1; v < a.size(); ++v) diff += a[v] != b[v];
  return static_cast<double>(diff) / static_cast<double>(a.size() - 1);
}

Assignment sample_at_distance(const Assignment& reference, double x, uint64_t seed) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("distance must lie in [0, 1]");
  const int64_t n = static_cast<int64_t>(reference.size()) - 1;
  const int64_t d = std::llround(x * static_cast<double>(n));
  Assignment out = reference;
  Rng rng(seed);
  std::vector<Var> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  for (int64_t i = 0; i < d; ++i) {
    const int64_t j = i + static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
    out[idx[i]] ^= 1;
  }
  return out;
}

}  // namespace slslab
