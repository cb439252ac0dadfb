#include "instance.hpp"

#include "hugepage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace slslab {

namespace {

constexpr int32_t kMaxWidth = 255;  // true-literal counts are kept in bytes

}  // namespace

Instance::Instance(int32_t n, int32_t k, std::vector<Lit> lits)
    : k_(k), n_(n), m_(k > 0 ? static_cast<int32_t>(lits.size()) / k : 0),
      lits_(std::move(lits)) {
  build_occurrence_index();
}

Instance Instance::generate(int32_t k, int32_t n, double alpha, uint64_t seed) {
  if (k < 2) throw std::invalid_argument("clause width must be at least 2");
  if (n < k) throw std::invalid_argument("need at least as many variables as the clause width");
  if (k > kMaxWidth) throw std::invalid_argument("clause width exceeds 255");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("clause density must be a finite nonnegative real");

  const int64_t m = std::llround(alpha * static_cast<double>(n));
  if (m * k > std::numeric_limits<int32_t>::max())
    throw std::invalid_argument("instance too large");

  Rng rng(seed);
  std::vector<Lit> lits;
  lits.reserve(static_cast<size_t>(m) * k);
  std::vector<uint8_t> picked(static_cast<size_t>(n) + 1, 0);
  std::vector<Var> vars(static_cast<size_t>(k));
  for (int64_t c = 0; c < m; ++c) {
    for (int32_t j = 0; j < k; ++j) {
      Var v;
      do {
        v = static_cast<Var>(rng.next_below(static_cast<uint64_t>(n))) + 1;
      } while (picked[v]);
      picked[v] = 1;
      vars[j] = v;
    }
    for (int32_t j = 0; j < k; ++j) lits.push_back(rng.next_bool() ? vars[j] : -vars[j]);
    for (int32_t j = 0; j < k; ++j) picked[vars[j]] = 0;
  }
  return Instance(n, k, std::move(lits));
}

Instance Instance::from_clauses(int32_t n, int32_t k, std::vector<Lit> flat_lits) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  if (k < 0 || k > kMaxWidth) throw std::invalid_argument("clause width out of range");
  if (flat_lits.empty()) return Instance(n, k, {});
  if (k < 1) throw std::invalid_argument("clause width out of range");
  if (flat_lits.size() % static_cast<size_t>(k) != 0)
    throw std::invalid_argument("literal list is not a multiple of the clause width");

  const size_t m = flat_lits.size() / k;
  for (size_t c = 0; c < m; ++c) {
    const Lit* cl = flat_lits.data() + c * k;
    for (int32_t i = 0; i < k; ++i) {
      const Var v = lit_var(cl[i]);
      if (cl[i] == 0 || v > n)
        throw std::invalid_argument("variable index out of range in clause " + std::to_string(c));
      for (int32_t j = 0; j < i; ++j)
        if (lit_var(cl[j]) == v)
          throw std::invalid_argument("repeated variable in clause " + std::to_string(c));
    }
  }
  return Instance(n, k, std::move(flat_lits));
}

void Instance::build_occurrence_index() {
  occ_start_.assign(static_cast<size_t>(2) * n_ + 1, 0);
  occ_list_.resize(lits_.size());
  for (Lit l : lits_) occ_start_[lit_code(l) + 1]++;
  for (size_t i = 1; i < occ_start_.size(); ++i) occ_start_[i] += occ_start_[i - 1];
  std::vector<int32_t> cursor(occ_start_.begin(), occ_start_.end() - 1);
  for (size_t i = 0; i < lits_.size(); ++i) {
    const ClauseId c = static_cast<ClauseId>(i / k_);
    occ_list_[cursor[lit_code(lits_[i])]++] = c;
  }
  advise_huge(lits_.data(), lits_.size() * sizeof(Lit));
  advise_huge(occ_list_.data(), occ_list_.size() * sizeof(ClauseId));
}

bool satisfies(const Instance& inst, const Assignment& a) {
  const int32_t k = inst.width();
  const auto& lits = inst.flat_literals();
  for (size_t i = 0; i < lits.size(); i += k) {
    bool sat = false;
    for (int32_t j = 0; j < k; ++j) {
      if (lit_true_under(lits[i + j], a)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace slslab
