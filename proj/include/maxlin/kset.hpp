#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "maxlin/f2vector.hpp"

namespace maxlin {

/// Deduplicated set of vectors in F2^n, kept in lexicographic order.
class VectorSet {
 public:
  VectorSet(std::size_t n, std::vector<F2Vector> vectors);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  std::span<const F2Vector> vectors() const noexcept { return vectors_; }
  bool contains(const F2Vector& v) const { return lookup_.contains(v); }

 private:
  std::size_t n_;
  std::vector<F2Vector> vectors_;
  std::unordered_set<F2Vector, F2VectorHash> lookup_;
};

/// What one round of the greedy phase saw. `dimension` and `set_size`
/// describe the (quotient) set the round ran on.
struct KsetLevel {
  std::size_t dimension = 0;
  std::size_t set_size = 0;
  std::size_t greedy_size = 0;
};

struct KsetResult {
  std::vector<F2Vector> vectors;
  std::vector<KsetLevel> levels;
};

/// Finds k+1 vectors of M such that no sum of two or more of them lies in M.
///
/// Requires: 0 in M, M spans F2^n, |M| < 2^n, k >= 1, k+1 <= |M| and
/// |M|^k <= 2^n. Each failed requirement raises PreconditionError with its
/// own code. For k = 1 the first pair (in lexicographic order) whose sum
/// leaves M is returned. For k > 1 a greedy phase grows a no-sum set L while
/// keeping a change of basis that sends L to the first unit vectors; when it
/// stalls the search continues on M modulo span(L), whose elements each keep
/// their lexicographically smallest preimage in M. The result is always
/// re-checked with verify_kset before it is returned.
std::vector<F2Vector> find_kset(const VectorSet& m, std::size_t k);
KsetResult find_kset_traced(const VectorSet& m, std::size_t k);

/// True iff K is a subset of M with distinct elements and no sum of two or
/// more elements of K is in M. At most 40 elements.
bool verify_kset(const VectorSet& m, std::span<const F2Vector> k);

}  // namespace maxlin
