#include "maxlin/kset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "maxlin/errors.hpp"
#include "maxlin/rational.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

VectorSet::VectorSet(std::size_t n, std::vector<F2Vector> vectors) : n_(n) {
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw DimensionMismatch(n, v.size());
    }
  }
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  vectors_ = std::move(vectors);
  lookup_.insert(vectors_.begin(), vectors_.end());
}

namespace {

void check_preconditions(const VectorSet& m, std::size_t k) {
  const std::size_t n = m.n();
  if (!m.contains(F2Vector(n))) {
    throw PreconditionError(Precondition::missing_zero_vector, "M must contain 0");
  }
  if (f2_rank(m.vectors(), n) != n) {
    throw PreconditionError(Precondition::not_spanning, "M must contain a basis of F2^n");
  }
  if (BigInt(m.size()) >= (BigInt(1) << n)) {
    throw PreconditionError(Precondition::full_space, "|M| must be below 2^n");
  }
  if (k < 1) {
    throw PreconditionError(Precondition::parameter_too_small, "k must be positive");
  }
  if (k + 1 > m.size()) {
    throw PreconditionError(Precondition::too_few_vectors,
                            "|M| = " + std::to_string(m.size()) + " < k+1");
  }
  if (!power_at_most_pow2(BigInt(m.size()), k, n)) {
    throw PreconditionError(Precondition::size_threshold, "|M|^k must not exceed 2^n");
  }
}

/// Invertible linear map on F2^d stored by rows: (T x)_i = <row_i, x>.
class Transform {
 public:
  explicit Transform(std::size_t d) {
    rows_.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      rows_.push_back(F2Vector::unit(d, i));
    }
  }

  F2Vector apply(const F2Vector& x) const {
    F2Vector y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].dot(x)) {
        y.set(i, true);
      }
    }
    return y;
  }

  /// Given T a_j = e_j for j < l and a outside span(a_0..a_{l-1}), composes
  /// elementary row operations so that additionally T a = e_l.
  void extend(const F2Vector& a, std::size_t l) {
    F2Vector y = apply(a);
    std::size_t pivot = y.suffix(l).lowest_set() + l;
    if (pivot >= rows_.size()) {
      throw InternalError("extension vector lies in the span of the current set");
    }
    std::swap(rows_[pivot], rows_[l]);
    y = apply(a);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != l && y.get(i)) {
        rows_[i] ^= rows_[l];
      }
    }
  }

 private:
  std::vector<F2Vector> rows_;
};

struct Element {
  F2Vector coords;     // in the current quotient
  std::size_t origin;  // index into the original (sorted) M
};

using SuffixCounts = std::unordered_map<F2Vector, std::size_t, F2VectorHash>;

SuffixCounts count_suffixes(const std::vector<Element>& elements, const Transform& t,
                            std::size_t l) {
  SuffixCounts counts;
  for (const auto& e : elements) {
    ++counts[t.apply(e.coords).suffix(l)];
  }
  return counts;
}

std::vector<F2Vector> find_pair(const VectorSet& m) {
  auto vs = m.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].is_zero()) {
      continue;
    }
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!m.contains(vs[i] ^ vs[j])) {
        return {vs[i], vs[j]};
      }
    }
  }
  throw InternalError("no pair with sum outside M although |M| < 2^n");
}

KsetResult find_greedy(const VectorSet& m, std::size_t k, std::size_t& dimension) {
  KsetResult result;
  std::vector<Element> elements;
  for (std::size_t i = 0; i < m.size(); ++i) {
    elements.push_back(Element{m.vectors()[i], i});
  }

  for (;;) {
    const std::size_t d = dimension;
    Transform t(d);
    std::vector<std::size_t> chosen;  // indices into elements
    SuffixCounts counts = count_suffixes(elements, t, 0);
    // Scan order is lexicographic on the coordinates this round started with;
    // `elements` is kept sorted on them.
    for (std::size_t idx = 0; idx < elements.size() && chosen.size() < k + 1; ++idx) {
      const F2Vector& a = elements[idx].coords;
      if (a.is_zero()) {
        continue;
      }
      const std::size_t l = chosen.size();
      F2Vector tail = t.apply(a).suffix(l);
      // a is admissible iff no other element of M agrees with it outside the
      // first l coordinates. 0 agrees with every a in span(L).
      if (tail.is_zero() || counts[tail] != 1) {
        continue;
      }
      t.extend(a, l);
      chosen.push_back(idx);
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (t.apply(elements[chosen[j]].coords) != F2Vector::unit(d, j)) {
          throw InternalError("change of basis does not send L to unit vectors");
        }
      }
      counts = count_suffixes(elements, t, chosen.size());
    }
    result.levels.push_back(KsetLevel{d, elements.size(), chosen.size()});

    if (chosen.size() == k + 1) {
      for (auto idx : chosen) {
        result.vectors.push_back(m.vectors()[elements[idx].origin]);
      }
      return result;
    }

    const std::size_t l = chosen.size();
    const std::size_t quotient_dim = d - l;
    if (quotient_dim <= k) {
      throw InternalError("quotient dimension " + std::to_string(quotient_dim) +
                          " dropped to k or below before a K-set was found");
    }
    // Elements arrive in increasing origin order, so the first preimage seen
    // for each class is the lexicographically smallest.
    std::map<F2Vector, std::size_t> classes;
    for (const auto& e : elements) {
      classes.try_emplace(t.apply(e.coords).suffix(l), e.origin);
    }
    if (2 * classes.size() > elements.size()) {
      throw InternalError("quotient set is larger than half the previous set");
    }
    std::vector<Element> next;
    next.reserve(classes.size());
    for (auto& [coords, origin] : classes) {
      next.push_back(Element{coords, origin});
    }
    elements = std::move(next);
    dimension = quotient_dim;
  }
}

}  // namespace

KsetResult find_kset_traced(const VectorSet& m, std::size_t k) {
  check_preconditions(m, k);
  KsetResult result;
  if (k == 1) {
    result.vectors = find_pair(m);
    result.levels.push_back(KsetLevel{m.n(), m.size(), 2});
  } else {
    std::size_t dimension = m.n();
    result = find_greedy(m, k, dimension);
  }
  if (!verify_kset(m, result.vectors)) {
    throw InternalError("constructed K-set fails verification");
  }
  return result;
}

std::vector<F2Vector> find_kset(const VectorSet& m, std::size_t k) {
  return find_kset_traced(m, k).vectors;
}

bool verify_kset(const VectorSet& m, std::span<const F2Vector> k) {
  if (k.size() > 40) {
    throw InvalidArgument("verify_kset enumerates 2^|K| sums; |K| is limited to 40");
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i].size() != m.n()) {
      throw DimensionMismatch(m.n(), k[i].size());
    }
    if (!m.contains(k[i])) {
      return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (k[i] == k[j]) {
        return false;
      }
    }
  }
  // Gray-code walk over all subsets; the running sum changes by one element
  // per step.
  F2Vector sum(m.n());
  std::uint64_t subset = 0;
  const std::uint64_t total = std::uint64_t{1} << k.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
    sum ^= k[bit];
    subset ^= std::uint64_t{1} << bit;
    if (std::popcount(subset) >= 2 && m.contains(sum)) {
      return false;
    }
  }
  return true;
}

}  // namespace maxlin
