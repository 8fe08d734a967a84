#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "maxlin/f2vector.hpp"
#include "maxlin/rational.hpp"

namespace maxlin {

using EquationId = std::uint64_t;

/// One weighted equation  sum_{i in lhs} z_i = rhs.
struct Equation {
  EquationId id = 0;
  F2Vector lhs;
  bool rhs = false;
  Rational weight;

  bool same_content(const Equation& other) const {
    return lhs == other.lhs && rhs == other.rhs && weight == other.weight;
  }
};

/// Assignment z_1..z_n stored as an F2 vector (coordinate i is z_{i+1}).
using Assignment = F2Vector;

/// Weighted system Az = b over F2.
///
/// Equation ids are unique within a system and never reused: `next_id()` is
/// strictly greater than every id the system (or any system it was derived
/// from) has handed out. Derived systems inherit the counter so merged
/// equations receive fresh, reproducible ids.
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::size_t n, EquationId first_id = 1) : n_(n), next_id_(first_id) {}

  /// Appends an equation with a fresh id. The weight must be positive and the
  /// left-hand side nonzero with dimension n().
  EquationId add(F2Vector lhs, bool rhs, Rational weight);
  /// Appends an equation keeping its id, which must not be present already.
  void push(Equation eq);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return equations_.size(); }
  bool empty() const noexcept { return equations_.empty(); }
  EquationId next_id() const noexcept { return next_id_; }
  void reserve_ids_from(EquationId id) { next_id_ = std::max(next_id_, id); }

  std::span<const Equation> equations() const noexcept { return equations_; }
  const Equation& operator[](std::size_t i) const { return equations_[i]; }

  const Equation* find(EquationId id) const;

  Rational total_weight() const;
  /// Smallest weight; throws InvalidArgument on an empty system.
  Rational min_weight() const;
  bool all_weights_integral() const;
  std::size_t max_arity() const;

  /// Same n and the same (lhs, rhs, weight) sequence. Ids are bookkeeping
  /// and do not take part.
  friend bool operator==(const LinearSystem& a, const LinearSystem& b);

 private:
  void check(const F2Vector& lhs, const Rational& weight) const;

  std::size_t n_ = 0;
  EquationId next_id_ = 1;
  std::vector<Equation> equations_;
  std::unordered_map<EquationId, std::size_t> index_;
};

/// Sum of two equations: lhs and rhs are XORed, id and weight come from
/// `replaced`.
Equation add_lhs(const Equation& marked, const Equation& replaced);

struct Evaluation {
  Rational satisfied;
  Rational falsified;
  Rational excess;
};

bool satisfies(const Equation& eq, const Assignment& a);
Evaluation evaluate(const LinearSystem& sys, const Assignment& a);

struct RankInfo {
  std::size_t rank = 0;
  /// Leftmost-pivot independent columns, 0-based and increasing.
  std::vector<std::size_t> independent_columns;
  /// For every column j not in independent_columns, the independent columns
  /// whose sum equals column j. Indexed by column; empty for pivot columns.
  std::vector<std::vector<std::size_t>> dependencies;
};

RankInfo rank_and_basis(const LinearSystem& sys);
/// Rank of the matrix whose rows are `rows`, all of dimension n.
std::size_t f2_rank(std::span<const F2Vector> rows, std::size_t n);

}  // namespace maxlin
