#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "maxlin/system.hpp"

namespace maxlin {

/// Column j of the pre-step matrix equals the sum of the columns in
/// `dependency` (pre-step numbering, all surviving).
struct ColumnDeletion {
  std::size_t column = 0;
  std::vector<std::size_t> dependency;
};

/// One application of the rank rule: keep the leftmost-pivot independent
/// columns, renumbered densely in increasing order.
struct RankStep {
  std::size_t n_before = 0;
  std::vector<std::size_t> kept;
  std::vector<ColumnDeletion> deleted;
};

/// Equations sharing a left-hand side were replaced by one equation with a
/// fresh id, or removed entirely when their signed weights cancelled.
struct MergeRecord {
  std::vector<EquationId> merged;
  std::optional<EquationId> survivor;
  bool rhs = false;
  Rational weight;
};

struct MergeStep {
  std::vector<MergeRecord> merges;
};

using ReductionStep = std::variant<RankStep, MergeStep>;

struct ReductionTranscript {
  std::size_t original_n = 0;
  std::size_t reduced_n = 0;
  std::vector<ReductionStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  /// Original 0-based variable -> reduced index, or nullopt when deleted.
  std::vector<std::optional<std::size_t>> column_map() const;
  /// Every deleted variable in original numbering, in deletion order.
  std::vector<std::size_t> deleted_variables() const;
  std::vector<MergeRecord> merge_log() const;
};

struct Reduced {
  LinearSystem system;
  ReductionTranscript transcript;
};

/// Rank rule: drops every variable outside the leftmost-pivot column basis.
Reduced apply_rule1(const LinearSystem& sys);

/// Same-lhs rule. Groups are emitted at the position of their first member;
/// singleton groups keep their equation (and id) untouched.
LinearSystem apply_rule2(const LinearSystem& sys);
std::pair<LinearSystem, MergeStep> apply_rule2_logged(const LinearSystem& sys);

/// Alternates the same-lhs rule and the rank rule until neither changes the
/// system. The result has distinct left-hand sides and full column rank.
Reduced make_irreducible(const LinearSystem& sys);

bool is_irreducible(const LinearSystem& sys);
bool has_distinct_lhs(const LinearSystem& sys);

/// Maps an assignment of the reduced system to the original variables.
/// Deleted variables are set to 0; the excess is preserved exactly.
Assignment lift_assignment(const ReductionTranscript& tr, const Assignment& reduced);

/// Re-applies the recorded steps to `original`, without recomputing ranks or
/// groupings. Throws InvalidArgument if the transcript does not fit.
LinearSystem replay(const LinearSystem& original, const ReductionTranscript& tr);

}  // namespace maxlin
