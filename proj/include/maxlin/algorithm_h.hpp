#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "maxlin/system.hpp"

namespace maxlin {

/// One iteration of the marking procedure: the equation as it stood when it
/// was marked, and the variable it pinned (its smallest support index).
struct MarkRecord {
  Equation marked;
  std::size_t variable = 0;
  std::size_t iteration = 0;
};

/// Picks the id of the equation to mark next from a nonempty system.
/// `iteration` counts marks made so far in the current run.
using Chooser = std::function<EquationId(const LinearSystem& current, std::size_t iteration)>;

Chooser lowest_id_chooser();
/// Marks `sequence[i]` at iteration i, then defers to `fallback`. The ids
/// must be present when their turn comes; run_h throws otherwise.
Chooser sequence_chooser(std::vector<EquationId> sequence, Chooser fallback = lowest_id_chooser());

struct HStep {
  LinearSystem system;
  MarkRecord record;
};

/// Marks equation `id`: removes it, adds it to every remaining equation that
/// contains its pinned variable, and merges equal left-hand sides.
/// Requires distinct left-hand sides; throws InvalidArgument when `id` is
/// absent or the requirement fails.
HStep h_step(const LinearSystem& sys, EquationId id, std::size_t iteration = 0);

struct HRun {
  std::vector<MarkRecord> records;
  Rational marked_weight;
};

/// Merges equal left-hand sides once, then marks until the system is empty.
HRun run_h(const LinearSystem& sys, const Chooser& chooser = lowest_id_chooser());

/// Back-substitution from the last record to the first. Unmarked variables
/// are 0; every marked equation is satisfied by the result.
Assignment reconstruct(std::span<const MarkRecord> records, std::size_t n);

/// Equation ids to mark, in order.
struct Certificate {
  std::vector<EquationId> ids;
};

/// Replays the certificate as a marking sequence on the system (after the
/// initial merge). Accepts iff the certificate has at most k distinct ids,
/// each is present at its turn, and the marked weight reaches k.
/// Throws NonIntegralWeight for non-integral weights.
bool verify_certificate(const LinearSystem& sys, const Certificate& cert, std::int64_t k);

}  // namespace maxlin
