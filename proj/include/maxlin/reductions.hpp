#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxlin/excess.hpp"
#include "maxlin/fourier.hpp"
#include "maxlin/reduce.hpp"

namespace maxlin {

// Truth convention for SAT and CSP instances: x_i = -1 means true.

struct Literal {
  std::size_t var = 0;  // 0-based
  bool negated = false;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t n = 0;
  std::vector<Clause> clauses;
};

/// Checks that every clause has exactly r literals on distinct variables < n.
void validate_exact(const CnfFormula& f, std::size_t r);

/// Expansion of  sum_C [1 - prod_{x_i in C} (1 + eps_i x_i)],  eps_i = 1 for a
/// positive literal and -1 for a negated one.
FourierExpansion sat_to_fourier(const CnfFormula& f, std::size_t r);

bool clause_satisfied(const Clause& c, std::span<const int> x);
std::size_t count_satisfied(const CnfFormula& f, std::span<const int> x);

struct SatIdentity {
  std::size_t satisfied = 0;
  Rational g_value;
};

/// Counts satisfied clauses at x and evaluates the expansion there. Throws
/// InternalError unless g = m - (m - s) 2^r.
SatIdentity sat_satisfied_count_identity(const CnfFormula& f, std::size_t r,
                                         std::span<const int> x);

struct SatDecision {
  bool yes = false;
  /// Indexed by variable; true means the variable is set true (x_i = -1).
  std::vector<bool> truth;
  std::size_t satisfied = 0;
  AaDecision linear;
};

/// Can at least (1 - 2^-r) m + k 2^-r clauses be satisfied? Decided through
/// the associated weighted system; the returned assignment is re-checked by
/// counting clauses.
SatDecision decide_sat_aa(const CnfFormula& f, std::size_t r, std::int64_t k,
                          const OracleOptions& options = {});

struct CspConstraint {
  std::vector<std::size_t> vars;  // 0-based, distinct
  /// Satisfying tuples over {-1,+1}, one entry per variable in `vars`.
  std::vector<std::vector<int>> satisfying;
};

struct CspInstance {
  std::size_t n = 0;
  std::vector<CspConstraint> constraints;
};

void validate_csp(const CspInstance& inst, std::size_t r);

/// Expansion of  sum_f 2^{r - r(f)} sum_{v in V_f} [prod_j (1 + x_{i_j} v_j) - 1].
FourierExpansion csp_to_fourier(const CspInstance& inst, std::size_t r);

/// E = sum_f |V_f| 2^{-r(f)}, the expected number of satisfied constraints
/// under a uniform assignment.
Rational csp_average_satisfied(const CspInstance& inst);
std::size_t count_satisfied(const CspInstance& inst, std::span<const int> x);

struct CspIdentity {
  std::size_t satisfied = 0;
  Rational h_value;
  Rational average;
};

/// Throws InternalError unless h = 2^r (s - E) at x.
CspIdentity csp_satisfied_count_identity(const CspInstance& inst, std::size_t r,
                                         std::span<const int> x);

struct KernelOutcome {
  bool yes = false;
  /// Present on `yes`, in the original variables.
  std::optional<ExcessWitness> witness;
  /// The irreducible system; the kernel when `yes` is false.
  LinearSystem kernel;
  std::int64_t k = 0;
  ReductionTranscript transcript;
};

/// Reduces a system with at most r variables per equation. Answers yes when
/// the reduced system is in the lower-bound regime, otherwise returns the
/// reduced system as the kernel.
KernelOutcome kernelize_rlin(const LinearSystem& sys, std::size_t r, std::int64_t k);

}  // namespace maxlin
