#pragma once

#include <cstddef>
#include <cstdint>

#include "maxlin/reduce.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

enum class WitnessMethod {
  kset_marking,  // K-set-first marking run
  marking,       // lowest-id marking run
  brute_force,   // exhaustive enumeration
};

const char* to_string(WitnessMethod m);

struct ExcessWitness {
  Assignment assignment;
  Rational excess;
  WitnessMethod method = WitnessMethod::brute_force;
};

struct OracleOptions {
  std::size_t cap = 24;
  unsigned workers = 1;
};

/// Assignment with excess at least k * w_min for an irreducible system with
/// k <= m and (m+2)^(k-1) <= 2^n: marks the equations of a k-vector K-set
/// of {lhs} + {0} first, in the order found, then lowest id.
ExcessWitness lower_bound_assignment(const LinearSystem& sys, std::size_t k);

/// Exact maximum excess and the lexicographically smallest maximiser
/// (z_1 most significant). The result does not depend on `workers`.
ExcessWitness brute_force_max_excess(const LinearSystem& sys, const OracleOptions& options = {});

struct AaInstance {
  LinearSystem system;
  std::int64_t k = 1;
};

enum class Regime {
  empty,        // reduced to nothing: maximum excess is 0
  single_mark,  // k = 1 on a nonempty irreducible system
  lower_bound,  // m >= k >= 2 and (m+2)^(k-1) <= 2^n
  brute_force,  // n < (k-1) log2(m+2): enumerate
};

const char* to_string(Regime r);

struct AaDecision {
  bool yes = false;
  /// Always present, in the original variables. For a `no` it is a maximiser.
  ExcessWitness witness;
  Regime regime = Regime::empty;
  std::size_t reduced_n = 0;
  std::size_t reduced_m = 0;
};

/// Is the maximum excess at least k? Requires integral weights and k >= 1.
AaDecision decide_aa(const AaInstance& inst, const OracleOptions& options = {});

/// Regime of lower_bound_assignment on an irreducible system: m >= k and
/// (m+2)^(k-1) <= 2^n, evaluated exactly.
bool in_lower_bound_regime(std::size_t n, std::size_t m, std::size_t k);

}  // namespace maxlin
