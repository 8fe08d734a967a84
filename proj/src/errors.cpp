#include "maxlin/errors.hpp"

namespace maxlin {

const char* to_string(Precondition p) {
  switch (p) {
    case Precondition::missing_zero_vector: return "vector set lacks the zero vector";
    case Precondition::not_spanning: return "vector set does not span the space";
    case Precondition::full_space: return "vector set is the whole space";
    case Precondition::too_few_vectors: return "vector set has fewer than k+1 elements";
    case Precondition::size_threshold: return "size threshold violated";
    case Precondition::parameter_too_small: return "parameter too small";
    case Precondition::not_irreducible: return "system is not irreducible";
    case Precondition::too_few_equations: return "fewer equations than the parameter";
    case Precondition::arity_exceeded: return "arity exceeds r";
    case Precondition::oracle_cap_exceeded: return "variable count exceeds the oracle cap";
  }
  return "unknown precondition";
}

}  // namespace maxlin
