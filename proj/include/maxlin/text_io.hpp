#pragma once

#include <iosfwd>
#include <string>

#include "maxlin/fourier.hpp"
#include "maxlin/kset.hpp"
#include "maxlin/reduce.hpp"
#include "maxlin/reductions.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

// All readers throw ParseError naming the 1-based line and the rule broken.
// Lines starting with 'c' are comments; blank lines are ignored.

/// `p maxlin <n> <m>` then m lines `<weight> <b> <t> <i1> ... <it>`.
/// Equations get ids 1..m in file order.
LinearSystem read_system(std::istream& in);
void write_system(std::ostream& out, const LinearSystem& sys);

/// Transcript as comment lines, starting with `c transcript`.
void write_transcript(std::ostream& out, const ReductionTranscript& tr);

/// `p fourier <n> <terms>`, `const <rational>`, then `<c> <t> <i1> ... <it>`.
FourierExpansion read_fourier(std::istream& in);
void write_fourier(std::ostream& out, const FourierExpansion& f);

/// `p vecset <n> <count>` then one 0/1 string of length n per line.
VectorSet read_vector_set(std::istream& in);

/// DIMACS CNF. Clauses may span lines and end with 0.
CnfFormula read_dimacs(std::istream& in);

/// `p csp <n> <count>`, then per constraint `<arity> <i1> ... <ir> <|V|>`
/// followed by |V| rows of arity entries in {-1, +1}.
CspInstance read_csp(std::istream& in);

std::string system_to_string(const LinearSystem& sys);
std::string fourier_to_string(const FourierExpansion& f);

}  // namespace maxlin
