#pragma once

#include <initializer_list>
#include <vector>

#include "maxlin/system.hpp"

namespace maxlin::testing {

struct Row {
  std::vector<std::size_t> vars;  // 1-based
  int rhs;
  Rational weight;
};

inline F2Vector lhs_of(std::size_t n, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> idx;
  for (auto v : vars) {
    idx.push_back(v - 1);
  }
  return F2Vector::from_indices(n, idx);
}

inline LinearSystem make_system(std::size_t n, std::initializer_list<Row> rows) {
  LinearSystem sys(n);
  for (const auto& row : rows) {
    sys.add(lhs_of(n, row.vars), row.rhs == 1, row.weight);
  }
  return sys;
}

/// {z1=0 w2, z2=0 w1, z1+z2=1 w1}, ids 1, 2, 3.
inline LinearSystem three_equation_example() {
  return make_system(2, {{{1}, 0, 2}, {{2}, 0, 1}, {{1, 2}, 1, 1}});
}

inline F2Vector bits(const char* s) { return F2Vector::from_string(s); }

}  // namespace maxlin::testing
