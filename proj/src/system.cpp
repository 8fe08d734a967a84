#include "maxlin/system.hpp"

#include <algorithm>

#include "maxlin/errors.hpp"

namespace maxlin {

void LinearSystem::check(const F2Vector& lhs, const Rational& weight) const {
  if (lhs.size() != n_) {
    throw DimensionMismatch(n_, lhs.size());
  }
  if (lhs.is_zero()) {
    throw InvalidArgument("equation has an empty left-hand side");
  }
  if (weight <= 0) {
    throw InvalidArgument("equation weight must be positive");
  }
}

EquationId LinearSystem::add(F2Vector lhs, bool rhs, Rational weight) {
  check(lhs, weight);
  EquationId id = next_id_++;
  index_.emplace(id, equations_.size());
  equations_.push_back(Equation{id, std::move(lhs), rhs, std::move(weight)});
  return id;
}

void LinearSystem::push(Equation eq) {
  check(eq.lhs, eq.weight);
  if (!index_.emplace(eq.id, equations_.size()).second) {
    throw InvalidArgument("duplicate equation id " + std::to_string(eq.id));
  }
  next_id_ = std::max(next_id_, eq.id + 1);
  equations_.push_back(std::move(eq));
}

const Equation* LinearSystem::find(EquationId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &equations_[it->second];
}

Rational LinearSystem::total_weight() const {
  Rational total = 0;
  for (const auto& e : equations_) {
    total += e.weight;
  }
  return total;
}

Rational LinearSystem::min_weight() const {
  if (equations_.empty()) {
    throw InvalidArgument("minimum weight of an empty system");
  }
  Rational best = equations_.front().weight;
  for (const auto& e : equations_) {
    best = std::min(best, e.weight);
  }
  return best;
}

bool LinearSystem::all_weights_integral() const {
  return std::all_of(equations_.begin(), equations_.end(),
                     [](const Equation& e) { return is_integral(e.weight); });
}

std::size_t LinearSystem::max_arity() const {
  std::size_t r = 0;
  for (const auto& e : equations_) {
    r = std::max(r, e.lhs.popcount());
  }
  return r;
}

bool operator==(const LinearSystem& a, const LinearSystem& b) {
  if (a.n_ != b.n_ || a.equations_.size() != b.equations_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.equations_.size(); ++i) {
    if (!a.equations_[i].same_content(b.equations_[i])) {
      return false;
    }
  }
  return true;
}

Equation add_lhs(const Equation& marked, const Equation& replaced) {
  if (marked.lhs.size() != replaced.lhs.size()) {
    throw DimensionMismatch(replaced.lhs.size(), marked.lhs.size());
  }
  Equation out = replaced;
  out.lhs ^= marked.lhs;
  out.rhs = marked.rhs != replaced.rhs;
  return out;
}

bool satisfies(const Equation& eq, const Assignment& a) { return eq.lhs.dot(a) == eq.rhs; }

Evaluation evaluate(const LinearSystem& sys, const Assignment& a) {
  if (a.size() != sys.n()) {
    throw DimensionMismatch(sys.n(), a.size());
  }
  Evaluation out{0, 0, 0};
  for (const auto& e : sys.equations()) {
    if (satisfies(e, a)) {
      out.satisfied += e.weight;
    } else {
      out.falsified += e.weight;
    }
  }
  out.excess = out.satisfied - out.falsified;
  return out;
}

namespace {

struct Echelon {
  std::vector<F2Vector> rows;  // reduced row echelon form, pivot rows first
  std::vector<std::size_t> pivots;
};

Echelon reduce_rows(std::vector<F2Vector> rows, std::size_t n) {
  Echelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < rows.size() && !rows[pick].get(col)) {
      ++pick;
    }
    if (pick == rows.size()) {
      continue;
    }
    std::swap(rows[next], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) {
        rows[r] ^= rows[next];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

RankInfo rank_and_basis(const LinearSystem& sys) {
  std::vector<F2Vector> rows;
  rows.reserve(sys.size());
  for (const auto& e : sys.equations()) {
    rows.push_back(e.lhs);
  }
  Echelon ech = reduce_rows(std::move(rows), sys.n());

  RankInfo info;
  info.rank = ech.pivots.size();
  info.independent_columns = ech.pivots;
  info.dependencies.assign(sys.n(), {});
  std::vector<bool> is_pivot(sys.n(), false);
  for (auto p : ech.pivots) {
    is_pivot[p] = true;
  }
  // In reduced echelon form a non-pivot column j equals the sum of the unit
  // pivot columns of the rows holding a 1 at j; row operations preserve
  // column relations, so the same holds in the original matrix.
  for (std::size_t j = 0; j < sys.n(); ++j) {
    if (is_pivot[j]) {
      continue;
    }
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      if (ech.rows[r].get(j)) {
        info.dependencies[j].push_back(ech.pivots[r]);
      }
    }
  }
  return info;
}

std::size_t f2_rank(std::span<const F2Vector> rows, std::size_t n) {
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw DimensionMismatch(n, r.size());
    }
  }
  return reduce_rows(std::vector<F2Vector>(rows.begin(), rows.end()), n).pivots.size();
}

}  // namespace maxlin
