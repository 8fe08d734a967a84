#include "maxlin/algorithm_h.hpp"

#include <algorithm>
#include <set>

#include "maxlin/errors.hpp"
#include "maxlin/reduce.hpp"

namespace maxlin {

Chooser lowest_id_chooser() {
  return [](const LinearSystem& current, std::size_t) {
    auto eqs = current.equations();
    return std::min_element(eqs.begin(), eqs.end(),
                            [](const Equation& a, const Equation& b) { return a.id < b.id; })
        ->id;
  };
}

Chooser sequence_chooser(std::vector<EquationId> sequence, Chooser fallback) {
  return [sequence = std::move(sequence), fallback = std::move(fallback)](
             const LinearSystem& current, std::size_t iteration) {
    if (iteration < sequence.size()) {
      return sequence[iteration];
    }
    return fallback(current, iteration);
  };
}

HStep h_step(const LinearSystem& sys, EquationId id, std::size_t iteration) {
  const Equation* chosen = sys.find(id);
  if (chosen == nullptr) {
    throw InvalidArgument("equation id " + std::to_string(id) + " is not in the system");
  }
  if (!has_distinct_lhs(sys)) {
    throw InvalidArgument("marking requires distinct left-hand sides; merge them first");
  }
  const Equation marked = *chosen;
  const std::size_t pinned = marked.lhs.lowest_set();

  LinearSystem substituted(sys.n(), sys.next_id());
  for (const auto& e : sys.equations()) {
    if (e.id == id) {
      continue;
    }
    if (!e.lhs.get(pinned)) {
      substituted.push(e);
      continue;
    }
    Equation replaced = add_lhs(marked, e);
    // A zero left-hand side would need two equal left-hand sides, which the
    // distinct-lhs requirement rules out.
    if (replaced.lhs.is_zero()) {
      throw InternalError("substitution produced an empty left-hand side");
    }
    substituted.push(std::move(replaced));
  }
  return HStep{apply_rule2(substituted), MarkRecord{marked, pinned, iteration}};
}

HRun run_h(const LinearSystem& sys, const Chooser& chooser) {
  HRun run{{}, 0};
  LinearSystem cur = apply_rule2(sys);
  while (!cur.empty()) {
    EquationId id = chooser(cur, run.records.size());
    HStep step = h_step(cur, id, run.records.size());
    run.marked_weight += step.record.marked.weight;
    run.records.push_back(std::move(step.record));
    cur = std::move(step.system);
  }
  return run;
}

Assignment reconstruct(std::span<const MarkRecord> records, std::size_t n) {
  Assignment z(n);
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const auto& lhs = it->marked.lhs;
    if (lhs.size() != n) {
      throw DimensionMismatch(n, lhs.size());
    }
    if (it->variable >= n || !lhs.get(it->variable)) {
      throw InvalidArgument("mark record " + std::to_string(it->iteration) +
                            ": marked variable is not in its equation");
    }
    bool rest = lhs.dot(z) != z.get(it->variable);
    z.set(it->variable, it->marked.rhs != rest);
  }
  return z;
}

bool verify_certificate(const LinearSystem& sys, const Certificate& cert, std::int64_t k) {
  if (!sys.all_weights_integral()) {
    throw NonIntegralWeight("certificate verification requires integral weights");
  }
  if (k >= 0 && cert.ids.size() > static_cast<std::uint64_t>(k)) {
    return false;
  }
  if (std::set<EquationId>(cert.ids.begin(), cert.ids.end()).size() != cert.ids.size()) {
    return false;
  }
  LinearSystem cur = apply_rule2(sys);
  Rational marked = 0;
  for (std::size_t i = 0; i < cert.ids.size(); ++i) {
    if (cur.find(cert.ids[i]) == nullptr) {
      return false;
    }
    HStep step = h_step(cur, cert.ids[i], i);
    marked += step.record.marked.weight;
    cur = std::move(step.system);
  }
  return marked >= k;
}

}  // namespace maxlin
