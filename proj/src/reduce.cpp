#include "maxlin/reduce.hpp"

#include <algorithm>
#include <unordered_map>

#include "maxlin/errors.hpp"

namespace maxlin {

namespace {

LinearSystem project_columns(const LinearSystem& sys, const std::vector<std::size_t>& kept) {
  LinearSystem out(kept.size(), sys.next_id());
  for (const auto& e : sys.equations()) {
    out.push(Equation{e.id, e.lhs.select(kept), e.rhs, e.weight});
  }
  out.reserve_ids_from(sys.next_id());
  return out;
}

}  // namespace

std::vector<std::optional<std::size_t>> ReductionTranscript::column_map() const {
  std::vector<std::optional<std::size_t>> map(original_n);
  for (std::size_t i = 0; i < original_n; ++i) {
    map[i] = i;
  }
  for (const auto& step : steps) {
    const auto* rank = std::get_if<RankStep>(&step);
    if (rank == nullptr) {
      continue;
    }
    std::vector<std::optional<std::size_t>> renumber(rank->n_before);
    for (std::size_t j = 0; j < rank->kept.size(); ++j) {
      renumber[rank->kept[j]] = j;
    }
    for (auto& m : map) {
      if (m) {
        m = renumber[*m];
      }
    }
  }
  return map;
}

std::vector<std::size_t> ReductionTranscript::deleted_variables() const {
  // Track which original variable each current column stands for.
  std::vector<std::size_t> current(original_n);
  for (std::size_t i = 0; i < original_n; ++i) {
    current[i] = i;
  }
  std::vector<std::size_t> out;
  for (const auto& step : steps) {
    const auto* rank = std::get_if<RankStep>(&step);
    if (rank == nullptr) {
      continue;
    }
    for (const auto& d : rank->deleted) {
      out.push_back(current[d.column]);
    }
    std::vector<std::size_t> next;
    for (auto k : rank->kept) {
      next.push_back(current[k]);
    }
    current = std::move(next);
  }
  return out;
}

std::vector<MergeRecord> ReductionTranscript::merge_log() const {
  std::vector<MergeRecord> out;
  for (const auto& step : steps) {
    if (const auto* merge = std::get_if<MergeStep>(&step)) {
      out.insert(out.end(), merge->merges.begin(), merge->merges.end());
    }
  }
  return out;
}

Reduced apply_rule1(const LinearSystem& sys) {
  Reduced out{sys, {sys.n(), sys.n(), {}}};
  RankInfo info = rank_and_basis(sys);
  if (info.rank == sys.n()) {
    return out;
  }
  RankStep step;
  step.n_before = sys.n();
  step.kept = info.independent_columns;
  for (std::size_t j = 0; j < sys.n(); ++j) {
    if (!std::binary_search(step.kept.begin(), step.kept.end(), j)) {
      step.deleted.push_back(ColumnDeletion{j, info.dependencies[j]});
    }
  }
  out.system = project_columns(sys, step.kept);
  out.transcript.reduced_n = step.kept.size();
  out.transcript.steps.emplace_back(std::move(step));
  return out;
}

std::pair<LinearSystem, MergeStep> apply_rule2_logged(const LinearSystem& sys) {
  std::unordered_map<F2Vector, std::size_t, F2VectorHash> group_of;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto [it, inserted] = group_of.try_emplace(sys[i].lhs, groups.size());
    if (inserted) {
      groups.emplace_back();
    }
    groups[it->second].push_back(i);
  }

  LinearSystem out(sys.n(), sys.next_id());
  MergeStep log;
  for (const auto& group : groups) {
    if (group.size() == 1) {
      out.push(sys[group.front()]);
      continue;
    }
    Rational signed_weight = 0;
    MergeRecord record;
    for (auto i : group) {
      const auto& e = sys[i];
      record.merged.push_back(e.id);
      signed_weight += e.rhs ? Rational(-e.weight) : e.weight;
    }
    if (signed_weight != 0) {
      record.rhs = signed_weight < 0;
      record.weight = record.rhs ? Rational(-signed_weight) : signed_weight;
      record.survivor = out.add(sys[group.front()].lhs, record.rhs, record.weight);
    }
    log.merges.push_back(std::move(record));
  }
  return {std::move(out), std::move(log)};
}

LinearSystem apply_rule2(const LinearSystem& sys) { return apply_rule2_logged(sys).first; }

Reduced make_irreducible(const LinearSystem& sys) {
  Reduced cur{sys, {sys.n(), sys.n(), {}}};
  for (;;) {
    auto [merged, log] = apply_rule2_logged(cur.system);
    bool changed = !log.merges.empty();
    if (changed) {
      cur.system = std::move(merged);
      cur.transcript.steps.emplace_back(std::move(log));
    }
    Reduced ranked = apply_rule1(cur.system);
    if (!ranked.transcript.empty()) {
      changed = true;
      cur.system = std::move(ranked.system);
      cur.transcript.reduced_n = ranked.transcript.reduced_n;
      for (auto& step : ranked.transcript.steps) {
        cur.transcript.steps.push_back(std::move(step));
      }
    }
    if (!changed) {
      return cur;
    }
  }
}

bool has_distinct_lhs(const LinearSystem& sys) {
  std::unordered_map<F2Vector, int, F2VectorHash> seen;
  for (const auto& e : sys.equations()) {
    if (!seen.try_emplace(e.lhs, 0).second) {
      return false;
    }
  }
  return true;
}

bool is_irreducible(const LinearSystem& sys) {
  return has_distinct_lhs(sys) && rank_and_basis(sys).rank == sys.n();
}

Assignment lift_assignment(const ReductionTranscript& tr, const Assignment& reduced) {
  if (reduced.size() != tr.reduced_n) {
    throw DimensionMismatch(tr.reduced_n, reduced.size());
  }
  Assignment cur = reduced;
  for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it) {
    const auto* rank = std::get_if<RankStep>(&*it);
    if (rank == nullptr) {
      continue;
    }
    Assignment prev(rank->n_before);
    for (std::size_t j = 0; j < rank->kept.size(); ++j) {
      prev.set(rank->kept[j], cur.get(j));
    }
    cur = std::move(prev);
  }
  return cur;
}

LinearSystem replay(const LinearSystem& original, const ReductionTranscript& tr) {
  if (original.n() != tr.original_n) {
    throw DimensionMismatch(tr.original_n, original.n());
  }
  LinearSystem cur = original;
  for (const auto& step : tr.steps) {
    if (const auto* rank = std::get_if<RankStep>(&step)) {
      if (rank->n_before != cur.n()) {
        throw InvalidArgument("transcript rank step does not match the system dimension");
      }
      cur = project_columns(cur, rank->kept);
      continue;
    }
    const auto& merges = std::get<MergeStep>(step).merges;
    std::unordered_map<EquationId, std::size_t> record_of;
    for (std::size_t r = 0; r < merges.size(); ++r) {
      for (auto id : merges[r].merged) {
        record_of[id] = r;
      }
    }
    LinearSystem next(cur.n(), cur.next_id());
    std::vector<bool> emitted(merges.size(), false);
    for (const auto& e : cur.equations()) {
      auto it = record_of.find(e.id);
      if (it == record_of.end()) {
        next.push(e);
        continue;
      }
      const auto& record = merges[it->second];
      if (emitted[it->second]) {
        continue;
      }
      emitted[it->second] = true;
      if (record.survivor) {
        next.push(Equation{*record.survivor, e.lhs, record.rhs, record.weight});
      }
    }
    if (std::find(emitted.begin(), emitted.end(), false) != emitted.end()) {
      throw InvalidArgument("transcript merges equations absent from the system");
    }
    next.reserve_ids_from(cur.next_id());
    cur = std::move(next);
  }
  return cur;
}

}  // namespace maxlin
