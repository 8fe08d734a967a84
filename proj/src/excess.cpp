#include "maxlin/excess.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "maxlin/algorithm_h.hpp"
#include "maxlin/errors.hpp"
#include "maxlin/kset.hpp"

namespace maxlin {

const char* to_string(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::kset_marking: return "kset_marking";
    case WitnessMethod::marking: return "marking";
    case WitnessMethod::brute_force: return "brute_force";
  }
  return "unknown";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::empty: return "empty";
    case Regime::single_mark: return "single_mark";
    case Regime::lower_bound: return "lower_bound";
    case Regime::brute_force: return "brute_force";
  }
  return "unknown";
}

bool in_lower_bound_regime(std::size_t n, std::size_t m, std::size_t k) {
  return k >= 2 && m >= k && power_at_most_pow2(BigInt(m + 2), k - 1, n);
}

ExcessWitness lower_bound_assignment(const LinearSystem& sys, std::size_t k) {
  if (k < 2) {
    throw PreconditionError(Precondition::parameter_too_small, "k must be at least 2");
  }
  if (!is_irreducible(sys)) {
    throw PreconditionError(Precondition::not_irreducible,
                            "left-hand sides must be distinct and of full column rank");
  }
  if (sys.size() < k) {
    throw PreconditionError(Precondition::too_few_equations,
                            "m = " + std::to_string(sys.size()) + " < k = " + std::to_string(k));
  }
  if (!power_at_most_pow2(BigInt(sys.size() + 2), k - 1, sys.n())) {
    throw PreconditionError(Precondition::size_threshold, "(m+2)^(k-1) exceeds 2^n");
  }

  std::vector<F2Vector> lhs;
  std::unordered_map<F2Vector, EquationId, F2VectorHash> id_of;
  for (const auto& e : sys.equations()) {
    lhs.push_back(e.lhs);
    id_of.emplace(e.lhs, e.id);
  }
  lhs.push_back(F2Vector(sys.n()));
  std::vector<F2Vector> kset;
  try {
    kset = find_kset(VectorSet(sys.n(), std::move(lhs)), k - 1);
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("K-set search rejected a valid regime: ") + e.what());
  }

  std::vector<EquationId> ids;
  std::vector<Rational> weights;
  for (const auto& v : kset) {
    EquationId id = id_of.at(v);
    ids.push_back(id);
    weights.push_back(sys.find(id)->weight);
  }
  auto fallback = lowest_id_chooser();
  Chooser chooser = [&](const LinearSystem& current, std::size_t iteration) {
    if (iteration >= ids.size()) {
      return fallback(current, iteration);
    }
    // No equation of the K-set can be merged away or reweighted before its
    // turn; a violation means the K-set is wrong.
    const Equation* e = current.find(ids[iteration]);
    if (e == nullptr || e->weight != weights[iteration]) {
      throw InternalError("K-set equation was altered before it was marked");
    }
    return ids[iteration];
  };
  HRun run = run_h(sys, chooser);
  Assignment z = reconstruct(run.records, sys.n());
  Rational excess = evaluate(sys, z).excess;
  if (excess < run.marked_weight || excess < Rational(k) * sys.min_weight()) {
    throw InternalError("marking run did not reach the guaranteed excess");
  }
  return ExcessWitness{std::move(z), std::move(excess), WitnessMethod::kset_marking};
}

namespace {

template <typename Acc>
struct ChunkResult {
  Acc value{};
  std::uint64_t key = 0;
};

/// Enumerates all assignments over `n` variables (n <= 63). Assignment keys
/// put z_1 in the most significant bit, so numeric order on keys is
/// lexicographic order on 0/1 strings.
template <typename Acc>
std::pair<Acc, std::uint64_t> enumerate(std::size_t n, const std::vector<std::uint64_t>& masks,
                                        const std::vector<bool>& rhs,
                                        const std::vector<Acc>& weights, unsigned workers) {
  const std::size_t m = masks.size();
  std::vector<std::vector<std::size_t>> touching(n);
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((masks[e] >> (n - 1 - i)) & 1U) {
        touching[i].push_back(e);
      }
    }
  }

  std::size_t prefix_bits = 0;
  if (workers > 1) {
    prefix_bits = std::min<std::size_t>(n, static_cast<std::size_t>(std::bit_width(workers)) + 2);
  }
  const std::size_t low_bits = n - prefix_bits;
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  std::vector<ChunkResult<Acc>> results(chunks);

  auto run_chunk = [&](std::uint64_t chunk) {
    std::uint64_t key = chunk << low_bits;
    std::vector<Acc> contribution(m);
    Acc value{};
    for (std::size_t e = 0; e < m; ++e) {
      bool sat = ((std::popcount(masks[e] & key) & 1) != 0) == rhs[e];
      contribution[e] = sat ? weights[e] : Acc(-weights[e]);
      value += contribution[e];
    }
    ChunkResult<Acc> best{value, key};
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(t));
      key ^= std::uint64_t{1} << bit;
      for (auto e : touching[n - 1 - bit]) {
        value -= 2 * contribution[e];
        contribution[e] = -contribution[e];
      }
      if (value > best.value || (value == best.value && key < best.key)) {
        best = ChunkResult<Acc>{value, key};
      }
    }
    results[chunk] = std::move(best);
  };

  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      run_chunk(c);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
          run_chunk(c);
        }
      });
    }
  }

  ChunkResult<Acc> best = results.front();
  for (std::uint64_t c = 1; c < chunks; ++c) {
    const auto& r = results[c];
    if (r.value > best.value || (r.value == best.value && r.key < best.key)) {
      best = r;
    }
  }
  return {best.value, best.key};
}

}  // namespace

ExcessWitness brute_force_max_excess(const LinearSystem& sys, const OracleOptions& options) {
  const std::size_t n = sys.n();
  if (n > options.cap || n > 62) {
    throw PreconditionError(Precondition::oracle_cap_exceeded,
                            "n = " + std::to_string(n) + ", cap = " +
                                std::to_string(std::min<std::size_t>(options.cap, 62)));
  }

  // Scale weights to integers by the lcm of their denominators.
  BigInt scale = 1;
  for (const auto& e : sys.equations()) {
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(e.weight));
  }
  std::vector<BigInt> scaled;
  BigInt total = 0;
  std::vector<std::uint64_t> masks;
  std::vector<bool> rhs;
  for (const auto& e : sys.equations()) {
    BigInt w = boost::multiprecision::numerator(e.weight) *
               (scale / boost::multiprecision::denominator(e.weight));
    total += w;
    scaled.push_back(w);
    std::uint64_t mask = 0;
    for (auto i : e.lhs.support()) {
      mask |= std::uint64_t{1} << (n - 1 - i);
    }
    masks.push_back(mask);
    rhs.push_back(e.rhs);
  }

  BigInt best_value;
  std::uint64_t best_key = 0;
  if (total < (BigInt(1) << 61)) {
    std::vector<std::int64_t> w;
    for (const auto& s : scaled) {
      w.push_back(s.convert_to<std::int64_t>());
    }
    auto [value, key] = enumerate<std::int64_t>(n, masks, rhs, w, options.workers);
    best_value = value;
    best_key = key;
  } else {
    auto [value, key] = enumerate<BigInt>(n, masks, rhs, scaled, options.workers);
    best_value = value;
    best_key = key;
  }

  Assignment z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z.set(i, ((best_key >> (n - 1 - i)) & 1U) != 0);
  }
  return ExcessWitness{std::move(z), Rational(best_value, scale), WitnessMethod::brute_force};
}

AaDecision decide_aa(const AaInstance& inst, const OracleOptions& options) {
  if (!inst.system.all_weights_integral()) {
    throw NonIntegralWeight("the above-average question is defined for integral weights");
  }
  if (inst.k < 1) {
    throw PreconditionError(Precondition::parameter_too_small, "k must be positive");
  }
  const auto k = static_cast<std::size_t>(inst.k);
  Reduced reduced = make_irreducible(inst.system);
  const LinearSystem& sys = reduced.system;

  AaDecision out;
  out.reduced_n = sys.n();
  out.reduced_m = sys.size();
  ExcessWitness local;
  if (sys.empty()) {
    out.regime = Regime::empty;
    local = ExcessWitness{Assignment(sys.n()), 0, WitnessMethod::marking};
  } else if (in_lower_bound_regime(sys.n(), sys.size(), k)) {
    out.regime = Regime::lower_bound;
    local = lower_bound_assignment(sys, k);
  } else if (k == 1) {
    // A nonempty irreducible system always admits one mark of weight >= 1.
    out.regime = Regime::single_mark;
    HRun run = run_h(sys);
    Assignment z = reconstruct(run.records, sys.n());
    Rational excess = evaluate(sys, z).excess;
    local = ExcessWitness{std::move(z), std::move(excess), WitnessMethod::marking};
  } else {
    out.regime = Regime::brute_force;
    local = brute_force_max_excess(sys, options);
  }

  Assignment lifted = lift_assignment(reduced.transcript, local.assignment);
  Rational original_excess = evaluate(inst.system, lifted).excess;
  if (original_excess != local.excess) {
    throw InternalError("lifting changed the excess");
  }
  out.yes = local.excess >= Rational(inst.k);
  if ((out.regime == Regime::lower_bound || out.regime == Regime::single_mark) && !out.yes) {
    throw InternalError("guaranteed regime produced an excess below k");
  }
  out.witness = ExcessWitness{std::move(lifted), std::move(original_excess), local.method};
  return out;
}

}  // namespace maxlin
