#include "doctest.h"
#include "maxlin/errors.hpp"
#include "maxlin/excess.hpp"
#include "maxlin/reduce.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace maxlin;
using namespace maxlin::testing;

namespace {

Precondition failure(const std::function<void()>& call) {
  try {
    call();
  } catch (const PreconditionError& e) {
    return e.which();
  }
  FAIL("no precondition error");
  return Precondition::oracle_cap_exceeded;
}

}  // namespace

TEST_SUITE("lower bound") {
  TEST_CASE("three unit equations, k = 2") {
    LinearSystem sys = make_system(3, {{{1}, 0, 1}, {{2}, 0, 1}, {{3}, 0, 1}});
    ExcessWitness w = lower_bound_assignment(sys, 2);
    CHECK(w.excess >= 2);
    CHECK(w.excess == evaluate(sys, w.assignment).excess);
    CHECK(w.method == WitnessMethod::kset_marking);
    CHECK(oracle_max_excess(sys).max_excess == 3);
  }

  TEST_CASE("boundary case m = 2^n - 2") {
    LinearSystem sys = make_system(2, {{{1}, 0, 2}, {{2}, 0, 3}});
    ExcessWitness w = lower_bound_assignment(sys, 2);
    CHECK(w.excess >= 4);
    CHECK(evaluate(sys, Assignment(2)).excess == 5);
  }

  TEST_CASE("preconditions") {
    LinearSystem two = make_system(2, {{{1}, 0, 1}, {{2}, 0, 1}});
    CHECK(failure([&] { lower_bound_assignment(two, 3); }) == Precondition::too_few_equations);
    CHECK(failure([&] { lower_bound_assignment(two, 1); }) == Precondition::parameter_too_small);
    LinearSystem reducible = make_system(2, {{{1}, 0, 1}});
    CHECK(failure([&] { lower_bound_assignment(reducible, 2); }) == Precondition::not_irreducible);
    // m = 3, n = 2: 5 > 4.
    CHECK(failure([&] { lower_bound_assignment(three_equation_example(), 2); }) ==
          Precondition::size_threshold);
  }

  TEST_CASE("regime test is exact") {
    CHECK(in_lower_bound_regime(2, 2, 2));
    CHECK_FALSE(in_lower_bound_regime(2, 3, 2));
    CHECK(in_lower_bound_regime(20, 40, 2));
    CHECK_FALSE(in_lower_bound_regime(4, 1, 2));
    // (m+2)^3 against 2^12: 16^3 = 4096 fits, 17^3 does not.
    CHECK(in_lower_bound_regime(12, 14, 4));
    CHECK_FALSE(in_lower_bound_regime(12, 15, 4));
  }

  TEST_CASE("guarantee on random irreducible systems") {
    Rng rng(51);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t k = uniform(rng, 2, 3);
      std::size_t n = uniform(rng, 4, 14);
      std::size_t m_max = n;
      while (in_lower_bound_regime(n, m_max + 1, k) && m_max < 40) {
        ++m_max;
      }
      if (!in_lower_bound_regime(n, n, k)) {
        continue;
      }
      LinearSystem sys = random_irreducible(rng, n, uniform(rng, n, m_max), 5);
      ExcessWitness w = lower_bound_assignment(sys, k);
      Rational value = evaluate(sys, w.assignment).excess;
      CHECK(value == w.excess);
      CHECK(value >= k * sys.min_weight());
      CHECK(value <= oracle_max_excess(sys).max_excess);
      ++checked;
    }
    CHECK(checked > 50);
  }

  TEST_CASE("rational weights are accepted") {
    LinearSystem sys =
        make_system(3, {{{1}, 0, Rational(1, 3)}, {{2}, 1, Rational(5, 2)}, {{3}, 0, 1}});
    ExcessWitness w = lower_bound_assignment(sys, 2);
    CHECK(w.excess >= Rational(2, 3));
  }
}

TEST_SUITE("brute force") {
  TEST_CASE("examples") {
    LinearSystem pair = make_system(2, {{{1, 2}, 0, 1}, {{1, 2}, 1, 1}});
    CHECK(brute_force_max_excess(pair).excess == 0);
    ExcessWitness w = brute_force_max_excess(three_equation_example());
    CHECK(w.excess == 2);
    CHECK(w.assignment == bits("00"));
    CHECK(brute_force_max_excess(LinearSystem(3)).excess == 0);
    CHECK(brute_force_max_excess(LinearSystem(0)).excess == 0);
  }

  TEST_CASE("cap is enforced") {
    LinearSystem sys = make_system(5, {{{5}, 0, 1}});
    CHECK(failure([&] { brute_force_max_excess(sys, {4, 1}); }) == Precondition::oracle_cap_exceeded);
    CHECK(brute_force_max_excess(sys, {5, 1}).excess == 1);
  }

  TEST_CASE("lexicographically smallest maximiser") {
    // z2 = 1 alone: maximisers are 01 and 11 (z1 free); 01 is smaller.
    LinearSystem sys = make_system(2, {{{2}, 1, 1}});
    CHECK(brute_force_max_excess(sys).assignment == bits("01"));
  }

  TEST_CASE("agrees with the independent oracle for any worker count") {
    Rng rng(52);
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t n = uniform(rng, 1, 12);
      LinearSystem sys = random_system(rng, n, uniform(rng, 0, 20), 9);
      OracleResult expected = oracle_max_excess(sys);
      for (unsigned workers : {1U, 2U, 8U}) {
        ExcessWitness w = brute_force_max_excess(sys, {24, workers});
        CHECK(w.excess == expected.max_excess);
        CHECK(w.assignment == expected.argmax);
      }
    }
  }

  TEST_CASE("rational weights") {
    LinearSystem sys = make_system(2, {{{1}, 0, Rational(1, 3)}, {{1, 2}, 1, Rational(1, 2)}});
    CHECK(brute_force_max_excess(sys).excess == Rational(5, 6));
  }

  TEST_CASE("huge weights use the wide path") {
    Rational big(BigInt(1) << 70);
    LinearSystem sys = make_system(2, {{{1}, 0, big}, {{2}, 1, big}, {{1, 2}, 0, 1}});
    ExcessWitness w = brute_force_max_excess(sys);
    CHECK(w.excess == 2 * big - 1);
    CHECK(w.assignment == bits("01"));
  }
}

TEST_SUITE("decision") {
  TEST_CASE("pair system with k = 1 is a no") {
    LinearSystem pair = make_system(3, {{{1, 2}, 0, 1}, {{1, 2}, 1, 1}});
    AaDecision d = decide_aa({pair, 1});
    CHECK_FALSE(d.yes);
    CHECK(d.regime == Regime::empty);
    CHECK(d.witness.excess == 0);
    CHECK(d.witness.assignment.size() == 3);
  }

  TEST_CASE("single equation with k = 1 is a yes") {
    AaDecision d = decide_aa({make_system(2, {{{1}, 0, 1}}), 1});
    CHECK(d.yes);
    CHECK(d.regime == Regime::single_mark);
    CHECK(d.witness.assignment == bits("00"));
    CHECK(d.witness.excess >= 1);
  }

  TEST_CASE("small system beyond m goes to brute force") {
    AaDecision d = decide_aa({make_system(2, {{{1}, 0, 2}, {{2}, 0, 3}}), 4});
    CHECK(d.yes);
    CHECK(d.regime == Regime::brute_force);
    CHECK(d.witness.excess == 5);
  }

  TEST_CASE("lower-bound regime answers yes without enumeration") {
    LinearSystem sys(20);
    for (std::size_t i = 0; i < 20; ++i) {
      sys.add(F2Vector::unit(20, i), i % 2 == 1, 1);
    }
    AaDecision d = decide_aa({sys, 2}, {4, 1});
    CHECK(d.yes);
    CHECK(d.regime == Regime::lower_bound);
    CHECK(evaluate(sys, d.witness.assignment).excess == d.witness.excess);
  }

  TEST_CASE("argument checks") {
    LinearSystem frac = make_system(1, {{{1}, 0, Rational(1, 2)}});
    CHECK_THROWS_AS(decide_aa({frac, 1}), NonIntegralWeight);
    CHECK_THROWS_AS(decide_aa({three_equation_example(), 0}), PreconditionError);
  }

  TEST_CASE("agrees with the oracle and lifts witnesses exactly") {
    Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t n = uniform(rng, 1, 10);
      LinearSystem sys = random_system(rng, n, uniform(rng, 0, 16), 4, 0.35);
      std::int64_t k = static_cast<std::int64_t>(uniform(rng, 1, 6));
      AaDecision d = decide_aa({sys, k});
      Rational max = oracle_max_excess(sys).max_excess;
      CHECK(d.yes == (max >= k));
      CHECK(evaluate(sys, d.witness.assignment).excess == d.witness.excess);
      if (!d.yes) {
        CHECK(d.witness.excess == max);
      } else {
        CHECK(d.witness.excess >= k);
      }
      AaDecision again = decide_aa({sys, k}, {24, 8});
      CHECK(again.witness.assignment == d.witness.assignment);
    }
  }
}
