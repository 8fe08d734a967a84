#include "doctest.h"
#include "maxlin/errors.hpp"
#include "maxlin/reductions.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace maxlin;
using namespace maxlin::testing;

namespace {

Clause clause(std::initializer_list<int> lits) {
  Clause c;
  for (int l : lits) {
    c.push_back(Literal{static_cast<std::size_t>(std::abs(l) - 1), l < 0});
  }
  return c;
}

/// Largest number of simultaneously satisfied clauses, counted directly.
std::size_t oracle_max_clauses(const CnfFormula& f) {
  std::size_t best = 0;
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << f.n); ++p) {
    std::size_t s = 0;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (const auto& lit : c) {
        bool is_true = ((p >> lit.var) & 1U) != 0;
        sat |= is_true != lit.negated;
      }
      s += sat ? 1 : 0;
    }
    best = std::max(best, s);
  }
  return best;
}

FourierExpansion poly(std::size_t n, std::initializer_list<std::pair<Subset, int>> terms,
                      Rational constant = 0) {
  FourierExpansion f(n, constant);
  for (const auto& [s, c] : terms) {
    f.add(s, c);
  }
  return f;
}

}  // namespace

TEST_SUITE("sat") {
  TEST_CASE("single clause expansion") {
    CnfFormula f{2, {clause({1, 2})}};
    CHECK(sat_to_fourier(f, 2) == poly(2, {{{0}, -1}, {{1}, -1}, {{0, 1}, -1}}));
  }

  TEST_CASE("complementary clauses cancel linear terms") {
    CnfFormula f{2, {clause({1, 2}), clause({-1, -2})}};
    CHECK(sat_to_fourier(f, 2) == poly(2, {{{0, 1}, -2}}));
  }

  TEST_CASE("all-negated clause flips every sign") {
    CnfFormula f{2, {clause({-1, -2})}};
    CHECK(sat_to_fourier(f, 2) == poly(2, {{{0}, 1}, {{1}, 1}, {{0, 1}, -1}}));
  }

  TEST_CASE("identity examples") {
    CnfFormula f{2, {clause({1, 2})}};
    SatIdentity a = sat_satisfied_count_identity(f, 2, std::vector<int>{-1, -1});
    CHECK(a.satisfied == 1);
    CHECK(a.g_value == 1);
    SatIdentity b = sat_satisfied_count_identity(f, 2, std::vector<int>{1, 1});
    CHECK(b.satisfied == 0);
    CHECK(b.g_value == -3);
    SatIdentity e = sat_satisfied_count_identity(CnfFormula{3, {}}, 2, std::vector<int>{1, 1, 1});
    CHECK(e.satisfied == 0);
    CHECK(e.g_value == 0);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(validate_exact(CnfFormula{2, {clause({1})}}, 2), PreconditionError);
    CHECK_THROWS_AS(validate_exact(CnfFormula{2, {clause({1, -1})}}, 2), InvalidArgument);
    CHECK_THROWS_AS(validate_exact(CnfFormula{2, {clause({1, 3})}}, 2), InvalidArgument);
  }

  TEST_CASE("decision examples") {
    CnfFormula one{2, {clause({1, 2})}};
    SatDecision d = decide_sat_aa(one, 2, 1);
    CHECK(d.yes);
    CHECK(d.satisfied == 1);
    CHECK((d.truth[0] || d.truth[1]));

    CnfFormula twice{2, {clause({1, 2}), clause({1, 2})}};
    CHECK(decide_sat_aa(twice, 2, 2).yes);
    CHECK_FALSE(decide_sat_aa(one, 2, 2).yes);
  }

  TEST_CASE("identity holds at every point of random formulas") {
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = uniform(rng, 2, 3);
      std::size_t n = uniform(rng, r, 8);
      CnfFormula f = random_exact_cnf(rng, n, uniform(rng, 0, 15), r);
      FourierExpansion g = sat_to_fourier(f, r);
      CHECK(g.degree() <= r);
      const Rational m(f.clauses.size());
      for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
        std::vector<int> x = point_of(n, p);
        std::size_t s = count_satisfied(f, x);
        CHECK(eval_fourier(g, x) == m - (m - s) * (std::size_t{1} << r));
      }
    }
  }

  TEST_CASE("decision matches clause counting") {
    Rng rng(72);
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t r = uniform(rng, 2, 3);
      std::size_t n = uniform(rng, r, 9);
      CnfFormula f = random_exact_cnf(rng, n, uniform(rng, 1, 14), r);
      std::size_t best = oracle_max_clauses(f);
      const std::size_t scale = std::size_t{1} << r;
      for (std::int64_t k = 1; k <= 8; ++k) {
        bool expected = scale * best >= (scale - 1) * f.clauses.size() + static_cast<std::size_t>(k);
        SatDecision d = decide_sat_aa(f, r, k);
        CHECK(d.yes == expected);
      }
    }
  }
}

TEST_SUITE("csp") {
  TEST_CASE("single-literal constraint") {
    CspInstance inst{1, {CspConstraint{{0}, {{-1}}}}};
    CHECK(csp_to_fourier(inst, 1) == poly(1, {{{0}, -1}}));
    CHECK(csp_average_satisfied(inst) == Rational(1, 2));
    CspIdentity id = csp_satisfied_count_identity(inst, 1, std::vector<int>{-1});
    CHECK(id.satisfied == 1);
    CHECK(id.h_value == 1);
  }

  TEST_CASE("vacuous constraint expands to zero") {
    CspInstance inst{1, {CspConstraint{{0}, {{-1}, {1}}}}};
    FourierExpansion h = csp_to_fourier(inst, 1);
    CHECK(h.family_size() == 0);
    CHECK(h.constant() == 0);
    CHECK(csp_average_satisfied(inst) == 1);
  }

  TEST_CASE("a clause written as a constraint matches the clause expansion") {
    // (x1 or not x3): every tuple except x1 false (+1), x3 true (-1).
    CnfFormula f{3, {clause({1, -3})}};
    CspInstance inst{3, {CspConstraint{{0, 2}, {{-1, -1}, {-1, 1}, {1, 1}}}}};
    FourierExpansion h = csp_to_fourier(inst, 2);
    CHECK(h == sat_to_fourier(f, 2));
  }

  TEST_CASE("lower arity constraints are scaled up") {
    CspInstance inst{2, {CspConstraint{{1}, {{1}}}}};
    // 2^(2-1) [(1 + x2) - 1] = 2 x2.
    CHECK(csp_to_fourier(inst, 2) == poly(2, {{{1}, 2}}));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(validate_csp(CspInstance{2, {CspConstraint{{0, 1}, {{1, 1}}}}}, 1),
                    PreconditionError);
    CHECK_THROWS_AS(validate_csp(CspInstance{2, {CspConstraint{{0}, {}}}}, 1), InvalidArgument);
    CHECK_THROWS_AS(validate_csp(CspInstance{2, {CspConstraint{{0}, {{0}}}}}, 1), InvalidArgument);
    CHECK_THROWS_AS(validate_csp(CspInstance{2, {CspConstraint{{0}, {{1}, {1}}}}}, 1),
                    InvalidArgument);
  }

  TEST_CASE("identity at every point of random instances") {
    Rng rng(73);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = uniform(rng, 1, 7);
      std::size_t r = uniform(rng, 1, 3);
      CspInstance inst = random_csp(rng, n, uniform(rng, 0, 6), r);
      FourierExpansion h = csp_to_fourier(inst, r);
      CHECK(h.degree() <= r);
      Rational e = csp_average_satisfied(inst);
      for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
        std::vector<int> x = point_of(n, p);
        Rational s(count_satisfied(inst, x));
        CHECK(eval_fourier(h, x) == (s - e) * (std::size_t{1} << r));
      }
    }
  }
}

TEST_SUITE("kernel") {
  TEST_CASE("large sparse system answers yes") {
    LinearSystem sys(20);
    for (std::size_t i = 0; i < 20; ++i) {
      sys.add(F2Vector::unit(20, i), false, 1);
    }
    for (std::size_t i = 0; i + 1 < 20; ++i) {
      sys.add(F2Vector::from_indices(20, {i, i + 1}), true, 2);
    }
    KernelOutcome out = kernelize_rlin(sys, 2, 2);
    CHECK(out.yes);
    REQUIRE(out.witness.has_value());
    CHECK(evaluate(sys, out.witness->assignment).excess >= 2);
  }

  TEST_CASE("dense small system returns the reduced system") {
    LinearSystem sys = make_system(2, {{{1}, 0, 1}, {{2}, 0, 1}, {{1, 2}, 1, 1}, {{1}, 0, 1}});
    KernelOutcome out = kernelize_rlin(sys, 2, 2);
    CHECK_FALSE(out.yes);
    CHECK(out.kernel == make_irreducible(sys).system);
  }

  TEST_CASE("too few equations falls to the kernel branch") {
    LinearSystem sys = make_system(8, {{{1}, 0, 1}, {{2}, 0, 1}});
    KernelOutcome out = kernelize_rlin(sys, 1, 3);
    CHECK_FALSE(out.yes);
    CHECK(out.kernel.size() == 2);
  }

  TEST_CASE("argument checks") {
    LinearSystem wide = make_system(3, {{{1, 2, 3}, 0, 1}});
    CHECK_THROWS_AS(kernelize_rlin(wide, 2, 2), PreconditionError);
    CHECK_THROWS_AS(kernelize_rlin(wide, 3, 1), PreconditionError);
    CHECK_THROWS_AS(kernelize_rlin(make_system(1, {{{1}, 0, Rational(1, 2)}}), 1, 2),
                    NonIntegralWeight);
  }

  TEST_CASE("kernel preserves the answer") {
    Rng rng(74);
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t n = uniform(rng, 2, 10);
      std::size_t r = uniform(rng, 2, 3);
      LinearSystem sys(n);
      std::size_t m = uniform(rng, 1, 18);
      for (std::size_t e = 0; e < m; ++e) {
        sys.add(random_bounded(rng, n, r), uniform(rng, 0, 1) == 1, Rational(uniform(rng, 1, 3)));
      }
      std::int64_t k = static_cast<std::int64_t>(uniform(rng, 2, 5));
      KernelOutcome out = kernelize_rlin(sys, r, k);
      Rational max = oracle_max_excess(sys).max_excess;
      CHECK(out.kernel.max_arity() <= r);
      if (out.yes) {
        CHECK(max >= k);
        CHECK(evaluate(sys, out.witness->assignment).excess >= k);
      } else {
        CHECK((oracle_max_excess(out.kernel).max_excess >= k) == (max >= k));
      }
    }
  }
}
