#include <sstream>

#include "doctest.h"
#include "maxlin/errors.hpp"
#include "maxlin/reduce.hpp"
#include "maxlin/text_io.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace maxlin;
using namespace maxlin::testing;

namespace {

template <typename F>
std::size_t parse_error_line(const std::string& text, F reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("input parsed: " << text);
  return 0;
}

LinearSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return read_system(in);
}

}  // namespace

TEST_SUITE("system format") {
  TEST_CASE("reads weights, right-hand sides and comments") {
    LinearSystem sys = parse_system(
        "c example\n"
        "p maxlin 2 3\n"
        "2 0 1 1\n"
        "\n"
        "1 0 1 2\n"
        "c trailing comment\n"
        "1 1 2 1 2\n");
    CHECK(sys == three_equation_example());
    CHECK(sys[2].id == 3);
  }

  TEST_CASE("writes the canonical form") {
    LinearSystem sys = make_system(3, {{{1, 3}, 1, Rational(3, 4)}, {{2}, 0, 5}});
    CHECK(system_to_string(sys) == "p maxlin 3 2\n3/4 1 2 1 3\n5 0 1 2\n");
  }

  TEST_CASE("errors name the offending line") {
    auto reader = [](std::istream& in) { (void)read_system(in); };
    CHECK(parse_error_line("p maxlin 2\n", reader) == 1);
    CHECK(parse_error_line("p maxlin 2 1\n0.5 0 1 1\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 1\n0 0 1 1\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 1\n1 2 1 1\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 1\n1 0 1 3\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 1\n1 0 2 2 1\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 1\n1 0 0\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 1\n1 0 2 1\n", reader) == 2);
    CHECK(parse_error_line("p maxlin 2 2\n1 0 1 1\n", reader) == 3);
    CHECK(parse_error_line("p maxlin 2 1\n1 0 1 1\n1 0 1 2\n", reader) == 3);
  }

  TEST_CASE("transcript lines") {
    Reduced r = make_irreducible(make_system(3, {{{1, 2}, 0, 1}, {{2, 3}, 1, 1}}));
    std::ostringstream out;
    write_transcript(out, r.transcript);
    CHECK(out.str() ==
          "c transcript original_n 3 reduced_n 2\n"
          "c rank n 3 keep 1 2\n"
          "c delete 3 = 1 2\n");
    Reduced merged = make_irreducible(make_system(1, {{{1}, 0, 3}, {{1}, 1, 1}}));
    std::ostringstream out2;
    write_transcript(out2, merged.transcript);
    CHECK(out2.str() ==
          "c transcript original_n 1 reduced_n 1\n"
          "c merge 1 2 -> 3 weight 2 rhs 0\n");
  }

  TEST_CASE("print and parse round trip") {
    Rng rng(81);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = uniform(rng, 1, 70);
      LinearSystem sys = random_system(rng, n, uniform(rng, 0, 10), 9);
      CHECK(parse_system(system_to_string(sys)) == sys);
    }
  }
}

TEST_SUITE("fourier format") {
  TEST_CASE("round trip with rational coefficients") {
    FourierExpansion f(3, Rational(-1, 2));
    f.add({0, 2}, Rational(7, 3));
    f.add({1}, -4);
    std::string text = fourier_to_string(f);
    CHECK(text == "p fourier 3 2\nconst -1/2\n7/3 2 1 3\n-4 1 2\n");
    std::istringstream in(text);
    CHECK(read_fourier(in) == f);
  }

  TEST_CASE("random round trips") {
    Rng rng(82);
    for (int trial = 0; trial < 100; ++trial) {
      FourierExpansion f = random_fourier(rng, uniform(rng, 1, 9), uniform(rng, 1, 8), 20);
      std::istringstream in(fourier_to_string(f));
      CHECK(read_fourier(in) == f);
    }
  }

  TEST_CASE("errors") {
    auto reader = [](std::istream& in) { (void)read_fourier(in); };
    CHECK(parse_error_line("p fourier 2 1\n1 1 1\n", reader) == 2);
    CHECK(parse_error_line("p fourier 2 1\nconst 0\n0 1 1\n", reader) == 3);
    CHECK(parse_error_line("p fourier 2 2\nconst 0\n1 1 1\n2 1 1\n", reader) == 4);
    CHECK(parse_error_line("p fourier 2 1\nconst 1.5\n1 1 1\n", reader) == 2);
  }
}

TEST_SUITE("vector sets") {
  TEST_CASE("reads rows") {
    std::istringstream in("p vecset 2 3\n00\n10\n01\n");
    VectorSet m = read_vector_set(in);
    CHECK(m.size() == 3);
    CHECK(m.contains(bits("10")));
  }

  TEST_CASE("rejects rows of the wrong length") {
    auto reader = [](std::istream& in) { (void)read_vector_set(in); };
    CHECK(parse_error_line("p vecset 2 1\n011\n", reader) == 2);
    CHECK(parse_error_line("p vecset 2 1\n0a\n", reader) == 2);
  }
}

TEST_SUITE("dimacs") {
  TEST_CASE("clauses may span lines") {
    std::istringstream in("c header\np cnf 3 2\n1 -2\n0 3 2 0\n");
    CnfFormula f = read_dimacs(in);
    CHECK(f.n == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0].size() == 2);
    CHECK(f.clauses[0][1].var == 1);
    CHECK(f.clauses[0][1].negated);
    CHECK(f.clauses[1][0].var == 2);
  }

  TEST_CASE("errors") {
    auto reader = [](std::istream& in) { (void)read_dimacs(in); };
    CHECK(parse_error_line("p cnf 2 1\n1 3 0\n", reader) == 2);
    CHECK(parse_error_line("p cnf 2 1\n1 2\n", reader) == 2);
    CHECK(parse_error_line("p cnf 2 2\n1 2 0\n", reader) == 2);
    CHECK(parse_error_line("p cnf 2 1\n1 x 0\n", reader) == 2);
  }
}

TEST_SUITE("csp format") {
  TEST_CASE("reads constraints and tuples") {
    std::istringstream in("p csp 2 1\n2 1 2 2\n-1 1\n1 -1\n");
    CspInstance inst = read_csp(in);
    REQUIRE(inst.constraints.size() == 1);
    CHECK(inst.constraints[0].vars == std::vector<std::size_t>{0, 1});
    CHECK(inst.constraints[0].satisfying ==
          std::vector<std::vector<int>>{{-1, 1}, {1, -1}});
  }

  TEST_CASE("errors") {
    auto reader = [](std::istream& in) { (void)read_csp(in); };
    CHECK(parse_error_line("p csp 2 1\n1 3 1\n1\n", reader) == 2);
    CHECK(parse_error_line("p csp 2 1\n1 1 1\n0\n", reader) == 3);
    CHECK(parse_error_line("p csp 2 1\n1 1 1\n1 1\n", reader) == 3);
  }
}
