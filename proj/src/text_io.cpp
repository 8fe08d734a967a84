#include "maxlin/text_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "maxlin/errors.hpp"

namespace maxlin {

namespace {

/// Line-oriented tokenizer that skips comments and blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next significant line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) {
        tokens.push_back(std::move(tok));
      }
      if (tokens.empty() || (tokens.front().front() == 'c' && tokens.front() != "const")) {
        continue;
      }
      return true;
    }
    return false;
  }

  std::vector<std::string> expect(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) {
      throw ParseError(line_no_ + 1, "unexpected end of input, expected " + what);
    }
    return tokens;
  }

  void expect_end() {
    std::vector<std::string> tokens;
    if (next(tokens)) {
      throw ParseError(line_no_, "unexpected content after the declared number of records");
    }
  }

  std::size_t line() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& rule) const { throw ParseError(line_no_, rule); }

  std::size_t to_size(const std::string& tok, const std::string& what) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(what + " must be a non-negative integer, got '" + tok + "'");
    }
    return v;
  }

  long long to_int(const std::string& tok, const std::string& what) const {
    long long v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') {
      ++first;
    }
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(what + " must be an integer, got '" + tok + "'");
    }
    return v;
  }

  Rational to_rational(const std::string& tok, const std::string& what) const {
    try {
      return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
      fail(what + " must be an exact rational p or p/q, got '" + tok + "' (" + e.what() + ")");
    }
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::pair<std::size_t, std::size_t> read_header(LineReader& r, const std::string& kind) {
  auto tokens = r.expect("header 'p " + kind + " ...'");
  if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != kind) {
    r.fail("header must be 'p " + kind + " <n> <count>'");
  }
  return {r.to_size(tokens[2], "n"), r.to_size(tokens[3], "count")};
}

/// Parses `<t> <i1> ... <it>` starting at tokens[pos]; indices 1-based,
/// strictly increasing, at most n. Consumes the rest of the line.
Subset read_indices(const LineReader& r, const std::vector<std::string>& tokens, std::size_t pos,
                    std::size_t n, bool allow_empty) {
  if (pos >= tokens.size()) {
    r.fail("missing variable count");
  }
  std::size_t t = r.to_size(tokens[pos], "variable count");
  if (t == 0 && !allow_empty) {
    r.fail("variable count must be at least 1");
  }
  if (tokens.size() != pos + 1 + t) {
    r.fail("expected " + std::to_string(t) + " variable indices after the count");
  }
  Subset s;
  for (std::size_t j = 0; j < t; ++j) {
    std::size_t idx = r.to_size(tokens[pos + 1 + j], "variable index");
    if (idx < 1 || idx > n) {
      r.fail("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    }
    if (!s.empty() && idx - 1 <= s.back()) {
      r.fail("variable indices must be distinct and increasing");
    }
    s.push_back(idx - 1);
  }
  return s;
}

void write_indices(std::ostream& out, const std::vector<std::size_t>& support) {
  out << support.size();
  for (auto i : support) {
    out << ' ' << i + 1;
  }
}

}  // namespace

LinearSystem read_system(std::istream& in) {
  LineReader r(in);
  auto [n, m] = read_header(r, "maxlin");
  LinearSystem sys(n);
  for (std::size_t e = 0; e < m; ++e) {
    auto tokens = r.expect("equation line '<weight> <b> <t> <i1> ... <it>'");
    if (tokens.size() < 3) {
      r.fail("equation line must be '<weight> <b> <t> <i1> ... <it>'");
    }
    Rational w = r.to_rational(tokens[0], "weight");
    if (w <= 0) {
      r.fail("weight must be positive");
    }
    if (tokens[1] != "0" && tokens[1] != "1") {
      r.fail("right-hand side must be 0 or 1");
    }
    Subset s = read_indices(r, tokens, 2, n, false);
    sys.add(F2Vector::from_indices(n, s), tokens[1] == "1", std::move(w));
  }
  r.expect_end();
  return sys;
}

void write_system(std::ostream& out, const LinearSystem& sys) {
  out << "p maxlin " << sys.n() << ' ' << sys.size() << '\n';
  for (const auto& e : sys.equations()) {
    out << format_rational(e.weight) << ' ' << (e.rhs ? 1 : 0) << ' ';
    write_indices(out, e.lhs.support());
    out << '\n';
  }
}

void write_transcript(std::ostream& out, const ReductionTranscript& tr) {
  out << "c transcript original_n " << tr.original_n << " reduced_n " << tr.reduced_n << '\n';
  for (const auto& step : tr.steps) {
    if (const auto* rank = std::get_if<RankStep>(&step)) {
      out << "c rank n " << rank->n_before << " keep";
      for (auto k : rank->kept) {
        out << ' ' << k + 1;
      }
      out << '\n';
      for (const auto& d : rank->deleted) {
        out << "c delete " << d.column + 1 << " =";
        for (auto i : d.dependency) {
          out << ' ' << i + 1;
        }
        out << '\n';
      }
      continue;
    }
    for (const auto& merge : std::get<MergeStep>(step).merges) {
      out << "c merge";
      for (auto id : merge.merged) {
        out << ' ' << id;
      }
      if (merge.survivor) {
        out << " -> " << *merge.survivor << " weight " << format_rational(merge.weight) << " rhs "
            << (merge.rhs ? 1 : 0) << '\n';
      } else {
        out << " -> deleted\n";
      }
    }
  }
}

FourierExpansion read_fourier(std::istream& in) {
  LineReader r(in);
  auto [n, count] = read_header(r, "fourier");
  auto tokens = r.expect("'const <rational>'");
  if (tokens.size() != 2 || tokens[0] != "const") {
    r.fail("second line must be 'const <rational>'");
  }
  FourierExpansion f(n, r.to_rational(tokens[1], "constant"));
  for (std::size_t t = 0; t < count; ++t) {
    tokens = r.expect("term line '<c> <t> <i1> ... <it>'");
    if (tokens.size() < 2) {
      r.fail("term line must be '<c> <t> <i1> ... <it>'");
    }
    Rational c = r.to_rational(tokens[0], "coefficient");
    if (c == 0) {
      r.fail("coefficients must be nonzero");
    }
    Subset s = read_indices(r, tokens, 1, n, false);
    if (f.terms().contains(s)) {
      r.fail("monomial listed twice");
    }
    f.add(s, c);
  }
  r.expect_end();
  return f;
}

void write_fourier(std::ostream& out, const FourierExpansion& f) {
  out << "p fourier " << f.n() << ' ' << f.family_size() << '\n';
  out << "const " << format_rational(f.constant()) << '\n';
  for (const auto& [s, c] : f.terms()) {
    out << format_rational(c) << ' ';
    write_indices(out, s);
    out << '\n';
  }
}

VectorSet read_vector_set(std::istream& in) {
  LineReader r(in);
  auto [n, count] = read_header(r, "vecset");
  std::vector<F2Vector> vectors;
  for (std::size_t i = 0; i < count; ++i) {
    auto tokens = r.expect("a 0/1 vector");
    if (tokens.size() != 1 || tokens[0].size() != n ||
        tokens[0].find_first_not_of("01") != std::string::npos) {
      r.fail("each vector must be one 0/1 string of length " + std::to_string(n));
    }
    vectors.push_back(F2Vector::from_string(tokens[0]));
  }
  r.expect_end();
  return VectorSet(n, std::move(vectors));
}

CnfFormula read_dimacs(std::istream& in) {
  LineReader r(in);
  auto [n, m] = read_header(r, "cnf");
  CnfFormula f{n, {}};
  Clause current;
  std::vector<std::string> tokens;
  while (r.next(tokens)) {
    if (tokens.front() == "%") {
      break;
    }
    for (const auto& tok : tokens) {
      long long lit = r.to_int(tok, "literal");
      if (lit == 0) {
        if (f.clauses.size() == m) {
          r.fail("more clauses than declared in the header");
        }
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > n) {
        r.fail("literal " + tok + " refers to a variable above n = " + std::to_string(n));
      }
      current.push_back(Literal{var - 1, lit < 0});
    }
  }
  if (!current.empty()) {
    throw ParseError(r.line(), "last clause is not terminated by 0");
  }
  if (f.clauses.size() != m) {
    throw ParseError(r.line(), "header declares " + std::to_string(m) + " clauses, found " +
                                   std::to_string(f.clauses.size()));
  }
  return f;
}

CspInstance read_csp(std::istream& in) {
  LineReader r(in);
  auto [n, count] = read_header(r, "csp");
  CspInstance inst{n, {}};
  for (std::size_t c = 0; c < count; ++c) {
    auto tokens = r.expect("constraint line '<arity> <i1> ... <ir> <|V|>'");
    std::size_t arity = r.to_size(tokens[0], "arity");
    if (arity == 0) {
      r.fail("arity must be at least 1");
    }
    if (tokens.size() != arity + 2) {
      r.fail("constraint line must be '<arity> <i1> ... <ir> <|V|>'");
    }
    CspConstraint con;
    for (std::size_t j = 0; j < arity; ++j) {
      std::size_t idx = r.to_size(tokens[1 + j], "variable index");
      if (idx < 1 || idx > n) {
        r.fail("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
      }
      con.vars.push_back(idx - 1);
    }
    std::size_t rows = r.to_size(tokens.back(), "satisfying tuple count");
    if (rows == 0) {
      r.fail("a constraint needs at least one satisfying tuple");
    }
    for (std::size_t row = 0; row < rows; ++row) {
      auto entries = r.expect("a satisfying tuple");
      if (entries.size() != arity) {
        r.fail("satisfying tuple must have " + std::to_string(arity) + " entries");
      }
      std::vector<int> tuple;
      for (const auto& e : entries) {
        long long v = r.to_int(e, "tuple entry");
        if (v != 1 && v != -1) {
          r.fail("tuple entries must be -1 or +1");
        }
        tuple.push_back(static_cast<int>(v));
      }
      con.satisfying.push_back(std::move(tuple));
    }
    inst.constraints.push_back(std::move(con));
  }
  r.expect_end();
  return inst;
}

std::string system_to_string(const LinearSystem& sys) {
  std::ostringstream out;
  write_system(out, sys);
  return out.str();
}

std::string fourier_to_string(const FourierExpansion& f) {
  std::ostringstream out;
  write_fourier(out, f);
  return out.str();
}

}  // namespace maxlin
