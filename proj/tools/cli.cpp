#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "maxlin/algorithm_h.hpp"
#include "maxlin/errors.hpp"
#include "maxlin/excess.hpp"
#include "maxlin/fourier.hpp"
#include "maxlin/kset.hpp"
#include "maxlin/reduce.hpp"
#include "maxlin/reductions.hpp"
#include "maxlin/text_io.hpp"

namespace maxlin::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T require(const std::optional<T>& value, const char* flag, const std::string& command) {
  if (!value) {
    throw UsageError(command + " requires " + flag);
  }
  return *value;
}

/// key=value lines in machine mode, bare values in plain mode.
class Printer {
 public:
  Printer(std::ostream& out, OutputMode mode) : out_(out), mode_(mode) {}

  Printer& field(const std::string& key, const std::string& value, bool plain_visible = true) {
    if (mode_ == OutputMode::machine) {
      out_ << key << '=' << value << '\n';
    } else if (plain_visible) {
      out_ << value << '\n';
    }
    return *this;
  }

 private:
  std::ostream& out_;
  OutputMode mode_;
};

std::vector<EquationId> parse_cert(const std::string& text) {
  std::vector<EquationId> ids;
  if (text.empty()) {
    return ids;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      unsigned long long id = std::stoull(item, &used);
      if (used != item.size() || item.front() == '-') {
        throw std::invalid_argument(item);
      }
      ids.push_back(id);
    } catch (const std::exception&) {
      throw UsageError("--cert must be a comma-separated list of equation ids, got '" + item + "'");
    }
  }
  return ids;
}

int cmd_reduce(const CommandConfig&, std::istream& in, std::ostream& out) {
  LinearSystem sys = read_system(in);
  Reduced reduced = make_irreducible(sys);
  write_system(out, reduced.system);
  write_transcript(out, reduced.transcript);
  return exit_code::success;
}

int cmd_solve(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  std::int64_t k = require(cfg.k, "--k", "solve");
  LinearSystem sys = read_system(in);
  AaDecision d = decide_aa(AaInstance{sys, k}, OracleOptions{cfg.oracle_cap, cfg.workers});
  Printer(out, cfg.output)
      .field("answer", d.yes ? "YES" : "NO")
      .field("assignment", d.witness.assignment.to_string())
      .field("excess", format_rational(d.witness.excess))
      .field("regime", to_string(d.regime), false)
      .field("method", to_string(d.witness.method), false)
      .field("reduced_n", std::to_string(d.reduced_n), false)
      .field("reduced_m", std::to_string(d.reduced_m), false);
  return d.yes ? exit_code::success : exit_code::negative;
}

int cmd_excess(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.oracle == cfg.assignment.has_value()) {
    throw UsageError("excess requires exactly one of --oracle or --assignment");
  }
  LinearSystem sys = read_system(in);
  if (cfg.assignment) {
    if (cfg.assignment->find_first_not_of("01") != std::string::npos) {
      throw UsageError("--assignment must be a 0/1 string");
    }
    Assignment z = F2Vector::from_string(*cfg.assignment);
    if (z.size() != sys.n()) {
      throw UsageError("--assignment has length " + std::to_string(z.size()) + ", system has n = " +
                       std::to_string(sys.n()));
    }
    Evaluation ev = evaluate(sys, z);
    Printer(out, cfg.output)
        .field("excess", format_rational(ev.excess))
        .field("satisfied", format_rational(ev.satisfied), false)
        .field("falsified", format_rational(ev.falsified), false);
    return exit_code::success;
  }
  Reduced reduced = make_irreducible(sys);
  ExcessWitness w = brute_force_max_excess(reduced.system, {cfg.oracle_cap, cfg.workers});
  Assignment lifted = lift_assignment(reduced.transcript, w.assignment);
  Printer(out, cfg.output)
      .field("max_excess", format_rational(evaluate(sys, lifted).excess))
      .field("assignment", lifted.to_string());
  return exit_code::success;
}

int cmd_bound(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  FourierExpansion f = read_fourier(in);
  Printer(out, cfg.output).field("bound", format_rational(maxima_lower_bound(f)));
  return exit_code::success;
}

int cmd_kset(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  std::int64_t k = require(cfg.k, "--k", "kset");
  if (k < 1) {
    throw UsageError("--k must be positive");
  }
  VectorSet m = read_vector_set(in);
  std::vector<F2Vector> kset = find_kset(m, static_cast<std::size_t>(k));
  if (cfg.output == OutputMode::machine) {
    out << "size=" << kset.size() << '\n';
    for (const auto& v : kset) {
      out << "vector=" << v.to_string() << '\n';
    }
  } else {
    for (const auto& v : kset) {
      out << v.to_string() << '\n';
    }
  }
  return exit_code::success;
}

int cmd_verify(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  std::int64_t k = require(cfg.k, "--k", "verify");
  Certificate cert{parse_cert(cfg.cert)};
  LinearSystem sys = read_system(in);
  bool ok = verify_certificate(sys, cert, k);
  Printer(out, cfg.output).field("result", ok ? "accept" : "reject");
  return ok ? exit_code::success : exit_code::negative;
}

int cmd_from_cnf(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  std::size_t r = require(cfg.r, "--r", "from-cnf");
  write_fourier(out, sat_to_fourier(read_dimacs(in), r));
  return exit_code::success;
}

int cmd_from_csp(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  std::size_t r = require(cfg.r, "--r", "from-csp");
  write_fourier(out, csp_to_fourier(read_csp(in), r));
  return exit_code::success;
}

int cmd_from_fourier(const CommandConfig&, std::istream& in, std::ostream& out) {
  SystemWithConstant assoc = fourier_to_system(read_fourier(in));
  out << "c const " << format_rational(assoc.constant) << '\n';
  write_system(out, assoc.system);
  return exit_code::success;
}

int cmd_kernel(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
  std::size_t r = require(cfg.r, "--r", "kernel");
  std::int64_t k = require(cfg.k, "--k", "kernel");
  KernelOutcome outcome = kernelize_rlin(read_system(in), r, k);
  if (outcome.yes) {
    Printer(out, cfg.output)
        .field("answer", "YES")
        .field("assignment", outcome.witness->assignment.to_string(), false)
        .field("excess", format_rational(outcome.witness->excess), false);
    return exit_code::success;
  }
  out << "c kernel k " << outcome.k << '\n';
  write_system(out, outcome.kernel);
  write_transcript(out, outcome.transcript);
  return exit_code::success;
}

using Handler = std::function<int(const CommandConfig&, std::istream&, std::ostream&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"reduce", cmd_reduce},       {"solve", cmd_solve},
      {"excess", cmd_excess},       {"bound", cmd_bound},
      {"kset", cmd_kset},           {"verify", cmd_verify},
      {"from-cnf", cmd_from_cnf},   {"from-csp", cmd_from_csp},
      {"from-fourier", cmd_from_fourier}, {"kernel", cmd_kernel},
  };
  return table;
}

}  // namespace

int run(const CommandConfig& config, std::istream& stdin_stream, std::ostream& out,
        std::ostream& err) {
  auto it = handlers().find(config.command);
  if (it == handlers().end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return exit_code::usage;
  }
  // Output is buffered so a failing command never emits a partial result.
  std::ostringstream buffer;
  try {
    int code;
    if (config.input == "-") {
      code = it->second(config, stdin_stream, buffer);
    } else {
      std::ifstream file(config.input);
      if (!file) {
        throw UsageError("cannot open input file '" + config.input + "'");
      }
      code = it->second(config, file, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const ParseError& e) {
    err << "error: " << config.input << ": " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
  return exit_code::usage;
}

}  // namespace maxlin::cli
