#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using maxlin::cli::CommandConfig;
  using maxlin::cli::OutputMode;

  CLI::App app{"Max Lin above-average solver: reductions, certificates and bounds over F2"};
  app.require_subcommand(1);

  CommandConfig cfg;
  std::string output = "plain";
  app.add_option("--output", output, "plain or machine (key=value lines)")
      ->check(CLI::IsMember({"plain", "machine"}));
  app.add_option("--oracle-cap", cfg.oracle_cap, "largest n the exhaustive oracle accepts")
      ->check(CLI::Range(0, 62));
  app.add_option("--workers", cfg.workers, "threads for the exhaustive oracle")
      ->check(CLI::Range(1, 256));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "input file, '-' for standard input");
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "parameter k")->required(); };
  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "maximum variables per equation / clause size")
        ->required()
        ->check(CLI::PositiveNumber);
  };

  auto* reduce = app.add_subcommand("reduce", "irreducible system and reduction transcript");
  add_input(reduce);

  auto* solve = app.add_subcommand("solve", "is the maximum excess at least k?");
  add_k(solve);
  add_input(solve);

  auto* excess = app.add_subcommand("excess", "exact maximum excess, or excess of one assignment");
  excess->add_flag("--oracle", cfg.oracle, "exhaustive maximum");
  excess->add_option("--assignment", cfg.assignment, "0/1 string z_1..z_n to evaluate");
  add_input(excess);

  auto* bound = app.add_subcommand("bound", "lower bound on the maximum of a Fourier expansion");
  add_input(bound);

  auto* kset = app.add_subcommand("kset", "k+1 vectors with no sum of two or more in the set");
  add_k(kset);
  add_input(kset);

  auto* verify = app.add_subcommand("verify", "check a marking certificate");
  verify->add_option("--cert", cfg.cert, "comma-separated equation ids")->required();
  add_k(verify);
  add_input(verify);

  auto* from_cnf = app.add_subcommand("from-cnf", "Fourier expansion of an exact r-CNF");
  add_r(from_cnf);
  add_input(from_cnf);

  auto* from_csp = app.add_subcommand("from-csp", "Fourier expansion of an r-CSP instance");
  add_r(from_csp);
  add_input(from_csp);

  auto* from_fourier = app.add_subcommand("from-fourier", "weighted system of a Fourier expansion");
  add_input(from_fourier);

  auto* kernel = app.add_subcommand("kernel", "YES or a kernel for an r-variable system");
  add_r(kernel);
  add_k(kernel);
  add_input(kernel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : maxlin::cli::exit_code::usage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.output = output == "machine" ? OutputMode::machine : OutputMode::plain;
  return maxlin::cli::run(cfg, std::cin, std::cout, std::cerr);
}
