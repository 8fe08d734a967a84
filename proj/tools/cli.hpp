#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace maxlin::cli {

enum class OutputMode { plain, machine };

struct CommandConfig {
  std::string command;
  std::string input = "-";  // "-" reads standard input
  std::optional<std::int64_t> k;
  std::optional<std::size_t> r;
  std::string cert;
  bool oracle = false;
  std::optional<std::string> assignment;
  std::size_t oracle_cap = 24;
  unsigned workers = 1;
  OutputMode output = OutputMode::plain;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int negative = 1;  // NO / reject
inline constexpr int usage = 2;     // bad flags, unreadable or malformed input
inline constexpr int internal = 3;
}  // namespace exit_code

/// Runs one subcommand. `stdin_stream` is used when config.input is "-".
int run(const CommandConfig& config, std::istream& stdin_stream, std::ostream& out,
        std::ostream& err);

}  // namespace maxlin::cli
