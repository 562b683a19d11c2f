#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pinnacle/count.hpp"

namespace pinnacle::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kCrossCheckMismatch = 2,
  kBudgetRefusal = 3,
};

enum class Format { text, csv, json };

struct Range {
  int first = 1;
  int last = 1;
};

/// "a..b" or a single integer "a".
Range parse_range(const std::string &text);

struct CliConfig {
  std::string command;
  int m = 1;
  int p = 1;
  int n = 1;
  std::optional<int> d;
  int k = 0;
  CountMethod method = CountMethod::closed_alternating;
  std::optional<std::uint64_t> budget;
  Format format = Format::text;
  std::string output; ///< empty means standard output
  std::string set;
  std::string perm;
  Range m_range;
  Range n_range;
  bool diff = false;
  /// Not reachable from the command line.
  CountHooks hooks;
};

/// Parses argv into a config. Returns nullopt after printing help or a
/// usage error; `exit_code` then holds the code to return.
std::optional<CliConfig> parse_command_line(int argc, const char *const *argv, std::ostream &out,
                                            std::ostream &err, int &exit_code);

/// Dispatches a parsed config; data goes to `out`, diagnostics to `err`.
int run(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Full entry point: parse, open the output file if requested, run.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace pinnacle::cli
