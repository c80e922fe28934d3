#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gaugeball::cli {

struct CommandOptions {
  std::string input;
  std::string out;
  int k = 0;
  /// "1", "2", "3" or "corollary".
  std::string theorem = "2";
  int trials = 100;
  std::uint64_t seed = 1;
  /// Harness worker cap; 0 = hardware concurrency.
  unsigned threads = 1;
};

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one of radius|certify|witness|check|render|faces. The payload goes to
/// `options.out` when set, otherwise to `out`; diagnostics go to `err`.
int run_command(const std::string& command, const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Same, but returns the payload instead of writing it anywhere.
int run_command_to_string(const std::string& command, const CommandOptions& options, std::string& payload,
                          std::ostream& err);

}  // namespace gaugeball::cli
