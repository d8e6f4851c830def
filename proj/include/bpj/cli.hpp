#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bpj/rational.hpp"

namespace bpj {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
};

/// Grid syntax: "lo..hi" over integers with 0 left out, or a comma-separated
/// list of rationals ("1/2,3,-1"), where 0 is rejected.
/// Throws ParseError on malformed input or an explicit zero.
std::vector<Rational> parse_grid(std::string_view text);

/// Entry point behind the `bpj` executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpj
