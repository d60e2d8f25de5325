#pragma once

#include <iosfwd>

namespace kdiv::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_negative = 1,
  exit_input = 2,
  exit_cap = 3,
  exit_internal = 4,
};

/// Entry point of the kdiv command. Reads KDIV_CAP_N from the environment;
/// --cap-n wins over it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdiv::cli
