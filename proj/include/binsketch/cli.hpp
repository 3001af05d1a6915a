#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binsketch::cli {

// Process exit codes; stable for scripting.
enum exit_code : int {
  ok = 0,
  failure = 1,       // enum-check found a deviation, or an unexpected error
  parse_error = 2,   // unreadable or malformed input files
  config_error = 3,  // invalid flags or parameter combinations
  data_error = 4,    // sketch files that do not fit together, indices out of range
};

// Runs one command line (args[0] is the program name). All output goes to the given streams.
[[nodiscard]] auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

} // namespace binsketch::cli
