#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcorner::cli {

// Parses and runs one command line (arguments without the program name).
// Payload output (trace JSON, CSV tables) goes to --output when given,
// otherwise to `out`; the human-readable summary goes to the stream the
// payload does not occupy. Returns the process exit code: 0 on success,
// 2 for usage or input errors, 3 for numerical failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lcorner::cli
