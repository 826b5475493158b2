#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqfiber {

// Runs one command line (without the program name). Exit status: 0 when the
// command ran to completion whatever its verdicts, 1 for usage or input
// errors, 2 when an internal invariant check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqfiber
