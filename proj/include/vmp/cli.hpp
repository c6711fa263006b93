#pragma once

#include <ostream>
#include <string>

namespace vmp {

// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_verify_failed = 2, exit_numeric = 3 };

// %.17g with negative zero printed as 0.
std::string format_double(double x);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vmp
