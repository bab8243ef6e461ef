#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bierkit {

// Parses and runs one command-line invocation (argv without the program
// name).  Exit codes: 0 = success / property holds, 1 = property violated
// (witness on out), 2 = usage or input error, 3 = resource cap exceeded.
// Diagnostics go to err, data to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bierkit
