#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2tri {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 failed check or analysis error, 2 usage or input parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace z2tri
