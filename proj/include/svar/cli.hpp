#pragma once
// The svar command line. Exit codes: 0 success, 1 unknown or failed check,
// 2 input error.

#include <ostream>
#include <string>
#include <vector>

namespace svar {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svar
