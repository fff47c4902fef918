#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coincide {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or conformant, 1 failed check or counterexample, 2 input or usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coincide
