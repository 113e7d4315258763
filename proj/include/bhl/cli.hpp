#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error (bad arguments, unknown type, malformed word, cap exceeded).

#include <ostream>
#include <string>
#include <vector>

namespace bhl {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhl
