#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace molsim {

/// Runs one CLI invocation. Exit codes: 0 success, 1 domain error,
/// 2 usage error. Every error path prints exactly one diagnostic line to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace molsim
