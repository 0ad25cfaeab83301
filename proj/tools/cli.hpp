#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rwg::cli {

enum ExitCode : int { ok = 0, usage_error = 1, data_error = 2, verify_failed = 3 };

/// Runs one rwg command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwg::cli
