#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rahp::cli {

// Runs one subcommand; args exclude the program name. Returns 0 on success,
// 1 on an operation error (JSON error object on out) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rahp::cli
