#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grasspack::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on invalid input, 2 on numerical failure. Reports go to `out`,
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grasspack::cli
