#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reebsym::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 on parse or validation errors (one diagnostic line on `err`), 2 when a
/// verification check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reebsym::cli
