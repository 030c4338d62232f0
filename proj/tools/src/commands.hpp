#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcent::cli {

/// Parses argv-style arguments and runs the selected subcommand.
/// Returns the process exit code: 0 iff all requested outputs were written.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcent::cli
