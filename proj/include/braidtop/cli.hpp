#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidtop::cli {

/// Parses and runs one subcommand.  `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors (bad indices, malformed input
/// files), 2 on usage errors; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace braidtop::cli
