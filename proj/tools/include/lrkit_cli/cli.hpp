#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrkit::cli {

/// Runs one command line. `args[0]` is the program name. Returns the process
/// exit status: 0 on success, 1 when a check FAILs, 2 on usage errors.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrkit::cli
