#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopforge::cli {

/// Runs one command line (without the program name). Exit status: 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace loopforge::cli
