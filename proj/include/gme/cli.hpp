#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gme {

/// Runs the command-line front end on `args` (program name excluded) and
/// returns the process exit status: 0 on success, 1 on evaluation or check
/// failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gme
