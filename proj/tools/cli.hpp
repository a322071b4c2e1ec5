#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gfk {

/// Runs one command line (without the program name). Exit status: 0 ok,
/// 1 usage or I/O error, 2 domain error, 3 parse error. Files named by -o
/// are written; everything else goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfk
