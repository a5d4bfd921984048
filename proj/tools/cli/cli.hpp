#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motivic::cli {

// Runs the command line `args` (without the program name). Reports go to
// `out` (or to --out PATH), diagnostics to `err`. Returns 0 on success or
// equality, 1 when a verification is false, 2 on usage or parse errors and 3
// on evaluation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic::cli
