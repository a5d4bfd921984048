#pragma once

#include <ostream>
#include <string>

#include "cli/run_config.hpp"

namespace motivic::cli {

// Each command writes its report to `out` and returns an ExitCode. Parse and
// evaluation failures propagate as exceptions; run_cli maps them to 2 and 3.
int cmd_eval(const std::string& expr, const RunConfig& cfg, std::ostream& out);
int cmd_equal(const std::string& lhs, const std::string& rhs, const RunConfig& cfg, std::ostream& out);
int cmd_verify_theorem(const RunConfig& cfg, std::ostream& out);
int cmd_identity(const RunConfig& cfg, std::ostream& out);
int cmd_poincare(const std::string& expr, const RunConfig& cfg, std::ostream& out);
int cmd_hodge(const std::string& expr, const RunConfig& cfg, std::ostream& out);
int cmd_decompose(const RunConfig& cfg, std::ostream& out);

}  // namespace motivic::cli
