#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "motivic/dsl.hpp"

namespace motivic::cli {
namespace {

struct GenusFlags {
  std::optional<Genus> genus;
  std::optional<Genus> genus_min;
  std::optional<Genus> genus_max;
};

void add_genus_flags(CLI::App* cmd, GenusFlags& flags) {
  auto* single = cmd->add_option("--genus", flags.genus, "Curve genus (>= 2)");
  auto* low = cmd->add_option("--genus-min", flags.genus_min, "Smallest genus of the range");
  auto* high = cmd->add_option("--genus-max", flags.genus_max, "Largest genus of the range");
  single->excludes(low)->excludes(high);
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool& json_alias) {
  static const std::map<std::string, Format> kFormats{
      {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_flag("--json", json_alias, "Shorthand for --format json");
  cmd->add_option("--out", cfg.out_path, "Write the report to PATH instead of standard output");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads (0 = one per hardware thread)");
}

// Applies genus flags; when `require_explicit` is set and no genus flag was
// given, that is a usage error.
void resolve_genus(const GenusFlags& flags, RunConfig& cfg, bool require_explicit) {
  if (flags.genus) {
    cfg.genus_min = cfg.genus_max = *flags.genus;
    return;
  }
  if (require_explicit && !flags.genus_min && !flags.genus_max) {
    throw UsageError("this command needs --genus N or --genus-min/--genus-max");
  }
  if (flags.genus_min) cfg.genus_min = *flags.genus_min;
  if (flags.genus_max) cfg.genus_max = *flags.genus_max;
  if (require_explicit && flags.genus_min && !flags.genus_max) cfg.genus_max = cfg.genus_min;
  if (require_explicit && flags.genus_max && !flags.genus_min) cfg.genus_min = cfg.genus_max;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact motivic computations for symmetric powers of curves and the rank-2 moduli space M_L",
               "motivic"};
  app.require_subcommand(1);

  RunConfig cfg;
  GenusFlags genus_flags;
  bool json_alias = false;
  std::string expr;
  std::string expr2;
  std::int64_t m_min = 1;
  std::int64_t m_max = 100;
  bool mutant = false;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression to its canonical motive");
  eval->add_option("expr", expr, "Motive expression")->required();

  auto* equal = app.add_subcommand("equal", "Compare two expressions at every genus of the range");
  equal->add_option("lhs", expr, "First expression")->required();
  equal->add_option("rhs", expr2, "Second expression")->required();

  auto* verify = app.add_subcommand(
      "verify-theorem", "Check the decomposition of h(M_L), the coefficient comparison and both oracles");
  verify->add_flag("--mutant", mutant, "Use the shifted twist 3g-2-2k (negative control)")->group("");

  auto* identity = app.add_subcommand("identity", "Check the generating-function identity over a range of m");
  identity->add_option("--m-min", m_min, "Smallest m (>= 1)");
  identity->add_option("--m-max", m_max, "Largest m");

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of an expression");
  poincare->add_option("expr", expr, "Motive expression")->required();

  auto* hodge = app.add_subcommand("hodge", "Hodge polynomial of an expression");
  hodge->add_option("expr", expr, "Motive expression")->required();
  hodge->add_flag("--diamond", cfg.diamond, "Render the Hodge diamond");

  auto* decompose = app.add_subcommand("decompose", "Per-summand Hodge blocks of h(M_L)");
  decompose->add_flag("--mutant", mutant, "Use the shifted twist 3g-2-2k (negative control)")->group("");

  for (auto* cmd : {eval, equal, verify, poincare, hodge, decompose}) add_genus_flags(cmd, genus_flags);
  for (auto* cmd : {eval, equal, verify, identity, poincare, hodge, decompose}) {
    add_common_flags(cmd, cfg, json_alias);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  std::ostringstream report;
  int code = kSuccess;
  try {
    if (json_alias) cfg.format = Format::kJson;
    if (mutant) cfg.variant = ConjecturalVariant::kShiftedTopTwist;
    if (m_min < 1 || m_max < 1) throw UsageError("m must be at least 1");
    cfg.m_min = static_cast<std::uint64_t>(m_min);
    cfg.m_max = static_cast<std::uint64_t>(m_max);
    const bool needs_genus = eval->parsed() || poincare->parsed() || hodge->parsed() || equal->parsed();
    resolve_genus(genus_flags, cfg, needs_genus && !equal->parsed());
    cfg.validate();

    if (eval->parsed()) {
      code = cmd_eval(expr, cfg, report);
    } else if (equal->parsed()) {
      code = cmd_equal(expr, expr2, cfg, report);
    } else if (verify->parsed()) {
      code = cmd_verify_theorem(cfg, report);
    } else if (identity->parsed()) {
      code = cmd_identity(cfg, report);
    } else if (poincare->parsed()) {
      code = cmd_poincare(expr, cfg, report);
    } else if (hodge->parsed()) {
      code = cmd_hodge(expr, cfg, report);
    } else {
      code = cmd_decompose(cfg, report);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const dsl::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kEvaluationError;
  }

  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!(file << report.str()) || !file.flush()) {
      err << "cannot write " << *cfg.out_path << '\n';
      return kEvaluationError;
    }
  } else {
    out << report.str();
  }
  return code;
}

}  // namespace motivic::cli
