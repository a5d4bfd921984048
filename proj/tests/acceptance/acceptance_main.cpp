// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance_tests [path-to-motivic-binary]
//
// Without a binary path the CLI criterion runs in-process only.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "motivic/dsl.hpp"
#include "motivic/formulas.hpp"
#include "motivic/realization.hpp"
#include "support/generators.hpp"

namespace {

using namespace motivic;

constexpr Genus kGenusMax = 30;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = no runtime bound stated
  std::function<Outcome()> check;
};

Outcome main_theorem() {
  Outcome o;
  for (Genus g = 2; g <= kGenusMax; ++g) {
    if (moduli_motive_delbano(g) != moduli_motive_conjectural(g)) o.fail("differs at g=" + std::to_string(g));
  }
  return o;
}

Outcome proof_chain_all() {
  Outcome o;
  for (Genus g = 2; g <= kGenusMax; ++g) {
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(g); ++i) {
      if (!proof_chain_check(g, i)) o.fail("g=" + std::to_string(g) + " i=" + std::to_string(i));
    }
  }
  return o;
}

Outcome key_identity() {
  Outcome o;
  for (std::uint64_t m = 1; m <= 100; ++m) {
    if (!verify_key_identity(m)) o.fail("m=" + std::to_string(m));
  }
  return o;
}

Outcome atiyah_bott() {
  Outcome o;
  IntPolynomial::TermMap g2{{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}};
  const auto expected_g2 = IntPolynomial::from_terms(g2);
  if (atiyah_bott_oracle(2) != expected_g2) o.fail("oracle at g=2 is " + to_string(atiyah_bott_oracle(2)));
  if (poincare_polynomial(moduli_motive_delbano(2)) != expected_g2) o.fail("P(M_L) at g=2 differs");
  for (Genus g = 2; g <= kGenusMax; ++g) {
    // atiyah_bott_oracle throws if the remainder is nonzero.
    if (atiyah_bott_oracle(g) != poincare_polynomial(moduli_motive_delbano(g))) {
      o.fail("g=" + std::to_string(g));
    }
  }
  return o;
}

Outcome macdonald() {
  Outcome o;
  for (Genus g = 2; g <= 10; ++g) {
    for (std::uint64_t n = 0; n <= static_cast<std::uint64_t>(2 * g); ++n) {
      if (macdonald_oracle(n, g) != poincare_polynomial(sym_power_curve(n, g))) {
        o.fail("g=" + std::to_string(g) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome realization_properties() {
  Outcome o;
  for (Genus g = 2; g <= kGenusMax; ++g) {
    const auto m = moduli_motive_delbano(g);
    const auto h = hodge_polynomial(m);
    const auto n = static_cast<std::uint64_t>(3 * g - 3);
    for (const auto& [pq, c] : h.terms()) {
      const auto [p, q] = pq;
      if (h.coefficient(q, p) != c) o.fail("symmetry at g=" + std::to_string(g));
      if (p > n || q > n || h.coefficient(n - p, n - q) != c) o.fail("duality at g=" + std::to_string(g));
    }
    if (specialize_diagonal(h) != poincare_polynomial(m)) o.fail("H(t,t) != P(t) at g=" + std::to_string(g));
  }
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  for (Genus g = 2; g <= kGenusMax; ++g) {
    if (moduli_motive_delbano(g) == moduli_motive_conjectural(g, ConjecturalVariant::kShiftedTopTwist)) {
      o.fail("mutant passes at g=" + std::to_string(g));
    }
  }
  return o;
}

Outcome block_decomposition() {
  Outcome o;
  for (Genus g = 2; g <= kGenusMax; ++g) {
    const auto report = block_decomposition_report(g);
    if (report.blocks.size() != static_cast<std::size_t>(2 * g - 1)) o.fail("block count at g=" + std::to_string(g));
    BiPolynomial sum;
    for (const auto& b : report.blocks) sum += b.hodge;
    if (sum != hodge_polynomial(moduli_motive_delbano(g))) o.fail("sum at g=" + std::to_string(g));
  }
  return o;
}

Outcome parser_suite() {
  using namespace motivic::dsl;
  Outcome o;
  testing::Rng rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const Expr e = testing::random_expr(rng, 6);
    if (!(parse(print(e)) == e)) o.fail("round trip failed for " + print(e));
  }

  struct Bad {
    const char* source;
    std::size_t offset;
  };
  const std::array<Bad, 24> corpus{{{"Sym(2) * (L + 1", 16}, {"", 1},          {"+", 1},
                                    {"1 +", 4},               {"1 + + L", 5},   {"L^", 3},
                                    {"L^x", 3},               {"2", 1},         {"lam", 4},
                                    {"lam(", 5},              {"lam(1", 6},     {"lam()", 5},
                                    {"Sym(a)", 5},            {"foo", 1},       {"h2", 1},
                                    {"1 L", 3},               {"(1 + L))", 8},  {")", 1},
                                    {"L # 1", 3},             {"L^2^3", 4},     {"1 - L", 3},
                                    {"M conj", 3},            {"(", 2},         {"1 * ", 5}}};
  for (const auto& bad : corpus) {
    try {
      parse(bad.source);
      o.fail(std::string("accepted '") + bad.source + "'");
    } catch (const ParseError& e) {
      if (e.offset() != bad.offset) {
        o.fail(std::string("'") + bad.source + "' reported offset " + std::to_string(e.offset()));
      }
    }
  }

  if (!(parse("1 + L^3") == sum_expr(unit_expr(), power_expr(lefschetz_expr(), 3)))) o.fail("fixture 1");
  if (!(parse("lam(1)*L + L^2") ==
        sum_expr(product_expr(lambda_expr(1), lefschetz_expr()), power_expr(lefschetz_expr(), 2)))) {
    o.fail("fixture 2");
  }
  if (print(sum_expr(unit_expr(), lefschetz_expr(3))) != "1 + L^3") o.fail("printer fixture 1");
  if (print(product_expr(sum_expr(unit_expr(), lefschetz_expr()), lefschetz_expr(2))) != "(1 + L) * L^2") {
    o.fail("printer fixture 2");
  }
  return o;
}

struct Captured {
  int code;
  std::string out;
};

Captured run_binary(const std::string& binary, const std::string& args) {
  const std::string command = "'" + binary + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Captured run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = motivic::cli::run_cli(args, out, err);
  return {code, out.str()};
}

Outcome cli_contract(const std::string& binary) {
  Outcome o;
  struct Case {
    std::vector<std::string> args;
    std::string shell;
    int expected;
  };
  const std::vector<Case> cases{
      {{"equal", "--genus-min", "2", "--genus-max", "30", "M", "Mconj"},
       "equal --genus-min 2 --genus-max 30 M Mconj", 0},
      {{"equal", "--genus", "2", "M", "M + L"}, "equal --genus 2 M 'M + L'", 1},
      {{"verify-theorem", "--genus", "2", "--mutant"}, "verify-theorem --genus 2 --mutant", 1},
      {{"eval", "--genus", "2", "Sym(2) * (L + 1"}, "eval --genus 2 'Sym(2) * (L + 1'", 2},
      {{"identity", "--m-min", "0"}, "identity --m-min 0", 2},
      {{"bogus"}, "bogus", 2},
      {{"eval", "--genus", "2", "h1 * h1"}, "eval --genus 2 'h1 * h1'", 3},
      {{"identity", "--m-max", "100"}, "identity --m-max 100", 0},
  };
  for (const auto& c : cases) {
    const int in_process = run_in_process(c.args).code;
    if (in_process != c.expected) o.fail("in-process '" + c.shell + "' exited " + std::to_string(in_process));
    if (!binary.empty()) {
      const int code = run_binary(binary, c.shell).code;
      if (code != c.expected) o.fail("'" + c.shell + "' exited " + std::to_string(code));
    }
  }

  const std::vector<std::string> json_runs{
      "verify-theorem --genus-min 2 --genus-max 30 --format json",
      "decompose --genus-min 2 --genus-max 12 --format json",
      "eval --genus-min 2 --genus-max 10 M --format json",
      "identity --m-max 40 --format json",
  };
  for (const auto& args : json_runs) {
    std::vector<std::string> outputs;
    if (binary.empty()) {
      std::vector<std::string> split;
      std::istringstream in(args);
      for (std::string w; in >> w;) split.push_back(w);
      for (const char* jobs : {"1", "1", "4"}) {
        auto a = split;
        a.insert(a.end(), {"--jobs", jobs});
        outputs.push_back(run_in_process(a).out);
      }
    } else {
      outputs.push_back(run_binary(binary, args + " --jobs 1").out);
      outputs.push_back(run_binary(binary, args + " --jobs 1").out);
      outputs.push_back(run_binary(binary, args + " --jobs 4").out);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) o.fail("repeated run differs: " + args);
    if (outputs[0] != outputs[2]) o.fail("--jobs changes output: " + args);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";

  const std::vector<Criterion> criteria{
      {1, "main theorem h(M_L) decomposition, g in 2..30", 5.0, main_theorem},
      {2, "proof chain, all stages, g in 2..30, 0 <= i <= g", 10.0, proof_chain_all},
      {3, "key identity, m in 1..100, no division", 2.0, key_identity},
      {4, "Atiyah-Bott oracle = P(M_L), g in 2..30", 0.0, atiyah_bott},
      {5, "Macdonald oracle = P(C^(n)), n in 0..2g, g in 2..10", 0.0, macdonald},
      {6, "Hodge symmetry, Poincare duality, H(t,t) = P(t), g in 2..30", 0.0, realization_properties},
      {7, "mutation 3g-2-2k breaks the main theorem, g in 2..30", 0.0, mutation_sensitivity},
      {8, "2g-1 Hodge blocks summing to H(M_L), g in 2..30", 0.0, block_decomposition},
      {9, "parser round trip, error positions, precedence", 0.0, parser_suite},
      {10, "CLI exit codes and byte-identical JSON", 0.0, [&binary] { return cli_contract(binary); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.fail("took " + std::to_string(seconds) + "s, budget " + std::to_string(c.budget_seconds) + "s");
    }
    if (!outcome.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << ": " << c.title << " (" << timing << ")";
    if (!outcome.pass) std::cout << " -- " << outcome.detail;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
