#include "cli/commands.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "cli/parallel.hpp"
#include "motivic/dsl.hpp"
#include "motivic/formulas.hpp"
#include "motivic/realization.hpp"
#include "motivic/serialize.hpp"

namespace motivic::cli {

void RunConfig::validate() const {
  if (genus_min < kMinGenus) throw UsageError("genus must be at least 2");
  if (genus_min > genus_max) throw UsageError("genus range is empty (min > max)");
  if (m_min < 1) throw UsageError("m must be at least 1");
  if (m_min > m_max) throw UsageError("m range is empty (min > max)");
}

namespace {

Genus genus_at(const RunConfig& cfg, std::size_t index) {
  return cfg.genus_min + static_cast<Genus>(index);
}

// One document for a single genus, an array for a range.
Json collect(const RunConfig& cfg, std::vector<Json> docs) {
  if (cfg.genus_count() == 1) return std::move(docs.front());
  Json array = Json::array();
  for (auto& d : docs) array.push_back(std::move(d));
  return array;
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// Aligned text columns, first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size(), ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::vector<MotiveClass> evaluate_range(const dsl::Expr& e, const RunConfig& cfg) {
  return parallel_map(cfg.genus_count(), cfg.jobs,
                      [&](std::size_t i) { return dsl::evaluate(e, genus_at(cfg, i)); });
}

const char* status(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

int cmd_eval(const std::string& expr, const RunConfig& cfg, std::ostream& out) {
  const auto values = evaluate_range(dsl::parse(expr), cfg);
  switch (cfg.format) {
    case Format::kJson: {
      if (cfg.genus_count() == 1) {
        out << to_canonical_json(values.front()) << '\n';
      } else {
        Json array = Json::array();
        for (const auto& m : values) array.push_back(to_json(m));
        out << array.dump() << '\n';
      }
      break;
    }
    case Format::kCsv:
      out << "genus,lambda,lefschetz,mult\n";
      for (const auto& m : values) {
        for (const auto& [key, mult] : m.terms()) {
          out << m.genus() << ',' << key.lambda_index << ',' << key.lefschetz_power << ','
              << to_decimal(mult) << '\n';
        }
      }
      break;
    case Format::kText:
      for (const auto& m : values) {
        if (cfg.genus_count() > 1) out << "g=" << m.genus() << ": ";
        out << to_string(m) << '\n';
      }
      break;
  }
  return kSuccess;
}

namespace {

struct TermDiff {
  BasisKey key;
  Integer left;
  Integer right;
};

std::vector<TermDiff> diff_terms(const MotiveClass& a, const MotiveClass& b) {
  std::vector<BasisKey> keys;
  for (const auto& [k, m] : a.terms()) keys.push_back(k);
  for (const auto& [k, m] : b.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<TermDiff> diffs;
  for (const auto& k : keys) {
    Integer l = a.multiplicity(k);
    Integer r = b.multiplicity(k);
    if (l != r) diffs.push_back({k, std::move(l), std::move(r)});
  }
  return diffs;
}

std::string key_name(const BasisKey& key) {
  std::string name;
  if (key.lambda_index > 0) name = "lam(" + std::to_string(key.lambda_index) + ")";
  if (key.lefschetz_power > 0) {
    if (!name.empty()) name += "*";
    name += key.lefschetz_power == 1 ? std::string("L") : "L^" + std::to_string(key.lefschetz_power);
  }
  return name.empty() ? "1" : name;
}

}  // namespace

int cmd_equal(const std::string& lhs, const std::string& rhs, const RunConfig& cfg, std::ostream& out) {
  const dsl::Expr left = dsl::parse(lhs);
  const dsl::Expr right = dsl::parse(rhs);
  const auto diffs = parallel_map(cfg.genus_count(), cfg.jobs, [&](std::size_t i) {
    const Genus g = genus_at(cfg, i);
    return diff_terms(dsl::evaluate(left, g), dsl::evaluate(right, g));
  });
  const bool all_equal = std::all_of(diffs.begin(), diffs.end(), [](const auto& d) { return d.empty(); });

  switch (cfg.format) {
    case Format::kJson: {
      Json genera = Json::array();
      for (std::size_t i = 0; i < diffs.size(); ++i) {
        Json d = Json::array();
        for (const auto& td : diffs[i]) {
          d.push_back(Json{{"lambda", td.key.lambda_index},
                           {"lefschetz", td.key.lefschetz_power},
                           {"left", to_decimal(td.left)},
                           {"right", to_decimal(td.right)}});
        }
        genera.push_back(Json{{"genus", genus_at(cfg, i)}, {"equal", diffs[i].empty()}, {"diff", std::move(d)}});
      }
      write_json(out, Json{{"equal", all_equal}, {"genera", std::move(genera)}});
      break;
    }
    case Format::kCsv:
      out << "genus,equal,lambda,lefschetz,left,right\n";
      for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].empty()) out << genus_at(cfg, i) << ",true,,,,\n";
        for (const auto& td : diffs[i]) {
          out << genus_at(cfg, i) << ",false," << td.key.lambda_index << ',' << td.key.lefschetz_power
              << ',' << to_decimal(td.left) << ',' << to_decimal(td.right) << '\n';
        }
      }
      break;
    case Format::kText:
      if (all_equal) {
        out << "EQUAL\n";
        break;
      }
      out << "NOT EQUAL\n";
      for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].empty()) continue;
        out << "genus " << genus_at(cfg, i) << ":\n";
        for (const auto& td : diffs[i]) {
          out << "  " << key_name(td.key) << ": " << to_decimal(td.left) << " vs " << to_decimal(td.right)
              << '\n';
        }
      }
      break;
  }
  return all_equal ? kSuccess : kVerifiedFalse;
}

namespace {

struct CheckOutcome {
  bool passed = true;
  // The failing i (proof chain) or n (Macdonald), when relevant.
  std::optional<std::uint64_t> index;
};

struct GenusVerification {
  Genus genus = 0;
  CheckOutcome main_equality;
  CheckOutcome proof_chain;
  CheckOutcome atiyah_bott;
  CheckOutcome macdonald;

  bool passed() const {
    return main_equality.passed && proof_chain.passed && atiyah_bott.passed && macdonald.passed;
  }
};

constexpr std::string_view kCheckNames[] = {"main_equality", "proof_chain", "atiyah_bott", "macdonald"};

const CheckOutcome& check_at(const GenusVerification& v, std::size_t c) {
  switch (c) {
    case 0: return v.main_equality;
    case 1: return v.proof_chain;
    case 2: return v.atiyah_bott;
    default: return v.macdonald;
  }
}

GenusVerification verify_genus(Genus g, ConjecturalVariant variant) {
  GenusVerification v;
  v.genus = g;
  const MotiveClass delbano = moduli_motive_delbano(g);
  const MotiveClass conjectural = moduli_motive_conjectural(g, variant);
  v.main_equality.passed = delbano == conjectural;

  for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(g); ++i) {
    if (!proof_chain(delbano, conjectural, i).holds()) {
      v.proof_chain = {false, i};
      break;
    }
  }

  try {
    v.atiyah_bott.passed = atiyah_bott_oracle(g) == poincare_polynomial(delbano);
  } catch (const std::logic_error&) {
    v.atiyah_bott.passed = false;
  }

  const auto max_n = static_cast<std::uint64_t>(2 * g);
  const auto series = macdonald_series(max_n, g);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    if (series[n] != poincare_polynomial(sym_power_curve(n, g))) {
      v.macdonald = {false, n};
      break;
    }
  }
  return v;
}

}  // namespace

int cmd_verify_theorem(const RunConfig& cfg, std::ostream& out) {
  const auto results = parallel_map(cfg.genus_count(), cfg.jobs, [&](std::size_t i) {
    return verify_genus(genus_at(cfg, i), cfg.variant);
  });

  struct Failure {
    Genus genus;
    std::string_view check;
    std::optional<std::uint64_t> index;
  };
  std::optional<Failure> first_failure;
  bool category_pass[4] = {true, true, true, true};
  for (const auto& v : results) {
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& outcome = check_at(v, c);
      if (outcome.passed) continue;
      category_pass[c] = false;
      if (!first_failure) first_failure = Failure{v.genus, kCheckNames[c], outcome.index};
    }
  }

  switch (cfg.format) {
    case Format::kJson: {
      Json checks = Json::object();
      for (std::size_t c = 0; c < 4; ++c) checks[std::string(kCheckNames[c])] = status(category_pass[c]);
      Json genera = Json::array();
      for (const auto& v : results) {
        Json entry{{"genus", v.genus}};
        for (std::size_t c = 0; c < 4; ++c) entry[std::string(kCheckNames[c])] = status(check_at(v, c).passed);
        genera.push_back(std::move(entry));
      }
      Json failure = nullptr;
      if (first_failure) {
        failure = Json{{"genus", first_failure->genus}, {"check", first_failure->check}};
        failure["index"] = first_failure->index ? Json(*first_failure->index) : Json(nullptr);
      }
      write_json(out, Json{{"genus_min", cfg.genus_min},
                           {"genus_max", cfg.genus_max},
                           {"result", status(!first_failure)},
                           {"checks", std::move(checks)},
                           {"genera", std::move(genera)},
                           {"first_failure", std::move(failure)}});
      break;
    }
    case Format::kCsv:
      out << "genus,check,status,index\n";
      for (const auto& v : results) {
        for (std::size_t c = 0; c < 4; ++c) {
          const auto& outcome = check_at(v, c);
          out << v.genus << ',' << kCheckNames[c] << ',' << status(outcome.passed) << ',';
          if (outcome.index) out << *outcome.index;
          out << '\n';
        }
      }
      break;
    case Format::kText:
      for (const auto& v : results) {
        out << "genus " << v.genus << ':';
        for (std::size_t c = 0; c < 4; ++c) {
          const auto& outcome = check_at(v, c);
          out << ' ' << kCheckNames[c] << '=' << status(outcome.passed);
          if (outcome.index) out << "(at " << (c == 1 ? "i" : "n") << '=' << *outcome.index << ')';
        }
        out << '\n';
      }
      if (first_failure) {
        out << "FAIL: first failure at genus " << first_failure->genus << ", check " << first_failure->check;
        if (first_failure->index) {
          out << ", " << (first_failure->check == "proof_chain" ? "i" : "n") << " = " << *first_failure->index;
        }
        out << '\n';
      } else {
        out << "PASS: all checks hold for genus " << cfg.genus_min << ".." << cfg.genus_max << '\n';
      }
      break;
  }
  return first_failure ? kVerifiedFalse : kSuccess;
}

int cmd_identity(const RunConfig& cfg, std::ostream& out) {
  struct Row {
    std::uint64_t m;
    IntPolynomial lhs;
    IntPolynomial rhs;
    bool holds() const { return lhs == rhs; }
  };
  const std::size_t count = static_cast<std::size_t>(cfg.m_max - cfg.m_min + 1);
  const auto rows = parallel_map(count, cfg.jobs, [&](std::size_t i) {
    const std::uint64_t m = cfg.m_min + i;
    return Row{m, key_identity_lhs(m), key_identity_rhs(m)};
  });
  const auto failing = std::find_if(rows.begin(), rows.end(), [](const Row& r) { return !r.holds(); });

  switch (cfg.format) {
    case Format::kJson: {
      Json results = Json::array();
      for (const auto& r : rows) {
        results.push_back(Json{{"m", r.m}, {"holds", r.holds()}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
      }
      write_json(out, Json{{"m_min", cfg.m_min},
                           {"m_max", cfg.m_max},
                           {"result", status(failing == rows.end())},
                           {"first_failure", failing == rows.end() ? Json(nullptr) : Json(failing->m)},
                           {"results", std::move(results)}});
      break;
    }
    case Format::kCsv:
      out << "m,holds,degree,lhs,rhs\n";
      for (const auto& r : rows) {
        out << r.m << ',' << (r.holds() ? "true" : "false") << ',' << r.lhs.degree() << ",\""
            << to_string(r.lhs, "x") << "\",\"" << to_string(r.rhs, "x") << "\"\n";
      }
      break;
    case Format::kText:
      for (const auto& r : rows) {
        out << "m = " << r.m << ": " << status(r.holds()) << "\n  lhs = " << to_string(r.lhs, "x")
            << "\n  rhs = " << to_string(r.rhs, "x") << '\n';
      }
      if (failing != rows.end()) {
        out << "FAIL: identity fails at m = " << failing->m << '\n';
      } else {
        out << "PASS: identity holds for m = " << cfg.m_min << ".." << cfg.m_max << '\n';
      }
      break;
  }
  return failing == rows.end() ? kSuccess : kVerifiedFalse;
}

int cmd_poincare(const std::string& expr, const RunConfig& cfg, std::ostream& out) {
  const auto values = evaluate_range(dsl::parse(expr), cfg);
  std::vector<IntPolynomial> polys;
  for (const auto& m : values) polys.push_back(poincare_polynomial(m));

  switch (cfg.format) {
    case Format::kJson: {
      std::vector<Json> docs;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        docs.push_back(Json{{"genus", genus_at(cfg, i)}, {"poincare", to_json(polys[i])}});
      }
      write_json(out, collect(cfg, std::move(docs)));
      break;
    }
    case Format::kCsv:
      out << "genus,degree,coeff\n";
      for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [e, c] : polys[i].terms()) out << genus_at(cfg, i) << ',' << e << ',' << to_decimal(c) << '\n';
      }
      break;
    case Format::kText:
      for (std::size_t i = 0; i < polys.size(); ++i) {
        if (cfg.genus_count() > 1) out << "g=" << genus_at(cfg, i) << ": ";
        out << to_string(polys[i]) << '\n';
      }
      break;
  }
  return kSuccess;
}

int cmd_hodge(const std::string& expr, const RunConfig& cfg, std::ostream& out) {
  const auto values = evaluate_range(dsl::parse(expr), cfg);
  std::vector<BiPolynomial> polys;
  for (const auto& m : values) polys.push_back(hodge_polynomial(m));

  switch (cfg.format) {
    case Format::kJson: {
      std::vector<Json> docs;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        Json doc{{"genus", genus_at(cfg, i)}, {"hodge", to_json(polys[i])}};
        if (cfg.diamond) {
          Json rows = Json::array();
          const std::uint64_t n = polys[i].max_exponent();
          for (std::uint64_t d = 0; d <= 2 * n; ++d) {
            Json row = Json::array();
            for (std::uint64_t p = std::min(d, n) + 1; p-- > (d > n ? d - n : 0);) {
              row.push_back(to_decimal(polys[i].coefficient(p, d - p)));
            }
            rows.push_back(std::move(row));
          }
          doc["diamond"] = std::move(rows);
        }
        docs.push_back(std::move(doc));
      }
      write_json(out, collect(cfg, std::move(docs)));
      break;
    }
    case Format::kCsv:
      out << "genus,p,q,coeff\n";
      for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [e, c] : polys[i].terms()) {
          out << genus_at(cfg, i) << ',' << e.first << ',' << e.second << ',' << to_decimal(c) << '\n';
        }
      }
      break;
    case Format::kText:
      for (std::size_t i = 0; i < polys.size(); ++i) {
        if (cfg.genus_count() > 1) out << "g=" << genus_at(cfg, i) << ":" << (cfg.diamond ? "\n" : " ");
        out << (cfg.diamond ? render_hodge_diamond(polys[i]) : to_string(polys[i]) + "\n");
      }
      break;
  }
  return kSuccess;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  struct Entry {
    BlockReport report;
    bool matches;
  };
  const auto entries = parallel_map(cfg.genus_count(), cfg.jobs, [&](std::size_t i) {
    const Genus g = genus_at(cfg, i);
    BlockReport report = block_decomposition_report(g, cfg.variant);
    const bool matches = report.total == hodge_polynomial(moduli_motive_delbano(g));
    return Entry{std::move(report), matches};
  });
  const bool all_match = std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.matches; });

  switch (cfg.format) {
    case Format::kJson: {
      std::vector<Json> docs;
      for (const auto& e : entries) docs.push_back(to_json(e.report));
      write_json(out, collect(cfg, std::move(docs)));
      break;
    }
    case Format::kCsv:
      out << "genus,sym_power,twist,p,q,coeff\n";
      for (const auto& e : entries) {
        for (const auto& block : e.report.blocks) {
          for (const auto& [pq, c] : block.hodge.terms()) {
            out << e.report.genus << ',' << block.sym_power << ',' << block.twist << ',' << pq.first << ','
                << pq.second << ',' << to_decimal(c) << '\n';
          }
        }
      }
      break;
    case Format::kText:
      for (const auto& e : entries) {
        out << "genus " << e.report.genus << ": " << e.report.blocks.size() << " blocks\n";
        std::vector<std::vector<std::string>> rows{{"block", "sym_power", "twist", "hodge"}};
        for (const auto& block : e.report.blocks) {
          rows.push_back({block.label(), std::to_string(block.sym_power), std::to_string(block.twist),
                          to_string(block.hodge)});
        }
        rows.push_back({"total", "", "", to_string(e.report.total)});
        out << render_table(rows);
        out << "sum of blocks equals hodge(M): " << (e.matches ? "yes" : "NO") << '\n';
      }
      break;
  }
  return all_match ? kSuccess : kVerifiedFalse;
}

}  // namespace motivic::cli
