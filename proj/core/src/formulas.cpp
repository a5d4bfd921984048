#include "motivic/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace motivic {
namespace {

// L^e for an exponent produced by index arithmetic; e < 0 means the
// transcription of a sum bound is wrong.
MotiveClass lefschetz_at(Genus g, std::int64_t e) {
  if (e < 0) throw std::logic_error("negative Lefschetz exponent " + std::to_string(e));
  return lefschetz(g, static_cast<std::uint64_t>(e));
}

}  // namespace

MotiveClass sym_power_curve(std::uint64_t n, Genus g) {
  require_genus(g);
  MotiveClass::TermMap terms;
  const std::uint64_t max_b = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(2 * g));
  for (std::uint64_t b = 0; b <= max_b; ++b) {
    for (std::uint64_t c = 0; b + c <= n; ++c) {
      terms.emplace(BasisKey{static_cast<std::uint32_t>(b), c}, Integer(1));
    }
  }
  return MotiveClass::from_terms(g, std::move(terms));
}

MotiveClass moduli_motive_delbano(Genus g) {
  require_genus(g);
  MotiveAccumulator result(g);
  for (Genus k = 0; k <= g; ++k) {
    result.add(lambda_h1(g, static_cast<std::uint64_t>(k)) * geometric_sum(g, 0, g - k - 1) *
               geometric_sum(g, 0, 2 * g - 2 * k - 2, 2) * lefschetz(g, static_cast<std::uint64_t>(k)));
  }
  return std::move(result).finish();
}

std::vector<ConjecturalSummand> conjectural_summands(Genus g, ConjecturalVariant variant) {
  require_genus(g);
  const std::int64_t top_offset = variant == ConjecturalVariant::kFaithful ? 3 : 2;
  std::vector<ConjecturalSummand> out;
  out.reserve(static_cast<std::size_t>(2 * g - 1));
  for (std::int64_t k = 0; k <= g - 2; ++k) {
    const auto sym = static_cast<std::uint64_t>(k);
    out.push_back({sym, sym});
    out.push_back({sym, static_cast<std::uint64_t>(3 * g - top_offset - 2 * k)});
  }
  out.push_back({static_cast<std::uint64_t>(g - 1), static_cast<std::uint64_t>(g - 1)});
  return out;
}

MotiveClass moduli_motive_conjectural(Genus g, ConjecturalVariant variant) {
  MotiveAccumulator result(g);
  for (const auto& s : conjectural_summands(g, variant)) {
    result.add(sym_power_curve(s.sym_power, g) * lefschetz(g, s.twist));
  }
  return std::move(result).finish();
}

TatePolynomial lambda_coefficient(const MotiveClass& m, std::uint32_t i) {
  MotiveClass::TermMap terms;
  const auto first = m.terms().lower_bound(BasisKey{i, 0});
  for (auto it = first; it != m.terms().end() && it->first.lambda_index == i; ++it) {
    terms.emplace(BasisKey{0, it->first.lefschetz_power}, it->second);
  }
  return TatePolynomial(MotiveClass::from_terms(m.genus(), std::move(terms)));
}

std::vector<LambdaCoefficient> lambda_decomposition(const MotiveClass& m) {
  std::vector<LambdaCoefficient> parts;
  for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(2 * m.genus()); ++i) {
    TatePolynomial coefficient = lambda_coefficient(m, i);
    if (!coefficient.motive().is_zero()) parts.push_back({i, std::move(coefficient)});
  }
  return parts;
}

MotiveClass reconstruct(Genus g, const std::vector<LambdaCoefficient>& parts) {
  MotiveClass result = zero(g);
  for (const auto& part : parts) {
    result = result + lambda_h1(g, part.lambda_index) * part.coefficient.motive();
  }
  return result;
}

ProofChainReport proof_chain(Genus g, std::uint32_t i, ConjecturalVariant variant) {
  return proof_chain(moduli_motive_delbano(g), moduli_motive_conjectural(g, variant), i);
}

ProofChainReport proof_chain(const MotiveClass& delbano, const MotiveClass& conjectural, std::uint32_t i) {
  const Genus g = delbano.genus();
  if (conjectural.genus() != g) throw GenusMismatch(g, conjectural.genus());
  const std::int64_t gi = i;
  const MotiveClass lam = lambda_h1(g, i);
  auto L = [g](std::int64_t e) { return lefschetz_at(g, e); };

  ProofChainReport report{g, i, lam * lambda_coefficient(delbano, i).motive(), {}, {}};

  report.stages.push_back({"conjectural coefficient", lam * lambda_coefficient(conjectural, i).motive()});

  // lambda^i occurs in h(C^(k)) through 1^a (x) lambda^i h1 (x) L^c with a + c = k - i.
  {
    MotiveAccumulator sum(g);
    for (std::int64_t k = gi; k <= g - 2; ++k) {
      for (std::int64_t a = 0; a <= k - gi; ++a) {
        const std::int64_t c = k - gi - a;
        sum.add((unit(g) * lam * L(c)) * (L(k) + L(3 * g - 3 - 2 * k)));
      }
    }
    for (std::int64_t a = 0; a <= g - 1 - gi; ++a) {
      const std::int64_t c = g - 1 - gi - a;
      sum.add((unit(g) * lam * L(c)) * L(g - 1));
    }
    report.stages.push_back({"expanded over a+c", std::move(sum).finish()});
  }

  {
    MotiveAccumulator bracket(g);
    for (std::int64_t k = gi; k <= g - 2; ++k) {
      for (std::int64_t a = 0; a <= k - gi; ++a) {
        const std::int64_t c = k - gi - a;
        bracket.add((unit(g) * L(c)) * (L(k) + L(3 * g - 3 - 2 * k)));
      }
    }
    for (std::int64_t a = 0; a <= g - 1 - gi; ++a) {
      const std::int64_t c = g - 1 - gi - a;
      bracket.add((unit(g) * L(c)) * L(g - 1));
    }
    report.stages.push_back({"lambda factored out", lam * std::move(bracket).finish()});
  }

  {
    MotiveAccumulator bracket(g);
    for (std::int64_t k = gi; k <= g - 2; ++k) {
      for (std::int64_t c = 0; c <= k - gi; ++c) {
        bracket.add(L(k + c)).add(L(3 * g - 3 - 2 * k + c));
      }
    }
    for (std::int64_t c = 0; c <= g - 1 - gi; ++c) bracket.add(L(g - 1 + c));
    report.stages.push_back({"unit factors dropped", lam * std::move(bracket).finish()});
  }

  {
    MotiveAccumulator bracket(g);
    for (std::int64_t k = gi; k <= g - 2; ++k) {
      for (std::int64_t c = 0; c <= k - gi; ++c) {
        bracket.add(L(k - gi + c)).add(L(3 * g - 3 - 3 * gi - 2 * (k - gi) + c));
      }
    }
    for (std::int64_t c = 0; c <= g - 1 - gi; ++c) bracket.add(L(g - 1 - gi + c));
    report.stages.push_back({"L^i extracted", lam * std::move(bracket).finish() * L(gi)});
  }

  {
    // j = k - i runs over 0 .. g-1-i-1.
    MotiveAccumulator bracket(g);
    for (std::int64_t j = 0; j <= g - 1 - gi - 1; ++j) {
      for (std::int64_t c = 0; c <= j; ++c) {
        bracket.add(L(j + c)).add(L(3 * g - 3 - 3 * gi - 2 * j + c));
      }
    }
    for (std::int64_t c = 0; c <= g - 1 - gi; ++c) bracket.add(L(g - 1 - gi + c));
    report.stages.push_back({"reindexed by j = k - i", lam * std::move(bracket).finish() * L(gi)});
  }

  report.stages.push_back({"closed product form", lam * geometric_sum(g, 0, g - 1 - gi) *
                                                      geometric_sum(g, 0, 2 * g - 2 - 2 * gi, 2) *
                                                      L(gi)});

  for (const auto& stage : report.stages) {
    if (stage.value != report.target) {
      report.first_mismatch = stage.name;
      break;
    }
  }
  return report;
}

bool proof_chain_check(Genus g, std::uint32_t i) { return proof_chain(g, i).holds(); }

}  // namespace motivic
