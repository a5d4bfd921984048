#pragma once

// Motives of symmetric powers of the curve, the motive of the
// rank-2 fixed-determinant moduli space M_L in its two presentations, and the
// lambda-coefficient machinery that compares them term by term.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motivic/motive.hpp"

namespace motivic {

// h(C^(n)) = (+)_{a+b+c=n} 1^a (x) lambda^b h1 (x) L^c. The factor 1^a is
// trivial, so every (b, c) with b + c <= n and b <= 2g occurs exactly once.
MotiveClass sym_power_curve(std::uint64_t n, Genus g);

// (+)_{k=0}^{g} lambda^k h1 (x) (1 + L + ... + L^{g-k-1})
//                            (x) (1 + L^2 + ... + L^{2g-2k-2}) (x) L^k.
// Empty geometric factors are zero, so the k = g summand vanishes.
MotiveClass moduli_motive_delbano(Genus g);

enum class ConjecturalVariant {
  kFaithful,
  // Replaces the twist 3g-3-2k with 3g-2-2k. Only used to show that the
  // equality checks can fail.
  kShiftedTopTwist,
};

// One summand h(C^(sym_power)) (x) L^twist of the decomposition.
struct ConjecturalSummand {
  std::uint64_t sym_power = 0;
  std::uint64_t twist = 0;

  friend bool operator==(const ConjecturalSummand&, const ConjecturalSummand&) = default;
};

// Summands in report order: for k = 0..g-2 the pair (k, k), (k, 3g-3-2k);
// then (g-1, g-1). 2g-1 entries in total.
std::vector<ConjecturalSummand> conjectural_summands(
    Genus g, ConjecturalVariant variant = ConjecturalVariant::kFaithful);

// (+)_{k=0}^{g-2} h(C^(k)) (x) (L^k + L^{3g-3-2k})  (+)  h(C^(g-1)) (x) L^{g-1}.
MotiveClass moduli_motive_conjectural(Genus g,
                                      ConjecturalVariant variant = ConjecturalVariant::kFaithful);

struct LambdaCoefficient {
  std::uint32_t lambda_index = 0;
  TatePolynomial coefficient;
};

// The L-polynomial multiplying lambda^i h1 in `m`.
TatePolynomial lambda_coefficient(const MotiveClass& m, std::uint32_t i);

// Every nonzero lambda coefficient of `m`, by increasing index.
std::vector<LambdaCoefficient> lambda_decomposition(const MotiveClass& m);

// (+)_i lambda^i h1 (x) coefficient_i. Inverse of lambda_decomposition.
MotiveClass reconstruct(Genus g, const std::vector<LambdaCoefficient>& parts);

// One displayed stage of the coefficient comparison, evaluated at concrete
// (g, i). Every stage is the full class lambda^i h1 (x) [...].
struct ProofStage {
  std::string name;
  MotiveClass value;
};

struct ProofChainReport {
  Genus genus = 0;
  std::uint32_t lambda_index = 0;
  // lambda^i h1 (x) (lambda^i-coefficient of the del Bano side).
  MotiveClass target;
  std::vector<ProofStage> stages;
  // Name of the first stage that differs from `target`, if any.
  std::optional<std::string> first_mismatch;

  bool holds() const noexcept { return !first_mismatch.has_value(); }
};

// Evaluates the conjectural side's lambda^i coefficient directly, then each
// rewriting of it down to the reindexed double sum and the closed product
// form, and compares all of them against the del Bano coefficient.
// For i > g every stage is empty and the check compares zero with zero.
ProofChainReport proof_chain(Genus g, std::uint32_t i,
                             ConjecturalVariant variant = ConjecturalVariant::kFaithful);

// Same comparison with both sides supplied, for sweeps over i at a fixed genus.
ProofChainReport proof_chain(const MotiveClass& delbano, const MotiveClass& conjectural, std::uint32_t i);

bool proof_chain_check(Genus g, std::uint32_t i);

}  // namespace motivic
