#pragma once

// Betti and Hodge realizations of motives, the formal-variable identity that
// closes the coefficient comparison, and two classical closed forms used as
// independent cross-checks.

#include <cstdint>
#include <string>
#include <vector>

#include "motivic/formulas.hpp"
#include "motivic/motive.hpp"
#include "motivic/polynomial.hpp"

namespace motivic {

// (b, c) -> C(2g, b) t^{b+2c}.
IntPolynomial poincare_polynomial(const MotiveClass& m);

// (b, c) -> (sum_{p+q=b} C(g,p) C(g,q) u^p v^q) (uv)^c.
BiPolynomial hodge_polynomial(const MotiveClass& m);

// Left side of the identity, built term by term:
//   sum_{j=0}^{m-1} sum_{c=0}^{j} (x^{j+c} + x^{3m-2j+c + top_shift}) + sum_{c=0}^{m} x^{m+c}.
// top_shift = 0 is the identity itself; a nonzero shift is a deliberate mutant.
IntPolynomial key_identity_lhs(std::uint64_t m, std::uint64_t top_shift = 0);

// (1 + x + ... + x^m)(1 + x^2 + ... + x^{2m}), i.e. the right side with both
// geometric quotients expanded. No division is performed.
IntPolynomial key_identity_rhs(std::uint64_t m);

// Exact comparison of the two sides. Throws std::invalid_argument for m = 0.
bool verify_key_identity(std::uint64_t m);

// ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)) by exact long division.
// Throws std::logic_error if the remainder is nonzero.
IntPolynomial atiyah_bott_oracle(Genus g);

// Coefficient of x^n in (1+tx)^{2g} / ((1-x)(1-t^2 x)), from a power series in
// x truncated at order n.
IntPolynomial macdonald_oracle(std::uint64_t n, Genus g);

// Coefficients of x^0 .. x^max_n of the same series, from one expansion.
std::vector<IntPolynomial> macdonald_series(std::uint64_t max_n, Genus g);

struct HodgeBlock {
  std::uint64_t sym_power = 0;
  std::uint64_t twist = 0;
  BiPolynomial hodge;

  std::string label() const;
};

struct BlockReport {
  Genus genus = 0;
  std::vector<HodgeBlock> blocks;
  BiPolynomial total;
};

// Hodge polynomial of each summand h(C^(k)) (x) L^twist of the decomposition
// of h(M_L), in summand order, together with their sum.
BlockReport block_decomposition_report(Genus g,
                                       ConjecturalVariant variant = ConjecturalVariant::kFaithful);

// Rows d = 0..2N (N = largest exponent) listing h^{p,d-p} with p descending,
// each row centered. Entries are right-aligned to a common width.
std::string render_hodge_diamond(const BiPolynomial& h);

}  // namespace motivic
