#include "motivic/realization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace motivic {
namespace {

IntPolynomial x_pow(std::uint64_t e) { return IntPolynomial::monomial(e); }

// sum_{p+q=b} C(g,p) C(g,q) u^p v^q
BiPolynomial lambda_hodge(Genus g, std::uint64_t b) {
  const auto gu = static_cast<std::uint64_t>(g);
  BiPolynomial::TermMap terms;
  for (std::uint64_t p = (b > gu ? b - gu : 0); p <= std::min(b, gu); ++p) {
    terms[{p, b - p}] = binomial(gu, p) * binomial(gu, b - p);
  }
  return BiPolynomial::from_terms(std::move(terms));
}

}  // namespace

IntPolynomial poincare_polynomial(const MotiveClass& m) {
  const auto two_g = static_cast<std::uint64_t>(2 * m.genus());
  IntPolynomial result;
  for (const auto& [key, mult] : m.terms()) {
    result += IntPolynomial::monomial(key.lambda_index + 2 * key.lefschetz_power,
                                      binomial(two_g, key.lambda_index) * mult);
  }
  return result;
}

BiPolynomial hodge_polynomial(const MotiveClass& m) {
  BiPolynomial result;
  for (const auto& [key, mult] : m.terms()) {
    const auto c = key.lefschetz_power;
    result += lambda_hodge(m.genus(), key.lambda_index) * BiPolynomial::monomial(c, c, mult);
  }
  return result;
}

IntPolynomial key_identity_lhs(std::uint64_t m, std::uint64_t top_shift) {
  IntPolynomial lhs;
  for (std::uint64_t j = 0; j + 1 <= m; ++j) {
    for (std::uint64_t c = 0; c <= j; ++c) {
      lhs += x_pow(j + c);
      lhs += x_pow(3 * m - 2 * j + c + top_shift);
    }
  }
  for (std::uint64_t c = 0; c <= m; ++c) lhs += x_pow(m + c);
  return lhs;
}

IntPolynomial key_identity_rhs(std::uint64_t m) {
  IntPolynomial first;
  IntPolynomial second;
  for (std::uint64_t e = 0; e <= m; ++e) {
    first += x_pow(e);
    second += x_pow(2 * e);
  }
  return first * second;
}

bool verify_key_identity(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("the key identity is stated for m >= 1");
  return key_identity_lhs(m) == key_identity_rhs(m);
}

IntPolynomial atiyah_bott_oracle(Genus g) {
  require_genus(g);
  const auto two_g = static_cast<std::uint64_t>(2 * g);
  const IntPolynomial one(Integer(1));
  const IntPolynomial numerator = (one + x_pow(3)).pow(two_g) - (one + x_pow(1)).pow(two_g).shifted(two_g);
  const IntPolynomial denominator = (one - x_pow(2)) * (one - x_pow(4));
  auto [quotient, remainder] = divide(numerator, denominator);
  if (!remainder.is_zero()) {
    throw std::logic_error("Atiyah-Bott division left remainder " + to_string(remainder));
  }
  return quotient;
}

IntPolynomial macdonald_oracle(std::uint64_t n, Genus g) { return macdonald_series(n, g)[n]; }

std::vector<IntPolynomial> macdonald_series(std::uint64_t n, Genus g) {
  require_genus(g);
  // Power series in x with coefficients in Z[t]; series[k] is the x^k coefficient.
  using Series = std::vector<IntPolynomial>;
  auto multiply = [n](const Series& a, const Series& b) {
    Series out(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::uint64_t j = 0; i + j <= n; ++j) {
        if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
      }
    }
    return out;
  };

  Series binomial_part(n + 1);
  binomial_part[0] = IntPolynomial(Integer(1));
  Series linear(n + 1);  // 1 + t x
  linear[0] = IntPolynomial(Integer(1));
  if (n >= 1) linear[1] = x_pow(1);
  for (int r = 0; r < 2 * g; ++r) binomial_part = multiply(binomial_part, linear);

  Series ones(n + 1);         // 1/(1-x)
  Series even_powers(n + 1);  // 1/(1-t^2 x)
  for (std::uint64_t k = 0; k <= n; ++k) {
    ones[k] = IntPolynomial(Integer(1));
    even_powers[k] = x_pow(2 * k);
  }
  return multiply(multiply(binomial_part, ones), even_powers);
}

std::string HodgeBlock::label() const {
  return "C^(" + std::to_string(sym_power) + ") (x) L^" + std::to_string(twist);
}

BlockReport block_decomposition_report(Genus g, ConjecturalVariant variant) {
  BlockReport report;
  report.genus = g;
  for (const auto& s : conjectural_summands(g, variant)) {
    HodgeBlock block{s.sym_power, s.twist,
                     hodge_polynomial(sym_power_curve(s.sym_power, g) * lefschetz(g, s.twist))};
    report.total += block.hodge;
    report.blocks.push_back(std::move(block));
  }
  return report;
}

std::string render_hodge_diamond(const BiPolynomial& h) {
  const std::uint64_t n = h.max_exponent();
  std::size_t width = 1;
  for (const auto& [e, c] : h.terms()) width = std::max(width, to_decimal(c).size());

  std::vector<std::string> rows;
  std::size_t widest = 0;
  for (std::uint64_t d = 0; d <= 2 * n; ++d) {
    std::string row;
    const std::uint64_t low = d > n ? d - n : 0;
    const std::uint64_t high = std::min(d, n);
    for (std::uint64_t p = high + 1; p-- > low;) {
      const std::string cell = to_decimal(h.coefficient(p, d - p));
      if (!row.empty()) row += std::string(width, ' ');
      row += std::string(width - cell.size(), ' ') + cell;
    }
    widest = std::max(widest, row.size());
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line = std::string((widest - row.size()) / 2, ' ') + row;
    out << line << '\n';
  }
  return out.str();
}

}  // namespace motivic
