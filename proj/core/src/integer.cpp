#include "motivic/integer.hpp"

#include <stdexcept>

namespace motivic {

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result(1);
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result == C(n - k + i - 1, i - 1) here, so the division below is exact.
    result *= Integer(std::to_string(n - k + i));
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer parse_decimal(const std::string& text) {
  const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal '" + text + "'");
    }
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace motivic
