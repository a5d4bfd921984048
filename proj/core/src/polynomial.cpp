#include "motivic/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace motivic {

IntPolynomial::IntPolynomial(Integer c) { add_term(0, c); }

IntPolynomial IntPolynomial::monomial(Exponent e, Integer coeff) {
  IntPolynomial p;
  p.add_term(e, coeff);
  return p;
}

IntPolynomial IntPolynomial::from_terms(TermMap terms) {
  IntPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void IntPolynomial::add_term(Exponent e, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer IntPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer IntPolynomial::evaluate(const Integer& at) const {
  // Horner over the sparse representation, highest degree first.
  Integer acc(0);
  Exponent current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), at.get_mpz_t(), static_cast<unsigned long>(current - it->first));
    acc = acc * power + it->second;
    current = it->first;
  }
  Integer tail;
  mpz_pow_ui(tail.get_mpz_t(), at.get_mpz_t(), static_cast<unsigned long>(current));
  return acc * tail;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial result;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) result.add_term(ea + eb, ca * cb);
  }
  return result;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial IntPolynomial::shifted(Exponent shift) const {
  IntPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + shift, c);
  return p;
}

IntPolynomial IntPolynomial::pow(std::uint64_t n) const {
  IntPolynomial result(Integer(1));
  IntPolynomial square = *this;
  while (n > 0) {
    if (n & 1U) result *= square;
    n >>= 1U;
    if (n > 0) square *= square;
  }
  return result;
}

IntPolynomial IntPolynomial::truncated(Exponent max_degree) const {
  IntPolynomial p;
  for (const auto& [e, c] : terms_) {
    if (e > max_degree) break;
    p.terms_.emplace(e, c);
  }
  return p;
}

DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto divisor_degree = divisor.degree();
  const Integer& lead = divisor.terms().rbegin()->second;

  IntPolynomial quotient;
  IntPolynomial remainder = dividend;
  while (!remainder.is_zero() && remainder.degree() >= divisor_degree) {
    const auto& [top_exp, top_coeff] = *remainder.terms().rbegin();
    if (!mpz_divisible_p(top_coeff.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("polynomial division leaves Z[t]: leading coefficient not divisible");
    }
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top_coeff.get_mpz_t(), lead.get_mpz_t());
    const auto step = IntPolynomial::monomial(top_exp - divisor_degree, factor);
    quotient += step;
    remainder -= step * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

std::string to_string(const IntPolynomial& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << to_decimal(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_decimal(magnitude);
    out << variable;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

BiPolynomial BiPolynomial::monomial(std::uint64_t p, std::uint64_t q, Integer coeff) {
  BiPolynomial h;
  h.add_term({p, q}, coeff);
  return h;
}

BiPolynomial BiPolynomial::from_terms(TermMap terms) {
  BiPolynomial h;
  for (const auto& [e, c] : terms) h.add_term(e, c);
  return h;
}

void BiPolynomial::add_term(Exponents e, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer BiPolynomial::coefficient(std::uint64_t p, std::uint64_t q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint64_t BiPolynomial::max_exponent() const noexcept {
  std::uint64_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max({m, e.first, e.second});
  return m;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
  BiPolynomial result;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      result.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return result;
}

IntPolynomial specialize_diagonal(const BiPolynomial& h) {
  IntPolynomial::TermMap terms;
  for (const auto& [e, c] : h.terms()) terms[e.first + e.second] += c;
  return IntPolynomial::from_terms(std::move(terms));
}

std::string to_string(const BiPolynomial& h) {
  if (h.is_zero()) return "0";
  using Entry = std::pair<BiPolynomial::Exponents, Integer>;
  std::vector<Entry> entries(h.terms().begin(), h.terms().end());
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    const auto [ap, aq] = a.first;
    const auto [bp, bq] = b.first;
    return std::tuple(ap + aq, aq) < std::tuple(bp + bq, bq);
  });

  auto power = [](std::string_view var, std::uint64_t e) {
    std::string s(var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };

  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : entries) {
    const bool negative = sgn(c) < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (magnitude != 1 || (e.first == 0 && e.second == 0)) factors.push_back(to_decimal(magnitude));
    if (e.first > 0) factors.push_back(power("u", e.first));
    if (e.second > 0) factors.push_back(power("v", e.second));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace motivic
