#pragma once

// Sparse exact-integer polynomials. IntPolynomial is univariate (the variable
// is t for Poincare polynomials and x for the formal identity); BiPolynomial is
// bivariate in (u, v) and holds Hodge numbers h^{p,q}. No zero coefficient is
// ever stored, so structural equality is polynomial equality.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "motivic/integer.hpp"

namespace motivic {

class IntPolynomial {
 public:
  using Exponent = std::uint64_t;
  using TermMap = std::map<Exponent, Integer>;

  IntPolynomial() = default;
  // The constant polynomial `c`.
  explicit IntPolynomial(Integer c);
  static IntPolynomial monomial(Exponent e, Integer coeff = Integer(1));
  static IntPolynomial from_terms(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Degree of the zero polynomial is reported as 0; check is_zero() first.
  Exponent degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Integer coefficient(Exponent e) const;
  Integer evaluate(const Integer& at) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  // Multiplies by x^shift.
  IntPolynomial shifted(Exponent shift) const;
  IntPolynomial pow(std::uint64_t n) const;
  // Drops every term of degree > max_degree.
  IntPolynomial truncated(Exponent max_degree) const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void add_term(Exponent e, const Integer& coeff);
  TermMap terms_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Long division over Z. The divisor's leading coefficient must divide every
// intermediate leading coefficient; otherwise std::domain_error is thrown.
// Throws std::domain_error on division by zero.
DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

// "1 + t^2 + 4t^3 - t^5". Zero renders as "0".
std::string to_string(const IntPolynomial& p, std::string_view variable = "t");

class BiPolynomial {
 public:
  using Exponents = std::pair<std::uint64_t, std::uint64_t>;  // (p, q)
  using TermMap = std::map<Exponents, Integer>;

  BiPolynomial() = default;
  static BiPolynomial monomial(std::uint64_t p, std::uint64_t q, Integer coeff = Integer(1));
  static BiPolynomial from_terms(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(std::uint64_t p, std::uint64_t q) const;
  // Largest p or q appearing in any term.
  std::uint64_t max_exponent() const noexcept;

  BiPolynomial& operator+=(const BiPolynomial& rhs);
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

 private:
  void add_term(Exponents e, const Integer& coeff);
  TermMap terms_;
};

// Substitutes u = v = t.
IntPolynomial specialize_diagonal(const BiPolynomial& h);

// Graded order (total degree, then descending power of u): "1 + u*v + 2*u^2*v".
std::string to_string(const BiPolynomial& h);

}  // namespace motivic
