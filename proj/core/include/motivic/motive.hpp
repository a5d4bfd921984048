#pragma once

// Motives as formal sums over the basis  lambda^b h1(C) (x) L^c.
//
// A MotiveClass stores a map BasisKey -> positive multiplicity together with
// the genus g of the curve. The only relations imposed on the lambda classes
// are lambda^0 = 1 and lambda^b = 0 for b > 2g; in particular the duality
// between lambda^{2g-k} and lambda^k (x) L^{g-k} is not applied, so equality
// is the strictest possible one.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "motivic/integer.hpp"

namespace motivic {

using Genus = int;

inline constexpr Genus kMinGenus = 2;

struct BasisKey {
  std::uint32_t lambda_index = 0;
  std::uint64_t lefschetz_power = 0;

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

class MotiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenusError : public MotiveError {
 public:
  explicit GenusError(Genus g);
};

class GenusMismatch : public MotiveError {
 public:
  GenusMismatch(Genus lhs, Genus rhs);
};

// Raised when both tensor operands carry a lambda class of positive index.
// `expression` is filled in by callers that know the offending source text.
class NonTateTensor : public MotiveError {
 public:
  explicit NonTateTensor(std::string expression = {});
  const std::string& expression() const noexcept { return expression_; }

 private:
  std::string expression_;
};

class ExponentOverflow : public MotiveError {
 public:
  ExponentOverflow() : MotiveError("Lefschetz exponent overflow") {}
};

void require_genus(Genus g);

class MotiveClass {
 public:
  using TermMap = std::map<BasisKey, Integer>;

  // Builds a class from raw terms: zero multiplicities and keys with
  // lambda_index > 2g are dropped, negative multiplicities are rejected.
  static MotiveClass from_terms(Genus g, TermMap terms);

  Genus genus() const noexcept { return genus_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // True when no key carries a lambda class (a formal sum of L-powers).
  bool is_tate() const noexcept;
  Integer multiplicity(BasisKey key) const;

  friend bool operator==(const MotiveClass&, const MotiveClass&) = default;

 private:
  MotiveClass(Genus g, TermMap terms) : genus_(g), terms_(std::move(terms)) {}

  friend MotiveClass zero(Genus g);
  friend MotiveClass direct_sum(const MotiveClass&, const MotiveClass&);
  friend MotiveClass tensor(const MotiveClass&, const MotiveClass&);

  Genus genus_;
  TermMap terms_;
};

MotiveClass zero(Genus g);
MotiveClass unit(Genus g);
MotiveClass lefschetz(Genus g, std::uint64_t n);
MotiveClass lambda_h1(Genus g, std::uint64_t k);

MotiveClass direct_sum(const MotiveClass& a, const MotiveClass& b);
// Defined when at least one operand is Tate; throws NonTateTensor otherwise.
MotiveClass tensor(const MotiveClass& a, const MotiveClass& b);
MotiveClass tensor_power(const MotiveClass& base, std::uint64_t exponent);

// L^first (+) L^(first+step) (+) ... up to and including L^last.
// Empty (the zero motive) when last < first.
MotiveClass geometric_sum(Genus g, std::int64_t first, std::int64_t last, std::int64_t step = 1);

inline MotiveClass operator+(const MotiveClass& a, const MotiveClass& b) { return direct_sum(a, b); }
inline MotiveClass operator*(const MotiveClass& a, const MotiveClass& b) { return tensor(a, b); }

// Human-readable form such as "1 + L + 4*lam(1)*L^2".
std::string to_string(const MotiveClass& m);

// Mutable accumulator for long direct sums; avoids copying the term map at
// every step of a fold.
class MotiveAccumulator {
 public:
  explicit MotiveAccumulator(Genus g);

  MotiveAccumulator& add(const MotiveClass& m);
  MotiveAccumulator& add_lefschetz(std::uint64_t power);
  MotiveClass finish() &&;

 private:
  Genus genus_;
  MotiveClass::TermMap terms_;
};

// A MotiveClass whose keys all have lambda_index 0.
class TatePolynomial {
 public:
  // Throws std::invalid_argument if `m` is not Tate.
  explicit TatePolynomial(MotiveClass m);

  const MotiveClass& motive() const noexcept { return motive_; }
  friend bool operator==(const TatePolynomial&, const TatePolynomial&) = default;

 private:
  MotiveClass motive_;
};

}  // namespace motivic
