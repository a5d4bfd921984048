#include "motivic/motive.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace motivic {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw ExponentOverflow();
  return a + b;
}

std::uint32_t max_lambda(Genus g) { return static_cast<std::uint32_t>(2 * g); }

void require_same_genus(const MotiveClass& a, const MotiveClass& b) {
  if (a.genus() != b.genus()) throw GenusMismatch(a.genus(), b.genus());
}

}  // namespace

GenusError::GenusError(Genus g)
    : MotiveError("genus must be at least 2, got " + std::to_string(g)) {}

GenusMismatch::GenusMismatch(Genus lhs, Genus rhs)
    : MotiveError("genus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

NonTateTensor::NonTateTensor(std::string expression)
    : MotiveError(expression.empty()
                      ? std::string("NonTateTensor: both tensor operands contain lambda classes")
                      : "NonTateTensor: both tensor operands contain lambda classes in '" +
                            expression + "'"),
      expression_(std::move(expression)) {}

void require_genus(Genus g) {
  if (g < kMinGenus) throw GenusError(g);
}

MotiveClass MotiveClass::from_terms(Genus g, TermMap terms) {
  require_genus(g);
  for (auto it = terms.begin(); it != terms.end();) {
    if (sgn(it->second) < 0) {
      throw std::invalid_argument("motive multiplicities must be nonnegative");
    }
    if (sgn(it->second) == 0 || it->first.lambda_index > max_lambda(g)) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  return MotiveClass(g, std::move(terms));
}

bool MotiveClass::is_tate() const noexcept {
  // Keys are ordered by lambda_index first.
  return terms_.empty() || terms_.rbegin()->first.lambda_index == 0;
}

Integer MotiveClass::multiplicity(BasisKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

MotiveClass zero(Genus g) {
  require_genus(g);
  return MotiveClass(g, {});
}

MotiveClass unit(Genus g) { return lefschetz(g, 0); }

MotiveClass lefschetz(Genus g, std::uint64_t n) {
  return MotiveClass::from_terms(g, {{BasisKey{0, n}, Integer(1)}});
}

MotiveClass lambda_h1(Genus g, std::uint64_t k) {
  require_genus(g);
  if (k > max_lambda(g)) return zero(g);
  return MotiveClass::from_terms(g, {{BasisKey{static_cast<std::uint32_t>(k), 0}, Integer(1)}});
}

MotiveClass direct_sum(const MotiveClass& a, const MotiveClass& b) {
  require_same_genus(a, b);
  MotiveClass::TermMap terms = a.terms_;
  for (const auto& [key, mult] : b.terms_) terms[key] += mult;
  return MotiveClass(a.genus_, std::move(terms));
}

MotiveClass tensor(const MotiveClass& a, const MotiveClass& b) {
  require_same_genus(a, b);
  if (!a.is_tate() && !b.is_tate()) throw NonTateTensor();
  MotiveClass::TermMap terms;
  for (const auto& [ka, ma] : a.terms_) {
    for (const auto& [kb, mb] : b.terms_) {
      // One of the two lambda indices is zero.
      const BasisKey key{ka.lambda_index + kb.lambda_index,
                         checked_add(ka.lefschetz_power, kb.lefschetz_power)};
      terms[key] += ma * mb;
    }
  }
  return MotiveClass(a.genus_, std::move(terms));
}

MotiveClass tensor_power(const MotiveClass& base, std::uint64_t exponent) {
  MotiveClass result = unit(base.genus());
  if (exponent == 0) return result;
  if (exponent >= 2 && !base.is_tate()) throw NonTateTensor();
  MotiveClass square = base;
  while (true) {
    if (exponent & 1U) result = tensor(result, square);
    exponent >>= 1U;
    if (exponent == 0) break;
    square = tensor(square, square);
  }
  return result;
}

MotiveClass geometric_sum(Genus g, std::int64_t first, std::int64_t last, std::int64_t step) {
  if (step <= 0) throw std::invalid_argument("geometric_sum step must be positive");
  if (first < 0 && last >= first) {
    throw std::invalid_argument("geometric_sum with negative Lefschetz exponent");
  }
  MotiveClass::TermMap terms;
  for (std::int64_t e = first; e <= last; e += step) {
    terms[BasisKey{0, static_cast<std::uint64_t>(e)}] += 1;
  }
  return MotiveClass::from_terms(g, std::move(terms));
}

std::string to_string(const MotiveClass& m) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, mult] : m.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string basis;
    if (key.lambda_index > 0) {
      basis = key.lambda_index == 1 ? "h1" : "lam(" + std::to_string(key.lambda_index) + ")";
    }
    if (key.lefschetz_power > 0) {
      if (!basis.empty()) basis += "*";
      basis += key.lefschetz_power == 1 ? "L" : "L^" + std::to_string(key.lefschetz_power);
    }
    if (basis.empty()) {
      out << to_decimal(mult);
    } else if (mult == 1) {
      out << basis;
    } else {
      out << to_decimal(mult) << "*" << basis;
    }
  }
  return out.str();
}

MotiveAccumulator::MotiveAccumulator(Genus g) : genus_(g) { require_genus(g); }

MotiveAccumulator& MotiveAccumulator::add(const MotiveClass& m) {
  if (m.genus() != genus_) throw GenusMismatch(genus_, m.genus());
  for (const auto& [key, mult] : m.terms()) terms_[key] += mult;
  return *this;
}

MotiveAccumulator& MotiveAccumulator::add_lefschetz(std::uint64_t power) {
  terms_[BasisKey{0, power}] += 1;
  return *this;
}

MotiveClass MotiveAccumulator::finish() && { return MotiveClass::from_terms(genus_, std::move(terms_)); }

TatePolynomial::TatePolynomial(MotiveClass m) : motive_(std::move(m)) {
  if (!motive_.is_tate()) throw std::invalid_argument("TatePolynomial requires lambda_index 0 keys");
}

}  // namespace motivic
