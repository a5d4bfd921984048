#pragma once

// A small expression language for motives.
//
//   expr   := term { "+" term } ;
//   term   := factor { "*" factor } ;
//   factor := atom [ "^" nat ] ;
//   atom   := "1" | "L" | "h1" | "lam" "(" nat ")" | "C" | "Sym" "(" nat ")"
//           | "M" | "Mconj" | "(" expr ")" ;
//
// "+" is direct sum, "*" is tensor and "^" repeated tensor. Genus is not part
// of the language; it is supplied at evaluation time.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "motivic/motive.hpp"

namespace motivic::dsl {

struct Node;

// Immutable handle to an expression tree. Copies share structure.
class Expr {
 public:
  explicit Expr(Node node);

  const Node& node() const noexcept { return *node_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Unit {
  friend bool operator==(const Unit&, const Unit&) = default;
};
struct Lefschetz {
  std::uint64_t power = 1;
  friend bool operator==(const Lefschetz&, const Lefschetz&) = default;
};
struct LambdaH1 {
  std::uint64_t index = 1;
  friend bool operator==(const LambdaH1&, const LambdaH1&) = default;
};
struct Curve {
  friend bool operator==(const Curve&, const Curve&) = default;
};
struct SymPower {
  std::uint64_t n = 0;
  friend bool operator==(const SymPower&, const SymPower&) = default;
};
struct ModuliDelBano {
  friend bool operator==(const ModuliDelBano&, const ModuliDelBano&) = default;
};
struct ModuliConjectural {
  friend bool operator==(const ModuliConjectural&, const ModuliConjectural&) = default;
};
struct Sum {
  Expr left;
  Expr right;
  friend bool operator==(const Sum&, const Sum&) = default;
};
struct Product {
  Expr left;
  Expr right;
  friend bool operator==(const Product&, const Product&) = default;
};
struct Power {
  Expr base;
  std::uint64_t exponent = 0;
  friend bool operator==(const Power&, const Power&) = default;
};

struct Node : std::variant<Unit, Lefschetz, LambdaH1, Curve, SymPower, ModuliDelBano,
                           ModuliConjectural, Sum, Product, Power> {
  using variant::variant;
};

inline bool operator==(const Expr& a, const Expr& b) {
  return a.node_ == b.node_ ||
         static_cast<const Node::variant&>(*a.node_) == static_cast<const Node::variant&>(*b.node_);
}

// Convenience constructors.
Expr unit_expr();
Expr lefschetz_expr(std::uint64_t power = 1);
Expr lambda_expr(std::uint64_t index);
Expr curve_expr();
Expr sym_expr(std::uint64_t n);
Expr moduli_expr();
Expr moduli_conj_expr();
Expr sum_expr(Expr left, Expr right);
Expr product_expr(Expr left, Expr right);
Expr power_expr(Expr base, std::uint64_t exponent);

// Largest accepted numeric literal.
inline constexpr std::uint64_t kMaxLiteral = 1'000'000;
// Largest accepted nesting depth of the parsed tree.
inline constexpr std::size_t kMaxDepth = 1'000;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);

  // 1-based byte offset of the offending token; input length + 1 at end of input.
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

Expr parse(std::string_view source);

// Canonical text with minimal parentheses; parse(print(e)) == e for every tree
// the parser can produce.
std::string print(const Expr& e);

// Throws GenusError for g < 2 and NonTateTensor (carrying the printed
// offending subexpression) for products outside the Tate subring.
MotiveClass evaluate(const Expr& e, Genus g);

}  // namespace motivic::dsl
