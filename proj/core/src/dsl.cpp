#include "motivic/dsl.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

#include "motivic/formulas.hpp"

namespace motivic::dsl {

Expr::Expr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Expr unit_expr() { return Expr(Unit{}); }
Expr lefschetz_expr(std::uint64_t power) { return Expr(Lefschetz{power}); }
Expr lambda_expr(std::uint64_t index) { return Expr(LambdaH1{index}); }
Expr curve_expr() { return Expr(Curve{}); }
Expr sym_expr(std::uint64_t n) { return Expr(SymPower{n}); }
Expr moduli_expr() { return Expr(ModuliDelBano{}); }
Expr moduli_conj_expr() { return Expr(ModuliConjectural{}); }
Expr sum_expr(Expr left, Expr right) { return Expr(Sum{std::move(left), std::move(right)}); }
Expr product_expr(Expr left, Expr right) { return Expr(Product{std::move(left), std::move(right)}); }
Expr power_expr(Expr base, std::uint64_t exponent) { return Expr(Power{std::move(base), exponent}); }

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         expected + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class TokenKind { kNumber, kIdent, kPlus, kStar, kCaret, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset;  // 1-based
};

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kNumber:
      return "number " + std::string(token.text);
    case TokenKind::kIdent:
      return "identifier '" + std::string(token.text) + "'";
    default:
      return "'" + std::string(token.text) + "'";
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Produces tokens on demand so that a bad byte is only reported once the
// parser reaches it.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
    if (pos_ == src_.size()) return {TokenKind::kEnd, {}, src_.size() + 1};

    const std::size_t start = pos_;
    const char c = src_[pos_];
    TokenKind kind;
    if (is_digit(c)) {
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      kind = TokenKind::kNumber;
    } else if (is_alpha(c)) {
      while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
      kind = TokenKind::kIdent;
    } else {
      switch (c) {
        case '+': kind = TokenKind::kPlus; break;
        case '*': kind = TokenKind::kStar; break;
        case '^': kind = TokenKind::kCaret; break;
        case '(': kind = TokenKind::kLParen; break;
        case ')': kind = TokenKind::kRParen; break;
        default: throw ParseError(start + 1, "a token", describe_byte(c));
      }
      ++pos_;
    }
    return {kind, src_.substr(start, pos_ - start), start + 1};
  }

 private:
  static std::string describe_byte(char c) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x20 && byte < 0x7f) return std::string("character '") + c + "'";
    char buf[16];
    std::snprintf(buf, sizeof buf, "byte 0x%02x", byte);
    return buf;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

struct Parsed {
  Expr expr;
  std::size_t depth;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src), current_(lexer_.next()) {}

  Expr parse_all() {
    Parsed result = parse_expr();
    if (peek().kind != TokenKind::kEnd) {
      throw ParseError(peek().offset, "'+', '*' or end of input", describe(peek()));
    }
    return std::move(result.expr);
  }

 private:
  const Token& peek() const { return current_; }
  Token advance() {
    Token taken = current_;
    current_ = lexer_.next();
    return taken;
  }

  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) throw ParseError(peek().offset, what, describe(peek()));
    advance();
  }

  std::uint64_t expect_nat() {
    const Token token = peek();
    if (token.kind != TokenKind::kNumber) {
      throw ParseError(token.offset, "a natural number", describe(token));
    }
    std::uint64_t value = 0;
    for (char c : token.text) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > kMaxLiteral) {
        throw ParseError(token.offset, "a natural number <= " + std::to_string(kMaxLiteral),
                         describe(token));
      }
    }
    advance();
    return value;
  }

  std::size_t check_depth(std::size_t depth, std::size_t offset) const {
    if (depth > kMaxDepth) {
      throw ParseError(offset, "an expression nested at most " + std::to_string(kMaxDepth) + " deep",
                       "deeper nesting");
    }
    return depth;
  }

  Parsed parse_expr() {
    Parsed lhs = parse_term();
    while (peek().kind == TokenKind::kPlus) {
      const std::size_t at = advance().offset;
      Parsed rhs = parse_term();
      const std::size_t depth = check_depth(std::max(lhs.depth, rhs.depth) + 1, at);
      lhs = {sum_expr(std::move(lhs.expr), std::move(rhs.expr)), depth};
    }
    return lhs;
  }

  Parsed parse_term() {
    Parsed lhs = parse_factor();
    while (peek().kind == TokenKind::kStar) {
      const std::size_t at = advance().offset;
      Parsed rhs = parse_factor();
      const std::size_t depth = check_depth(std::max(lhs.depth, rhs.depth) + 1, at);
      lhs = {product_expr(std::move(lhs.expr), std::move(rhs.expr)), depth};
    }
    return lhs;
  }

  Parsed parse_factor() {
    Parsed base = parse_atom();
    if (peek().kind == TokenKind::kCaret) {
      const std::size_t at = advance().offset;
      const std::uint64_t exponent = expect_nat();
      const std::size_t depth = check_depth(base.depth + 1, at);
      base = {power_expr(std::move(base.expr), exponent), depth};
    }
    return base;
  }

  Parsed parse_atom() {
    const Token token = peek();
    switch (token.kind) {
      case TokenKind::kNumber:
        if (token.text == "1") {
          advance();
          return {unit_expr(), 0};
        }
        break;
      case TokenKind::kIdent: {
        const std::string_view name = token.text;
        if (name == "L") {
          advance();
          return {lefschetz_expr(1), 0};
        }
        if (name == "h1") {
          advance();
          return {lambda_expr(1), 0};
        }
        if (name == "C") {
          advance();
          return {curve_expr(), 0};
        }
        if (name == "M") {
          advance();
          return {moduli_expr(), 0};
        }
        if (name == "Mconj") {
          advance();
          return {moduli_conj_expr(), 0};
        }
        if (name == "lam" || name == "Sym") {
          advance();
          expect(TokenKind::kLParen, "'('");
          const std::uint64_t n = expect_nat();
          expect(TokenKind::kRParen, "')'");
          return {name == "lam" ? lambda_expr(n) : sym_expr(n), 0};
        }
        break;
      }
      case TokenKind::kLParen: {
        advance();
        if (++nesting_ > kMaxDepth) {
          throw ParseError(token.offset, "at most " + std::to_string(kMaxDepth) + " nested parentheses",
                           "deeper nesting");
        }
        Parsed inner = parse_expr();
        expect(TokenKind::kRParen, "')'");
        --nesting_;
        return inner;
      }
      default:
        break;
    }
    throw ParseError(token.offset, "an atom (1, L, h1, lam(n), C, Sym(n), M, Mconj or '(')",
                     describe(token));
  }

  Lexer lexer_;
  Token current_;
  std::size_t nesting_ = 0;
};

// Binding strength of the printed form of a node.
enum Precedence : int { kSum = 1, kProduct = 2, kPower = 3, kAtom = 4 };

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Sum>) return kSum;
        else if constexpr (std::is_same_v<T, Product>) return kProduct;
        else if constexpr (std::is_same_v<T, Power>) return kPower;
        else if constexpr (std::is_same_v<T, Lefschetz>) return n.power == 1 ? kAtom : kPower;
        else return kAtom;
      },
      static_cast<const Node::variant&>(e.node()));
}

void print_to(const Expr& e, int required, std::string& out);

void print_node(const Expr& e, std::string& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Unit>) {
          out += "1";
        } else if constexpr (std::is_same_v<T, Lefschetz>) {
          out += "L";
          if (n.power != 1) out += "^" + std::to_string(n.power);
        } else if constexpr (std::is_same_v<T, LambdaH1>) {
          out += n.index == 1 ? std::string("h1") : "lam(" + std::to_string(n.index) + ")";
        } else if constexpr (std::is_same_v<T, Curve>) {
          out += "C";
        } else if constexpr (std::is_same_v<T, SymPower>) {
          out += "Sym(" + std::to_string(n.n) + ")";
        } else if constexpr (std::is_same_v<T, ModuliDelBano>) {
          out += "M";
        } else if constexpr (std::is_same_v<T, ModuliConjectural>) {
          out += "Mconj";
        } else if constexpr (std::is_same_v<T, Sum>) {
          print_to(n.left, kSum, out);
          out += " + ";
          print_to(n.right, kProduct, out);
        } else if constexpr (std::is_same_v<T, Product>) {
          print_to(n.left, kProduct, out);
          out += " * ";
          print_to(n.right, kPower, out);
        } else if constexpr (std::is_same_v<T, Power>) {
          print_to(n.base, kAtom, out);
          out += "^" + std::to_string(n.exponent);
        }
      },
      static_cast<const Node::variant&>(e.node()));
}

void print_to(const Expr& e, int required, std::string& out) {
  if (precedence(e) < required) {
    out += "(";
    print_node(e, out);
    out += ")";
  } else {
    print_node(e, out);
  }
}

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  print_to(e, kSum, out);
  return out;
}

MotiveClass evaluate(const Expr& e, Genus g) {
  require_genus(g);
  return std::visit(
      [&e, g](const auto& n) -> MotiveClass {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Unit>) {
          return unit(g);
        } else if constexpr (std::is_same_v<T, Lefschetz>) {
          return lefschetz(g, n.power);
        } else if constexpr (std::is_same_v<T, LambdaH1>) {
          return lambda_h1(g, n.index);
        } else if constexpr (std::is_same_v<T, Curve>) {
          return sym_power_curve(1, g);
        } else if constexpr (std::is_same_v<T, SymPower>) {
          return sym_power_curve(n.n, g);
        } else if constexpr (std::is_same_v<T, ModuliDelBano>) {
          return moduli_motive_delbano(g);
        } else if constexpr (std::is_same_v<T, ModuliConjectural>) {
          return moduli_motive_conjectural(g);
        } else if constexpr (std::is_same_v<T, Sum>) {
          return direct_sum(evaluate(n.left, g), evaluate(n.right, g));
        } else if constexpr (std::is_same_v<T, Product>) {
          const MotiveClass left = evaluate(n.left, g);
          const MotiveClass right = evaluate(n.right, g);
          if (!left.is_tate() && !right.is_tate()) throw NonTateTensor(print(e));
          return tensor(left, right);
        } else {
          const MotiveClass base = evaluate(n.base, g);
          if (n.exponent >= 2 && !base.is_tate()) throw NonTateTensor(print(e));
          return tensor_power(base, n.exponent);
        }
      },
      static_cast<const Node::variant&>(e.node()));
}

}  // namespace motivic::dsl
