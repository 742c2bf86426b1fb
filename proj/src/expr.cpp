#include "gcf_forge/expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t offset;
};

const char* describe(Tok type) {
  switch (type) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < source.size()) {
    const char ch = source[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      tokens.push_back({Tok::Number, std::string(source.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < source.size() &&
             (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
        ++i;
      }
      tokens.push_back({Tok::Ident, std::string(source.substr(start, i - start)), start});
      continue;
    }
    Tok type;
    switch (ch) {
      case '+': type = Tok::Plus; break;
      case '-': type = Tok::Minus; break;
      case '*': type = Tok::Star; break;
      case '/': type = Tok::Slash; break;
      case '^': type = Tok::Caret; break;
      case '(': type = Tok::LParen; break;
      case ')': type = Tok::RParen; break;
      default:
        throw Error(ErrorCode::Syntax, std::string("unexpected character '") + ch + "'", start);
    }
    tokens.push_back({type, std::string(1, ch), start});
    ++i;
  }
  tokens.push_back({Tok::End, "", source.size()});
  return tokens;
}

std::string lowercase(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return text;
}

// Recursive descent shared by both grammars. Semantics::Value is the node
// type; the Semantics object builds values and validates operands.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?
//   primary := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'
template <class Semantics>
class Parser {
 public:
  using Value = typename Semantics::Value;

  Parser(std::string_view source, Semantics semantics)
      : tokens_(tokenize(source)), semantics_(std::move(semantics)) {}

  Value parse() {
    Value value = expr();
    if (peek().type != Tok::End) {
      throw Error(ErrorCode::Syntax, std::string("unexpected ") + describe(peek().type),
                  peek().offset);
    }
    return value;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  void expect(Tok type) {
    if (peek().type != type) {
      throw Error(ErrorCode::Syntax,
                  std::string("expected ") + describe(type) + ", found " + describe(peek().type),
                  peek().offset);
    }
    ++pos_;
  }

  Value expr() {
    Value acc = term();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      const Token op = advance();
      Value rhs = term();
      acc = semantics_.binary(op, std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Value term() {
    Value acc = unary();
    while (peek().type == Tok::Star || peek().type == Tok::Slash) {
      const Token op = advance();
      Value rhs = unary();
      acc = semantics_.binary(op, std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Value unary() {
    if (peek().type == Tok::Minus) {
      const Token op = advance();
      return semantics_.negate(op, unary());
    }
    if (peek().type == Tok::Plus) {
      advance();
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek().type == Tok::Caret) {
      const Token op = advance();
      const std::size_t exponent_offset = peek().offset;
      Value exponent = unary();
      return semantics_.power(op, std::move(base), std::move(exponent), exponent_offset);
    }
    return base;
  }

  Value primary() {
    const Token& token = peek();
    switch (token.type) {
      case Tok::Number:
        advance();
        return semantics_.number(token);
      case Tok::Ident: {
        const Token name = advance();
        if (peek().type == Tok::LParen) {
          advance();
          Value argument = expr();
          expect(Tok::RParen);
          return semantics_.call(name, std::move(argument));
        }
        return semantics_.symbol(name);
      }
      case Tok::LParen: {
        advance();
        Value inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw Error(ErrorCode::Syntax, std::string("unexpected ") + describe(token.type),
                    token.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Semantics semantics_;
};

constexpr long kMaxPolynomialExponent = 4096;

struct PolynomialSemantics {
  using Value = Polynomial;

  Value number(const Token& token) { return Polynomial::constant(BigRational(BigInteger(token.text))); }

  Value symbol(const Token& token) {
    if (token.text == "n") return Polynomial::variable();
    throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + token.text + "' (only n is allowed)",
                token.offset);
  }

  Value call(const Token& name, Value) {
    throw Error(ErrorCode::UnknownSymbol, "functions are not allowed in polynomials: '" + name.text + "'",
                name.offset);
  }

  Value negate(const Token&, Value operand) { return -operand; }

  Value binary(const Token& op, Value lhs, Value rhs) {
    switch (op.type) {
      case Tok::Plus: return lhs + rhs;
      case Tok::Minus: return lhs - rhs;
      case Tok::Star: return lhs * rhs;
      case Tok::Slash:
        if (rhs.degree() >= 1) {
          throw Error(ErrorCode::NonPolynomial, "division by a term containing n", op.offset);
        }
        if (rhs.is_zero()) throw Error(ErrorCode::Syntax, "division by zero", op.offset);
        return BigRational(1 / rhs.leading()) * lhs;
      default:
        throw Error(ErrorCode::Syntax, "unexpected operator", op.offset);
    }
  }

  Value power(const Token&, Value base, Value exponent, std::size_t exponent_offset) {
    if (exponent.degree() >= 1) {
      throw Error(ErrorCode::NonPolynomial, "exponent contains n", exponent_offset);
    }
    const BigRational e = exponent.leading();
    if (e.get_den() != 1) {
      throw Error(ErrorCode::NonPolynomial, "exponent must be an integer", exponent_offset);
    }
    if (e < 0) throw Error(ErrorCode::NonPolynomial, "negative exponent", exponent_offset);
    if (e > kMaxPolynomialExponent) {
      throw Error(ErrorCode::Syntax, "exponent too large", exponent_offset);
    }
    return gcf_forge::power(base, static_cast<unsigned>(e.get_num().get_ui()));
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view source) {
  return Parser<PolynomialSemantics>(source, PolynomialSemantics{}).parse();
}

// ---------------------------------------------------------------------------
// ConstantExpr

struct ConstantExpr::Node {
  Kind kind;
  BigRational value;
  long exponent = 0;
  std::optional<ConstantExpr> lhs;
  std::optional<ConstantExpr> rhs;
};

ConstantExpr ConstantExpr::literal(const BigRational& value) {
  return ConstantExpr(std::make_shared<const Node>(Node{Kind::Literal, value, 0, {}, {}}));
}

ConstantExpr ConstantExpr::pi() {
  return ConstantExpr(std::make_shared<const Node>(Node{Kind::Pi, 0, 0, {}, {}}));
}

ConstantExpr ConstantExpr::negate(ConstantExpr operand) {
  return ConstantExpr(std::make_shared<const Node>(Node{Kind::Negate, 0, 0, std::move(operand), {}}));
}

ConstantExpr ConstantExpr::sqrt(ConstantExpr operand) {
  return ConstantExpr(std::make_shared<const Node>(Node{Kind::Sqrt, 0, 0, std::move(operand), {}}));
}

ConstantExpr ConstantExpr::binary(Kind kind, ConstantExpr lhs, ConstantExpr rhs) {
  return ConstantExpr(
      std::make_shared<const Node>(Node{kind, 0, 0, std::move(lhs), std::move(rhs)}));
}

ConstantExpr ConstantExpr::power(ConstantExpr base, long exponent) {
  return ConstantExpr(
      std::make_shared<const Node>(Node{Kind::Power, 0, exponent, std::move(base), {}}));
}

ConstantExpr::Kind ConstantExpr::kind() const { return node_->kind; }
const BigRational& ConstantExpr::value() const { return node_->value; }
long ConstantExpr::exponent() const { return node_->exponent; }
const ConstantExpr& ConstantExpr::lhs() const { return *node_->lhs; }
const ConstantExpr& ConstantExpr::rhs() const { return *node_->rhs; }

bool operator==(const ConstantExpr& x, const ConstantExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case ConstantExpr::Kind::Literal: return x.value() == y.value();
    case ConstantExpr::Kind::Pi: return true;
    case ConstantExpr::Kind::Negate:
    case ConstantExpr::Kind::Sqrt: return x.lhs() == y.lhs();
    case ConstantExpr::Kind::Power: return x.exponent() == y.exponent() && x.lhs() == y.lhs();
    default: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

namespace {

int precedence(const ConstantExpr& e) {
  using K = ConstantExpr::Kind;
  switch (e.kind()) {
    case K::Add:
    case K::Subtract: return 1;
    case K::Multiply:
    case K::Divide: return 2;
    case K::Negate: return 3;
    case K::Power: return 4;
    case K::Literal:
      // Negative or fractional literals only arise programmatically and print as
      // a quotient or negation, so they bind like one.
      if (e.value() < 0) return 3;
      return e.value().get_den() == 1 ? 5 : 2;
    default: return 5;
  }
}

std::string wrap(const ConstantExpr& e, bool parenthesize) {
  return parenthesize ? "(" + e.to_string() + ")" : e.to_string();
}

}  // namespace

std::string ConstantExpr::to_string() const {
  const int prec = precedence(*this);
  switch (kind()) {
    case Kind::Literal: return value().get_str();
    case Kind::Pi: return "pi";
    case Kind::Sqrt: return "sqrt(" + lhs().to_string() + ")";
    case Kind::Negate: return "-" + wrap(lhs(), precedence(lhs()) < prec);
    case Kind::Power: return wrap(lhs(), precedence(lhs()) <= prec) + "^" + std::to_string(exponent());
    default: {
      const char* op = kind() == Kind::Add        ? " + "
                       : kind() == Kind::Subtract ? " - "
                       : kind() == Kind::Multiply ? "*"
                                                  : "/";
      return wrap(lhs(), precedence(lhs()) < prec) + op + wrap(rhs(), precedence(rhs()) <= prec);
    }
  }
}

namespace {

struct ConstantSemantics {
  using Value = ConstantExpr;

  Value number(const Token& token) { return ConstantExpr::literal(BigRational(BigInteger(token.text))); }

  Value symbol(const Token& token) {
    if (lowercase(token.text) == "pi") return ConstantExpr::pi();
    throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + token.text + "'", token.offset);
  }

  Value call(const Token& name, Value argument) {
    if (lowercase(name.text) == "sqrt") return ConstantExpr::sqrt(std::move(argument));
    throw Error(ErrorCode::UnknownSymbol, "unknown function '" + name.text + "'", name.offset);
  }

  Value negate(const Token&, Value operand) { return ConstantExpr::negate(std::move(operand)); }

  Value binary(const Token& op, Value lhs, Value rhs) {
    using K = ConstantExpr::Kind;
    const K kind = op.type == Tok::Plus    ? K::Add
                   : op.type == Tok::Minus ? K::Subtract
                   : op.type == Tok::Star  ? K::Multiply
                                           : K::Divide;
    return ConstantExpr::binary(kind, std::move(lhs), std::move(rhs));
  }

  Value power(const Token&, Value base, Value exponent, std::size_t exponent_offset) {
    std::optional<BigRational> e;
    try {
      e = exact_value(exponent);
    } catch (const Error& err) {
      throw Error(err.code(), "exponent is undefined", exponent_offset);
    }
    if (!e || e->get_den() != 1 || !e->get_num().fits_slong_p()) {
      throw Error(ErrorCode::Syntax, "exponent must be an integer", exponent_offset);
    }
    return ConstantExpr::power(std::move(base), e->get_num().get_si());
  }
};

}  // namespace

ConstantExpr parse_const_expr(std::string_view source) {
  return Parser<ConstantSemantics>(source, ConstantSemantics{}).parse();
}

std::optional<BigRational> exact_value(const ConstantExpr& expr) {
  using K = ConstantExpr::Kind;
  switch (expr.kind()) {
    case K::Literal: return expr.value();
    case K::Pi:
    case K::Sqrt: return std::nullopt;
    case K::Negate: {
      auto v = exact_value(expr.lhs());
      if (!v) return std::nullopt;
      return BigRational(-*v);
    }
    case K::Power: {
      auto base = exact_value(expr.lhs());
      if (!base) return std::nullopt;
      const long e = expr.exponent();
      if (e < 0 && *base == 0) throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
      BigRational result = 1;
      const BigRational factor = e < 0 ? BigRational(1 / *base) : *base;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) result *= factor;
      return result;
    }
    default: {
      auto lhs = exact_value(expr.lhs());
      auto rhs = exact_value(expr.rhs());
      if (!lhs || !rhs) return std::nullopt;
      switch (expr.kind()) {
        case K::Add: return BigRational(*lhs + *rhs);
        case K::Subtract: return BigRational(*lhs - *rhs);
        case K::Multiply: return BigRational(*lhs * *rhs);
        default:
          if (*rhs == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
          return BigRational(*lhs / *rhs);
      }
    }
  }
}

namespace {

PrecisionReal evaluate_node(const ConstantExpr& expr, mpfr_prec_t bits) {
  using K = ConstantExpr::Kind;
  switch (expr.kind()) {
    case K::Literal: return rational_to_real(expr.value(), bits);
    case K::Pi: return PrecisionReal::pi(bits);
    case K::Negate: return -evaluate_node(expr.lhs(), bits);
    case K::Sqrt: return sqrt(evaluate_node(expr.lhs(), bits));
    case K::Power: return pow(evaluate_node(expr.lhs(), bits), expr.exponent());
    case K::Add: return evaluate_node(expr.lhs(), bits) + evaluate_node(expr.rhs(), bits);
    case K::Subtract: return evaluate_node(expr.lhs(), bits) - evaluate_node(expr.rhs(), bits);
    case K::Multiply: return evaluate_node(expr.lhs(), bits) * evaluate_node(expr.rhs(), bits);
    case K::Divide: return evaluate_node(expr.lhs(), bits) / evaluate_node(expr.rhs(), bits);
  }
  throw Error(ErrorCode::Precondition, "unknown expression node");
}

}  // namespace

PrecisionReal eval_const_expr(const ConstantExpr& expr, mpfr_prec_t precision_bits) {
  if (precision_bits < 8) throw Error(ErrorCode::Precondition, "precision must be at least 8 bits");
  // Exactly rational targets are rounded once; everything else carries guard bits.
  if (auto exact = exact_value(expr)) return rational_to_real(*exact, precision_bits);
  return evaluate_node(expr, precision_bits + 32).with_precision(precision_bits);
}

}  // namespace gcf_forge
