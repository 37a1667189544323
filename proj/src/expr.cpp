#include "mbonacci/expr.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "mbonacci/error.hpp"
#include "mbonacci/recurrences.hpp"
#include "mbonacci/symmetric_core.hpp"

namespace mbonacci::expr {

namespace {

constexpr std::string_view kFunctions = "ephTVWF";

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::end: return "end of input";
    case TokenKind::integer: return "integer '" + t.lexeme + "'";
    case TokenKind::identifier: return "identifier '" + t.lexeme + "'";
    default: return "'" + t.lexeme + "'";
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    const unsigned char ch = static_cast<unsigned char>(input[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      out.push_back({TokenKind::integer, std::string(input.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < input.size() && (std::isalnum(static_cast<unsigned char>(input[i])) ||
                                  input[i] == '_')) {
        ++i;
      }
      out.push_back({TokenKind::identifier, std::string(input.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (ch) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default:
        throw ExprError("unexpected character '" + std::string(1, static_cast<char>(ch)) +
                            "' at offset " + std::to_string(start),
                        start);
    }
    out.push_back({kind, std::string(1, static_cast<char>(ch)), start});
    ++i;
  }
  out.push_back({TokenKind::end, "", input.size()});
  return out;
}

bool operator==(const Node& a, const Node& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.arg == b.arg &&
         a.children == b.children;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::end) {
      throw ExprError("token stream must end with an end token", 0);
    }
    input_size_ = tokens_.back().offset;
  }

  Ast parse_all() {
    Ast root = expression();
    if (peek().kind != TokenKind::end) {
      fail("unexpected " + describe(peek()) + "; expected operator or end of input", peek());
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  // Offsets at end of input point at the last byte so they stay inside it.
  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    std::size_t off = at.offset;
    if (input_size_ > 0 && off >= input_size_) off = input_size_ - 1;
    throw ExprError(what + " at offset " + std::to_string(off), off);
  }

  static Node binary(NodeKind kind, Node lhs, Node rhs, std::size_t offset) {
    Node n{kind, {}, 0, 0, {}, offset};
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  Ast expression() {
    Node lhs = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = advance();
      Node rhs = term();
      lhs = binary(op.kind == TokenKind::plus ? NodeKind::add : NodeKind::sub,
                   std::move(lhs), std::move(rhs), op.offset);
    }
    return lhs;
  }

  Node term() {
    Node lhs = unary();
    while (peek().kind == TokenKind::star) {
      const Token& op = advance();
      Node rhs = unary();
      lhs = binary(NodeKind::mul, std::move(lhs), std::move(rhs), op.offset);
    }
    return lhs;
  }

  Node unary() {
    if (peek().kind == TokenKind::minus) {
      const Token& op = advance();
      Node n{NodeKind::neg, {}, 0, 0, {}, op.offset};
      n.children.push_back(unary());
      return n;
    }
    return factor();
  }

  Node factor() {
    Node base = atom();
    if (peek().kind != TokenKind::caret) return base;
    const Token& op = advance();
    const std::uint32_t exponent = small_integer("exponent");
    if (peek().kind == TokenKind::caret) {
      fail("chained '^' is ambiguous; add parentheses", peek());
    }
    Node n{NodeKind::pow, {}, 0, exponent, {}, op.offset};
    n.children.push_back(std::move(base));
    return n;
  }

  std::uint32_t small_integer(const char* what) {
    const Token& t = peek();
    if (t.kind != TokenKind::integer) {
      fail(std::string("expected non-negative integer ") + what + ", found " + describe(t), t);
    }
    const BigInt v(t.lexeme);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      fail(std::string(what) + " " + t.lexeme + " is too large", t);
    }
    advance();
    return static_cast<std::uint32_t>(v.get_ui());
  }

  Node atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer: {
        advance();
        return Node{NodeKind::int_lit, BigInt(t.lexeme), 0, 0, {}, t.offset};
      }
      case TokenKind::identifier: {
        if (t.lexeme.size() != 1 || kFunctions.find(t.lexeme[0]) == std::string_view::npos) {
          fail("unknown function '" + t.lexeme + "' (expected one of e, p, h, T, V, W, F)", t);
        }
        advance();
        if (peek().kind != TokenKind::lparen) {
          fail("expected '(' after function name, found " + describe(peek()), peek());
        }
        advance();
        const std::uint32_t arg = small_integer("argument");
        if (peek().kind != TokenKind::rparen) {
          fail("expected ')' after argument, found " + describe(peek()), peek());
        }
        advance();
        return Node{NodeKind::call, {}, t.lexeme[0], arg, {}, t.offset};
      }
      case TokenKind::lparen: {
        advance();
        Node inner = expression();
        if (peek().kind != TokenKind::rparen) {
          fail("expected ')' to close '(' at offset " + std::to_string(t.offset) +
                   ", found " + describe(peek()),
               peek());
        }
        advance();
        return inner;
      }
      default:
        fail("unexpected " + describe(t) + "; expected integer, function call or '('", t);
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::size_t input_size_ = 0;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul: return 2;
    case NodeKind::neg: return 3;
    case NodeKind::pow: return 4;
    default: return 5;
  }
}

void print(const Node& n, std::string& out);

void print_wrapped(const Node& n, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(n, out);
  if (wrap) out += ')';
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::int_lit: out += n.value.get_str(); return;
    case NodeKind::call:
      out += n.name;
      out += '(' + std::to_string(n.arg) + ')';
      return;
    case NodeKind::neg:
      out += '-';
      print_wrapped(n.children[0], precedence(n.children[0]) < 3, out);
      return;
    case NodeKind::pow:
      print_wrapped(n.children[0], precedence(n.children[0]) < 5, out);
      out += '^' + std::to_string(n.arg);
      return;
    case NodeKind::mul:
      print_wrapped(n.children[0], precedence(n.children[0]) < 2, out);
      out += '*';
      print_wrapped(n.children[1], precedence(n.children[1]) <= 2, out);
      return;
    case NodeKind::add:
    case NodeKind::sub:
      print(n.children[0], out);
      out += n.kind == NodeKind::add ? " + " : " - ";
      print_wrapped(n.children[1], precedence(n.children[1]) <= 1, out);
      return;
  }
}

BigInt call_value(const Node& n, std::size_t m) {
  const std::uint64_t k = n.arg;
  switch (n.name) {
    case 'e': return vieta(m).at(k);
    case 'p': return power_sums(m, k).values[k];
    case 'h': return h_sequence(m, k).values[k];
    case 'V': return term(make_family(Family::conjectureV, m), k);
    case 'W': return term(make_family(Family::paddedW, m), k);
    case 'T':
      if (m != 3) {
        throw ExprError("T(n) is defined only for m = 3 (got m = " + std::to_string(m) +
                            ") at offset " + std::to_string(n.offset),
                        n.offset);
      }
      return term(make_family(Family::tribonacci, 3), k);
    case 'F':
      if (m != 2) {
        throw ExprError("F(n) is defined only for m = 2 (got m = " + std::to_string(m) +
                            ") at offset " + std::to_string(n.offset),
                        n.offset);
      }
      return term(make_family(Family::fibonacci, 2), k);
    default:
      throw ExprError(std::string("unknown function '") + n.name + "'", n.offset);
  }
}

}  // namespace

Ast parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

Ast parse(std::string_view input) { return parse(tokenize(input)); }

std::string to_string(const Ast& ast) {
  std::string out;
  print(ast, out);
  return out;
}

BigInt evaluate(const Ast& ast, std::size_t m) {
  if (m < 2) throw InvalidSpec("order must be at least 2");
  switch (ast.kind) {
    case NodeKind::int_lit: return ast.value;
    case NodeKind::call: return call_value(ast, m);
    case NodeKind::neg: return -evaluate(ast.children[0], m);
    case NodeKind::add: return evaluate(ast.children[0], m) + evaluate(ast.children[1], m);
    case NodeKind::sub: return evaluate(ast.children[0], m) - evaluate(ast.children[1], m);
    case NodeKind::mul: return evaluate(ast.children[0], m) * evaluate(ast.children[1], m);
    case NodeKind::pow: {
      BigInt r;
      const BigInt base = evaluate(ast.children[0], m);
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), ast.arg);
      return r;
    }
  }
  throw InternalError("unhandled expression node");
}

BigInt evaluate(std::string_view input, std::size_t m) { return evaluate(parse(input), m); }

}  // namespace mbonacci::expr
