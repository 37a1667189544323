#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbonacci/bigint.hpp"

namespace mbonacci::expr {

enum class TokenKind { integer, identifier, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view input);

enum class NodeKind { int_lit, call, neg, add, sub, mul, pow };

/// Expression tree. Call nodes carry a function name from {e,p,h,T,V,W,F}
/// and a literal argument; Pow nodes keep the exponent in `arg`.
struct Node {
  NodeKind kind;
  BigInt value;                // int_lit
  char name = 0;               // call
  std::uint32_t arg = 0;       // call argument / pow exponent
  std::vector<Node> children;  // operands
  std::size_t offset = 0;      // source position, ignored by ==

  friend bool operator==(const Node& a, const Node& b);
};

using Ast = Node;

Ast parse(const std::vector<Token>& tokens);
Ast parse(std::string_view input);

/// Minimal-parenthesis rendering that parses back to an equal tree.
std::string to_string(const Ast& ast);

BigInt evaluate(const Ast& ast, std::size_t m);
BigInt evaluate(std::string_view input, std::size_t m);

}  // namespace mbonacci::expr
