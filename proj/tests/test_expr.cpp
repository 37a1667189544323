#include <doctest.h>

#include <random>

#include "mbonacci/error.hpp"
#include "mbonacci/expr.hpp"
#include "mbonacci/sympoly.hpp"

using namespace mbonacci;
using namespace mbonacci::expr;

namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& ts) {
  std::vector<TokenKind> out;
  for (const auto& t : ts) out.push_back(t.kind);
  return out;
}

std::size_t error_offset(std::string_view input, std::size_t m = 3) {
  try {
    evaluate(input, m);
  } catch (const ExprError& e) {
    return e.offset();
  }
  FAIL("expected an ExprError for '" << std::string(input) << "'");
  return 0;
}

Node lit(long v) { return Node{NodeKind::int_lit, BigInt(v), 0, 0, {}, 0}; }
Node call(char name, std::uint32_t arg) { return Node{NodeKind::call, {}, name, arg, {}, 0}; }
Node bin(NodeKind k, Node a, Node b) {
  Node n{k, {}, 0, 0, {}, 0};
  n.children.push_back(std::move(a));
  n.children.push_back(std::move(b));
  return n;
}
Node power(Node base, std::uint32_t e) {
  Node n{NodeKind::pow, {}, 0, e, {}, 0};
  n.children.push_back(std::move(base));
  return n;
}
Node neg(Node a) {
  Node n{NodeKind::neg, {}, 0, 0, {}, 0};
  n.children.push_back(std::move(a));
  return n;
}

// Random well-formed tree with bounded depth.
Node random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  std::uniform_int_distribution<int> small(0, 12);
  const std::string_view names = "ephVW";
  switch (pick(rng)) {
    case 0: return lit(small(rng));
    case 1: return call(names[static_cast<std::size_t>(small(rng)) % names.size()],
                        static_cast<std::uint32_t>(small(rng)));
    case 2: return neg(random_tree(rng, depth - 1));
    case 3: return power(random_tree(rng, depth - 1), static_cast<std::uint32_t>(small(rng) % 4));
    case 4: return bin(NodeKind::add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5: return bin(NodeKind::sub, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    default: return bin(NodeKind::mul, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("tokenize examples") {
  const auto ts = tokenize("p(2)+e(2)");
  CHECK(kinds(ts) == std::vector<TokenKind>{TokenKind::identifier, TokenKind::lparen,
                                            TokenKind::integer, TokenKind::rparen,
                                            TokenKind::plus, TokenKind::identifier,
                                            TokenKind::lparen, TokenKind::integer,
                                            TokenKind::rparen, TokenKind::end});
  CHECK(ts[0].lexeme == "p");
  CHECK(ts[2].lexeme == "2");

  const auto hs = tokenize("h(10)^2");
  REQUIRE(hs.size() == 7);
  CHECK(hs[4].kind == TokenKind::caret);
  CHECK(hs[5].kind == TokenKind::integer);
  CHECK(hs[5].lexeme == "2");
  CHECK(hs[6].kind == TokenKind::end);

  try {
    tokenize("h(3) $");
    FAIL("expected lex error");
  } catch (const ExprError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("token positions strictly increase") {
  const auto ts = tokenize("  h(12) * -e(1)^3 + 123456789012345678901234567890");
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].offset < ts[i].offset);
  CHECK(ts[ts.size() - 2].lexeme == "123456789012345678901234567890");
}

TEST_CASE("parse examples") {
  CHECK(parse("p(2)+e(2)") == bin(NodeKind::add, call('p', 2), call('e', 2)));
  CHECK(parse("e(1)^2-2*e(2)") ==
        bin(NodeKind::sub, power(call('e', 1), 2), bin(NodeKind::mul, lit(2), call('e', 2))));
  CHECK_THROWS_AS(parse("2^3^2"), ExprError);
  CHECK(parse("(2^3)^2") == power(power(lit(2), 3), 2));
}

TEST_CASE("precedence") {
  // unary minus binds looser than ^ but tighter than *
  CHECK(parse("-2^2") == neg(power(lit(2), 2)));
  CHECK(parse("-2*3") == bin(NodeKind::mul, neg(lit(2)), lit(3)));
  CHECK(parse("1-2-3") == bin(NodeKind::sub, bin(NodeKind::sub, lit(1), lit(2)), lit(3)));
  CHECK(parse("1+2*3") == bin(NodeKind::add, lit(1), bin(NodeKind::mul, lit(2), lit(3))));
  CHECK(evaluate("-2^2", 3) == -4);
  CHECK(evaluate("1-2-3", 3) == -4);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("q(2)"), ExprError);
  CHECK_THROWS_AS(parse("(1+2"), ExprError);
  CHECK_THROWS_AS(parse("1+2)"), ExprError);
  CHECK_THROWS_AS(parse("e(-1)"), ExprError);
  CHECK_THROWS_AS(parse("e 1"), ExprError);
  CHECK_THROWS_AS(parse("2^-1"), ExprError);
  CHECK_THROWS_AS(parse(""), ExprError);
  CHECK_THROWS_AS(parse("h(99999999999)"), ExprError);
  CHECK_THROWS_AS(parse("ee(1)"), ExprError);
}

TEST_CASE("error offsets point inside the input") {
  for (std::string_view bad : {"q(2)", "(1+2", "1+2)", "e(-1)", "2^3^2", "h(3) $", "e(", "1 +",
                               "T(4)", "F(1)", ")"}) {
    const std::size_t off = error_offset(bad, 4);
    CHECK(off < bad.size());
  }
  CHECK(error_offset("1+2)") == 3);
  CHECK(error_offset("e(-1)") == 2);
  CHECK(error_offset("2^3^2") == 3);
  CHECK(error_offset("1 + T(4)", 4) == 4);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate("p(2)+e(2)", 3) == 2);
  CHECK(evaluate("e(1)", 3) == 1);
  CHECK(evaluate("h(2)", 4) - evaluate("V(3)", 4) == 1);
  CHECK(evaluate("e(1)*e(2)*e(3)", 3) == -1);
  CHECK(evaluate("e(7)", 5) == 0);
  CHECK(evaluate("e(0)", 5) == 1);
  CHECK(evaluate("T(10)", 3) == 149);
  CHECK(evaluate("F(10)", 2) == 55);
  CHECK(evaluate("W(5)", 4) == 8);
  CHECK(evaluate("h(3)-T(4)", 3) == 0);
  CHECK(evaluate("2^100", 3) == BigInt("1267650600228229401496703205376"));
  CHECK_THROWS_AS(evaluate("T(2)", 4), ExprError);
  CHECK_THROWS_AS(evaluate("F(2)", 3), ExprError);
  CHECK_THROWS_AS(evaluate("1", 1), InvalidSpec);
}

TEST_CASE("h(n) agrees with the enumeration oracle for m <= 6, n <= 20") {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::uint64_t n = 0; n <= 20; n += (m <= 4 ? 1 : 4)) {
      CHECK(evaluate("h(" + std::to_string(n) + ")", m) == nested_sum_exact(n, m));
    }
  }
}

TEST_CASE("Newton replay") {
  for (std::size_t m = 2; m <= 8; ++m) CHECK(evaluate("p(2) - (e(1)^2 - 2*e(2))", m) == 0);
}

TEST_CASE("pretty-print round trip on generated expressions") {
  std::mt19937 rng(12345);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Node tree = random_tree(rng, 4);
    const std::string text = to_string(tree);
    const Ast reparsed = parse(text);
    CHECK_MESSAGE(reparsed == tree, text);
    CHECK(to_string(reparsed) == text);
    ++checked;
  }
  CHECK(checked >= 50);
}
