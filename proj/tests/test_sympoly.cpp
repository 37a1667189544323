#include <doctest.h>

#include <random>

#include "mbonacci/error.hpp"
#include "mbonacci/symmetric_core.hpp"
#include "mbonacci/sympoly.hpp"
#include "oracles.hpp"

using namespace mbonacci;

namespace mbonacci::detail {
EPolynomial reduce_expanded(const MultivariatePoly& f);
}

namespace {

MultivariatePoly x(std::size_t nvars, std::size_t i) { return MultivariatePoly::variable(nvars, i); }

MultivariatePoly random_poly(std::mt19937& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<std::uint32_t> ex(0, 3);
  std::uniform_int_distribution<int> count(0, 6);
  std::vector<MultivariatePoly::Term> terms;
  for (int t = count(rng); t > 0; --t) {
    Exponents e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = ex(rng);
    terms.emplace_back(e, coef(rng));
  }
  return MultivariatePoly::from_terms(nvars, std::move(terms));
}

EPolynomial e_poly(std::size_t m, std::initializer_list<std::pair<Exponents, long>> terms) {
  EPolynomial p(m);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("compositions examples") {
  const auto c = compositions(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Exponents{0, 2});
  CHECK(c[1] == Exponents{1, 1});
  CHECK(c[2] == Exponents{2, 0});
  CHECK(compositions(3, 3).size() == 10);
  CHECK(compositions(0, 4) == std::vector<Exponents>{Exponents{0, 0, 0, 0}});
  CHECK(compositions(5, 1) == std::vector<Exponents>{Exponents{5}});
}

TEST_CASE("compositions are exhaustive, distinct and lex ordered") {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::uint64_t n = 0; n <= 7; ++n) {
      const auto c = compositions(n, m);
      CHECK(c.size() == oracle::count_compositions(n, m));
      CHECK(BigInt(static_cast<unsigned long>(c.size())) == composition_count(n, m));
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].degree() == n);
        if (i > 0) CHECK(c[i - 1] < c[i]);
      }
    }
  }
}

TEST_CASE("composition cap") {
  CHECK_THROWS_AS(compositions(3, 3, 9), CapExceeded);
  CHECK_NOTHROW(compositions(3, 3, 10));
  try {
    nested_sum_poly(40, 10);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.count() == binomial(49, 9));
    CHECK(std::string(e.what()).find(binomial(49, 9).get_str()) != std::string::npos);
  }
}

TEST_CASE("nested_sum_poly examples") {
  const std::size_t m = 3;
  const auto a = x(m, 0), b = x(m, 1), c = x(m, 2);
  CHECK(nested_sum_poly(2, 3) == a * a + b * b + c * c + a * b + a * c + b * c);
  CHECK(nested_sum_poly(0, 3) == MultivariatePoly::constant(3, 1));
  CHECK(nested_sum_poly(3, 3) == a.pow(3) + b.pow(3) + c.pow(3) + a * a * b + a * b * b +
                                     a * a * c + a * c * c + b * b * c + b * c * c + a * b * c);
}

TEST_CASE("nested_sum_poly term count and coefficients") {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const auto p = nested_sum_poly(n, m);
      CHECK(BigInt(static_cast<unsigned long>(p.term_count())) == composition_count(n, m));
      for (const auto& [e, coef] : p.terms()) CHECK(coef == 1);
    }
  }
}

TEST_CASE("elementary_poly examples") {
  const auto a = x(3, 0), b = x(3, 1), c = x(3, 2);
  CHECK(elementary_poly(2, 3) == a * b + a * c + b * c);
  CHECK(elementary_poly(0, 4) == MultivariatePoly::constant(4, 1));
  CHECK(elementary_poly(3, 3) == a * b * c);
  CHECK(elementary_poly(5, 3).is_zero());
}

TEST_CASE("is_symmetric examples") {
  CHECK(is_symmetric(nested_sum_poly(5, 3)));
  CHECK_FALSE(is_symmetric(x(3, 0) * x(3, 0) * x(3, 1)));
  CHECK(is_symmetric(elementary_poly(2, 4)));
  CHECK(is_symmetric(MultivariatePoly(3)));
}

TEST_CASE("reduce_to_e_basis examples") {
  const auto a = x(3, 0), b = x(3, 1), c = x(3, 2);
  // p_2 -> e1^2 - 2 e2
  CHECK(reduce_to_e_basis(a * a + b * b + c * c) ==
        e_poly(3, {{Exponents{2, 0, 0}, 1}, {Exponents{0, 1, 0}, -2}}));
  // h_2 -> e1^2 - e2
  CHECK(reduce_to_e_basis(nested_sum_poly(2, 3)) ==
        e_poly(3, {{Exponents{2, 0, 0}, 1}, {Exponents{0, 1, 0}, -1}}));
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      Exponents gen(m);
      gen[k - 1] = 1;
      CHECK(reduce_to_e_basis(elementary_poly(k, m)) == e_poly(m, {{gen, 1}}));
    }
  }
}

TEST_CASE("reduce_to_e_basis rejects non-symmetric input") {
  const auto a = x(3, 0), b = x(3, 1);
  CHECK_THROWS_AS(reduce_to_e_basis(a * a * b), NotSymmetric);
  CHECK_THROWS_AS(reduce_to_e_basis(b), NotSymmetric);
  CHECK_THROWS_AS(reduce_to_e_basis(nested_sum_poly(3, 3) + a), NotSymmetric);
}

TEST_CASE("round trip through the e basis") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const auto f = nested_sum_poly(n, m);
      CHECK(f.terms().front().first.weakly_decreasing());
      CHECK(reduce_to_e_basis(f).expand() == f);
    }
    for (std::size_t k = 0; k <= m; ++k) {
      const auto f = elementary_poly(k, m);
      CHECK(reduce_to_e_basis(f).expand() == f);
    }
  }
}

TEST_CASE("projected elimination agrees with the expanded algorithm") {
  std::mt19937 rng(7);
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      CHECK(reduce_to_e_basis(nested_sum_poly(n, m)) ==
            detail::reduce_expanded(nested_sum_poly(n, m)));
    }
    // Symmetrized random inputs, including inhomogeneous ones.
    for (int trial = 0; trial < 10; ++trial) {
      MultivariatePoly g = random_poly(rng, m);
      MultivariatePoly sym(m);
      // Sum over all permutations of the variables.
      std::vector<std::size_t> perm(m);
      for (std::size_t i = 0; i < m; ++i) perm[i] = i;
      do {
        std::vector<MultivariatePoly::Term> terms;
        for (const auto& [e, coef] : g.terms()) {
          Exponents pe(m);
          for (std::size_t i = 0; i < m; ++i) pe[perm[i]] = e[i];
          terms.emplace_back(pe, coef);
        }
        sym += MultivariatePoly::from_terms(m, std::move(terms));
      } while (std::next_permutation(perm.begin(), perm.end()));
      REQUIRE(is_symmetric(sym));
      const auto reduced = reduce_to_e_basis(sym);
      CHECK(reduced == detail::reduce_expanded(sym));
      CHECK(reduced.expand() == sym);
    }
  }
}

TEST_CASE("nested_sum_exact examples") {
  CHECK(nested_sum_exact(3, 3) == 4);
  CHECK(nested_sum_exact(0, 5) == 1);
  CHECK(nested_sum_exact(2, 4) == 2);
}

TEST_CASE("nested_sum_exact agrees with h_sequence for m <= 6, n <= 20") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto h = h_sequence(m, 20).values;
    for (std::uint64_t n = 0; n <= 20; ++n) CHECK(nested_sum_exact(n, m) == h[n]);
  }
}

TEST_CASE("verify_u_step") {
  CHECK(verify_u_step(0));
  CHECK(verify_u_step(1));
  for (std::uint64_t n = 2; n <= 30; ++n) CHECK(verify_u_step(n));
  CHECK_THROWS_AS(verify_u_step(10, 20), CapExceeded);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 3);
    const auto q = random_poly(rng, 3);
    const auto r = random_poly(rng, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    for (const auto& [e, c] : (p * q).terms()) CHECK(c != 0);
  }
}

TEST_CASE("polynomial rendering") {
  const auto a = x(2, 0), b = x(2, 1);
  CHECK((a * a - BigInt(3) * b + MultivariatePoly::constant(2, 2)).to_string() ==
        "x1^2 - 3*x2 + 2");
  CHECK(MultivariatePoly(2).to_string() == "0");
  CHECK(reduce_to_e_basis(nested_sum_poly(2, 3)).to_string() == "e1^2 - e2");
}
