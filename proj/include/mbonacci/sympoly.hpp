#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mbonacci/bigint.hpp"

namespace mbonacci {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Dense fixed-capacity exponent vector. Ordered lexicographically with the
/// first variable most significant.
class Exponents {
 public:
  Exponents() = default;
  explicit Exponents(std::size_t size);
  Exponents(std::initializer_list<std::uint32_t> values);

  std::size_t size() const { return size_; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const;
  bool weakly_decreasing() const;

  std::span<const std::uint32_t> view() const { return {e_.data(), size_}; }

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Exponents& a,
                                          const Exponents& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::size_t size_ = 0;
};

/// Sparse polynomial over Z in a fixed number of variables. Terms are kept
/// in strictly decreasing lex order with no zero coefficients, so terms()[0]
/// is the leading term.
class MultivariatePoly {
 public:
  using Term = std::pair<Exponents, BigInt>;

  explicit MultivariatePoly(std::size_t num_vars);

  static MultivariatePoly constant(std::size_t num_vars, const BigInt& c);
  static MultivariatePoly variable(std::size_t num_vars, std::size_t index);
  static MultivariatePoly monomial(const Exponents& exps, const BigInt& c);
  /// Sorts, merges duplicates and drops zeros.
  static MultivariatePoly from_terms(std::size_t num_vars,
                                     std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponents& exps) const;
  std::string to_string() const;

  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) {
    return a += b;
  }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) {
    return a -= b;
  }
  friend MultivariatePoly operator*(const MultivariatePoly& a,
                                    const MultivariatePoly& b);
  friend MultivariatePoly operator*(const BigInt& c, const MultivariatePoly& p);
  friend bool operator==(const MultivariatePoly& a, const MultivariatePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  MultivariatePoly pow(std::uint32_t n) const;

 private:
  std::size_t num_vars_;
  std::vector<Term> terms_;
};

/// Polynomial in the elementary generators e_1..e_m; a key's entry k-1 is
/// the exponent of e_k.
class EPolynomial {
 public:
  explicit EPolynomial(std::size_t m) : m_(m) {}

  std::size_t m() const { return m_; }
  const std::map<Exponents, BigInt, std::greater<>>& terms() const { return terms_; }
  void add_term(const Exponents& exps, const BigInt& c);

  /// Substitutes numbers for e_1..e_m (values[k-1] for e_k).
  BigInt evaluate(std::span<const BigInt> values) const;
  /// Expands through elementary_poly back into m variables.
  MultivariatePoly expand() const;
  std::string to_string() const;

  friend bool operator==(const EPolynomial&, const EPolynomial&) = default;

 private:
  std::size_t m_;
  std::map<Exponents, BigInt, std::greater<>> terms_;
};

/// Number of length-m compositions of n, C(n+m-1, m-1).
BigInt composition_count(std::uint64_t n, std::size_t m);

/// Visits every length-m vector of non-negative integers summing to n, in
/// increasing lex order. Throws CapExceeded when the count exceeds cap.
void for_each_composition(std::uint64_t n, std::size_t m,
                          const std::function<void(const Exponents&)>& visit,
                          std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Exponents> compositions(std::uint64_t n, std::size_t m,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Sum of x^c over all compositions c of n into m parts (h_n as a formal
/// polynomial).
MultivariatePoly nested_sum_poly(std::uint64_t n, std::size_t m,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// e_k in m variables; zero when k > m.
MultivariatePoly elementary_poly(std::size_t k, std::size_t m);

bool is_symmetric(const MultivariatePoly& f);

/// Fundamental theorem of symmetric polynomials via lex-leading-term
/// elimination. Throws NotSymmetric for non-symmetric input.
EPolynomial reduce_to_e_basis(const MultivariatePoly& f);

/// reduce_to_e_basis(nested_sum_poly(n, m)) evaluated at vieta(m).
BigInt nested_sum_exact(std::uint64_t n, std::size_t m,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// Checks h_{n+1}(a,b,c) == c h_n(a,b,c) + sum_{i=0..n} a^i b^{n+1-i} + a^{n+1}
/// as an identity in three generic variables.
bool verify_u_step(std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mbonacci
