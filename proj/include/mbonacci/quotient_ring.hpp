#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mbonacci/bigint.hpp"

namespace mbonacci {

/// Residue class in Z[x]/(p_m(x)) (arity 1) or in the ring of two distinct
/// roots Z[a,b]/(p_m(a), q_m(a,b)) (arity 2), where p_m(x) = x^m - x^{m-1} -
/// ... - 1 and q_m(a,x) = p_m(x)/(x - a) is monic of degree m-1 in x.
///
/// p_m(b) = (b - a) q_m(a,b) vanishes, so b is a root as well; the extra
/// relation excludes the diagonal a = b, on which sums such as
/// sum_i a^i b^{n-i} degenerate to (n+1) a^n.
///
/// Coefficients are stored fully reduced: a-exponents < m, b-exponents
/// < m-1. For arity 2 the coefficient of a^i b^j lives at index i*(m-1) + j.
class RingElement {
 public:
  RingElement(std::size_t m, unsigned arity);

  static RingElement unit(std::size_t m, unsigned arity);
  /// Reduces an arbitrary arity-1 coefficient list (ascending powers).
  static RingElement from_poly(std::size_t m, std::vector<BigInt> coeffs);
  /// Class of a^i b^j, i < m, j < m-1.
  static RingElement basis(std::size_t m, std::size_t i, std::size_t j);

  std::size_t m() const { return m_; }
  unsigned arity() const { return arity_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coefficient(std::size_t i) const;
  const BigInt& coefficient(std::size_t i, std::size_t j) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::size_t m_;
  unsigned arity_;
  std::vector<BigInt> coeffs_;
};

/// Class of the indeterminate in the given slot (1-based).
RingElement generator(std::size_t m, unsigned arity, unsigned slot);

RingElement ring_mul(const RingElement& u, const RingElement& v);
RingElement ring_pow(const RingElement& u, std::uint64_t n);

/// Trace of multiplication by u on the arity-1 ring, as a free Z-module
/// with basis 1, x, ..., x^{m-1}.
BigInt ring_trace(const RingElement& u);

/// S_n = sum_{i=0..n-1} a^i b^{n-i} in the arity-2 ring. Requires n >= 1.
RingElement layer_sum(std::uint64_t n, std::size_t m);

/// S_{n+m+1} == S_{n+1} + ... + S_{n+m}.
bool verify_layer_identity(std::uint64_t n, std::size_t m);

}  // namespace mbonacci
