#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mbonacci/bigint.hpp"

namespace mbonacci {

/// Elementary symmetric functions e_1..e_m of the roots of
/// x^m - x^{m-1} - ... - x - 1; e[k-1] holds e_k.
struct VietaVector {
  std::size_t m;
  std::vector<BigInt> e;

  /// e_k with the conventions e_0 = 1 and e_k = 0 for k > m.
  BigInt at(std::size_t k) const;
};

/// Complete homogeneous symmetric values h_0..h_N of the roots.
struct HSequence {
  std::size_t m;
  std::vector<BigInt> values;
};

/// Power sums p_0..p_N of the roots, p_0 = m.
struct PSequence {
  std::size_t m;
  std::vector<BigInt> values;
};

/// Derived from the characteristic coefficients by sign flipping
/// (x^m + a_1 x^{m-1} + ... + a_m gives e_k = (-1)^k a_k).
VietaVector vieta(std::size_t m);

/// h_n = sum_{k=1..min(n,m)} (-1)^{k+1} e_k h_{n-k}, h_0 = 1.
HSequence h_sequence(std::size_t m, std::uint64_t n_max);

/// Newton's identities from vieta(m).
PSequence power_sums(std::size_t m, std::uint64_t n_max);

/// Entry n is true iff h_n equals the (n+1)-th zero-padded m-bonacci term.
std::vector<bool> identity_check(std::size_t m, std::uint64_t n_max);

/// Checks n h_n == sum_{k=1..n} p_k h_{n-k} for every n <= n_max, asserting
/// exact divisibility of the right-hand side by n.
bool newton_hp_consistent(std::size_t m, std::uint64_t n_max);

}  // namespace mbonacci
