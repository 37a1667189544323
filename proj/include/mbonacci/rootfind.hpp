#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mbonacci/bigint.hpp"
#include "mbonacci/sympoly.hpp"

namespace mbonacci {

/// Coefficients of x^m - x^{m-1} - ... - x - 1 in descending degree.
std::vector<BigInt> char_poly(std::size_t m);

struct RootSet {
  std::size_t m = 0;
  /// Dominant root first, the rest by decreasing modulus then imaginary part.
  std::vector<std::complex<double>> roots;
  /// |p_m(root)| per root.
  std::vector<double> residuals;
  std::size_t iterations = 0;
  bool converged = false;

  const std::complex<double>& dominant() const { return roots.front(); }
};

/// Durand-Kerner iteration from guesses 1.5 * exp(i (0.4 + 2 pi k / m)).
/// converged is set iff the largest update falls below tol within max_iter.
RootSet find_roots(std::size_t m, double tol = 1e-12, std::size_t max_iter = 500);

/// Entry k-1 is |e_k(roots) - (-1)^{k+1}|.
std::vector<double> vieta_residuals(const RootSet& rs);

struct NumericSum {
  std::complex<double> value;
  /// Rounding bound from term magnitudes: (m + n + 2) * eps * sum |term|.
  double error_estimate = 0.0;
  std::uint64_t terms = 0;
};

/// Direct compensated summation of root-power products over compositions.
NumericSum numeric_nested_sum(const RootSet& rs, std::uint64_t n,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mbonacci
