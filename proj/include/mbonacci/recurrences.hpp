#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mbonacci/bigint.hpp"

namespace mbonacci {

enum class Family { tribonacci, fibonacci, conjectureV, paddedW, custom };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Order-m linear recurrence a_n = sum_{k=1..m} c_k a_{n-k} with explicit
/// initial terms a_0..a_{m-1}. coefficients[k-1] multiplies a_{n-k}.
class RecurrenceSpec {
 public:
  RecurrenceSpec(std::vector<BigInt> coefficients,
                 std::vector<BigInt> initial_terms,
                 Family label = Family::custom);

  std::size_t order() const { return coefficients_.size(); }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  const std::vector<BigInt>& initial_terms() const { return initial_terms_; }
  Family label() const { return label_; }

 private:
  std::vector<BigInt> coefficients_;
  std::vector<BigInt> initial_terms_;
  Family label_;
};

/// Canonical all-ones recurrence of the given family.
///
/// conjectureV starts 0, 1, ..., 1. paddedW is the zero-padded m-bonacci
/// sequence W_j = 0 (j <= 0), W_1 = 1, W_j = W_{j-1} + ... + W_{j-m}; its
/// head is 0, 1, 1, 2, 4, ..., 2^{m-2}.
RecurrenceSpec make_family(Family label, std::size_t m);

/// n-th term by forward iteration over a rolling window of m values.
BigInt term(const RecurrenceSpec& spec, std::uint64_t n);

/// n-th term by square-and-multiply powering of the companion matrix.
BigInt term_fast(const RecurrenceSpec& spec, std::uint64_t n);

/// Terms lo..hi inclusive. Throws RangeError when lo > hi.
std::vector<BigInt> window(const RecurrenceSpec& spec, std::uint64_t lo,
                           std::uint64_t hi);

/// Dense square matrix of big integers.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim);
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  BigInt trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t dim_;
  std::vector<BigInt> data_;
};

using CompanionMatrix = IntMatrix;

/// Top row = coefficients, ones on the subdiagonal.
CompanionMatrix companion_matrix(const RecurrenceSpec& spec);
/// Companion matrix of x^m - x^{m-1} - ... - 1.
CompanionMatrix companion_matrix(std::size_t m);

IntMatrix companion_power(const CompanionMatrix& mat, std::uint64_t n);

}  // namespace mbonacci
