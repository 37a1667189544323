#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mbonacci {

/// Arbitrary-precision signed integer used for every exact quantity.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Saturating conversion; values above UINT64_MAX clamp.
std::uint64_t clamp_to_u64(const BigInt& v);

}  // namespace mbonacci
