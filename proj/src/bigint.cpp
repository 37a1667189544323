#include "mbonacci/bigint.hpp"

#include <limits>

namespace mbonacci {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::uint64_t clamp_to_u64(const BigInt& v) {
  if (v <= 0) return 0;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace mbonacci
