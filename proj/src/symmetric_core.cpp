#include "mbonacci/symmetric_core.hpp"

#include <algorithm>

#include "mbonacci/error.hpp"
#include "mbonacci/recurrences.hpp"
#include "mbonacci/rootfind.hpp"

namespace mbonacci {

BigInt VietaVector::at(std::size_t k) const {
  if (k == 0) return 1;
  if (k > m) return 0;
  return e[k - 1];
}

VietaVector vieta(std::size_t m) {
  if (m < 2) throw InvalidSpec("order must be at least 2");
  const std::vector<BigInt> coeffs = char_poly(m);
  VietaVector v{m, std::vector<BigInt>(m)};
  for (std::size_t k = 1; k <= m; ++k) {
    v.e[k - 1] = (k % 2 == 0) ? BigInt(coeffs[k]) : BigInt(-coeffs[k]);
  }
  return v;
}

HSequence h_sequence(std::size_t m, std::uint64_t n_max) {
  const VietaVector v = vieta(m);
  HSequence h{m, {}};
  h.values.reserve(n_max + 1);
  h.values.emplace_back(1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt acc;
    const std::uint64_t top = std::min<std::uint64_t>(n, m);
    for (std::uint64_t k = 1; k <= top; ++k) {
      if (k % 2 == 1) {
        mpz_addmul(acc.get_mpz_t(), v.e[k - 1].get_mpz_t(),
                   h.values[n - k].get_mpz_t());
      } else {
        mpz_submul(acc.get_mpz_t(), v.e[k - 1].get_mpz_t(),
                   h.values[n - k].get_mpz_t());
      }
    }
    h.values.push_back(std::move(acc));
  }
  return h;
}

PSequence power_sums(std::size_t m, std::uint64_t n_max) {
  const VietaVector v = vieta(m);
  PSequence p{m, {}};
  p.values.reserve(n_max + 1);
  p.values.emplace_back(static_cast<unsigned long>(m));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt acc;
    const std::uint64_t top = std::min<std::uint64_t>(n - 1, m);
    for (std::uint64_t k = 1; k <= top; ++k) {
      if (k % 2 == 1) {
        mpz_addmul(acc.get_mpz_t(), v.e[k - 1].get_mpz_t(),
                   p.values[n - k].get_mpz_t());
      } else {
        mpz_submul(acc.get_mpz_t(), v.e[k - 1].get_mpz_t(),
                   p.values[n - k].get_mpz_t());
      }
    }
    if (n <= m) {
      BigInt tail = v.e[n - 1] * static_cast<unsigned long>(n);
      if (n % 2 == 1) acc += tail; else acc -= tail;
    }
    p.values.push_back(std::move(acc));
  }
  return p;
}

std::vector<bool> identity_check(std::size_t m, std::uint64_t n_max) {
  const HSequence h = h_sequence(m, n_max);
  const std::vector<BigInt> w = window(make_family(Family::paddedW, m), 1, n_max + 1);
  std::vector<bool> out(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) out[n] = h.values[n] == w[n];
  return out;
}

bool newton_hp_consistent(std::size_t m, std::uint64_t n_max) {
  const HSequence h = h_sequence(m, n_max);
  const PSequence p = power_sums(m, n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt rhs;
    for (std::uint64_t k = 1; k <= n; ++k) {
      mpz_addmul(rhs.get_mpz_t(), p.values[k].get_mpz_t(),
                 h.values[n - k].get_mpz_t());
    }
    const BigInt nn(static_cast<unsigned long>(n));
    if (!mpz_divisible_p(rhs.get_mpz_t(), nn.get_mpz_t())) return false;
    if (rhs / nn != h.values[n]) return false;
  }
  return true;
}

}  // namespace mbonacci
