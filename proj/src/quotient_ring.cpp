#include "mbonacci/quotient_ring.hpp"

#include <string>

#include "mbonacci/error.hpp"

namespace mbonacci {

namespace {

std::size_t storage_size(std::size_t m, unsigned arity) {
  return arity == 1 ? m : m * (m - 1);
}

void check_shape(std::size_t m, unsigned arity) {
  if (m < 2) throw InvalidSpec("ring order must be at least 2");
  if (arity != 1 && arity != 2) throw ShapeMismatch("arity must be 1 or 2");
}

// Rewrites x^d for d >= m as x^{d-1} + ... + x^{d-m}, top-down.
void reduce_dense(std::vector<BigInt>& c, std::size_t m) {
  for (std::size_t d = c.size(); d-- > m;) {
    if (c[d] == 0) continue;
    for (std::size_t k = 1; k <= m; ++k) c[d - k] += c[d];
    c[d] = 0;
  }
}

RingElement mul_arity1(const RingElement& a, const RingElement& b);

// Coefficients q_1(a), ..., q_{m-1}(a) of q_m(a,x) = x^{m-1} + q_1 x^{m-2} +
// ... + q_{m-1}, by synthetic division of p_m(x) by (x - a).
std::vector<RingElement> divided_difference(std::size_t m) {
  const RingElement a = RingElement::from_poly(m, {BigInt(0), BigInt(1)});
  std::vector<RingElement> q;
  RingElement prev = RingElement::unit(m, 1);
  for (std::size_t k = 1; k < m; ++k) {
    RingElement next = mul_arity1(a, prev);
    next -= RingElement::unit(m, 1);
    q.push_back(next);
    prev = std::move(next);
  }
  return q;
}

}  // namespace

RingElement::RingElement(std::size_t m, unsigned arity)
    : m_(m), arity_(arity), coeffs_() {
  check_shape(m, arity);
  coeffs_.resize(storage_size(m, arity));
}

RingElement RingElement::unit(std::size_t m, unsigned arity) {
  RingElement u(m, arity);
  u.coeffs_[0] = 1;
  return u;
}

RingElement RingElement::from_poly(std::size_t m, std::vector<BigInt> coeffs) {
  RingElement out(m, 1);
  reduce_dense(coeffs, m);
  for (std::size_t i = 0; i < m && i < coeffs.size(); ++i) out.coeffs_[i] = coeffs[i];
  return out;
}

const BigInt& RingElement::coefficient(std::size_t i) const {
  if (arity_ != 1 || i >= m_) throw ShapeMismatch("coefficient index out of range");
  return coeffs_[i];
}

const BigInt& RingElement::coefficient(std::size_t i, std::size_t j) const {
  if (arity_ != 2 || i >= m_ || j + 1 >= m_) {
    throw ShapeMismatch("coefficient index out of range");
  }
  return coeffs_[i * (m_ - 1) + j];
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (o.m_ != m_ || o.arity_ != arity_) throw ShapeMismatch("ring shapes differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  if (o.m_ != m_ || o.arity_ != arity_) throw ShapeMismatch("ring shapes differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

namespace {

RingElement mul_arity1(const RingElement& a, const RingElement& b) {
  const std::size_t m = a.m();
  std::vector<BigInt> full(2 * m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      mpz_addmul(full[i + j].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return RingElement::from_poly(m, std::move(full));
}

}  // namespace

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.m_ != b.m_ || a.arity_ != b.arity_) throw ShapeMismatch("ring shapes differ");
  if (a.arity_ == 1) return mul_arity1(a, b);

  // Arity 2 as polynomials in b with coefficients in Z[a]/(p_m(a)).
  const std::size_t m = a.m_;
  const std::size_t w = m - 1;
  auto rows_of = [&](const RingElement& u) {
    std::vector<RingElement> rows(w, RingElement(m, 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < w; ++j) rows[j].coeffs_[i] = u.coeffs_[i * w + j];
    }
    return rows;
  };
  const auto ra = rows_of(a);
  const auto rb = rows_of(b);
  std::vector<RingElement> full(2 * w - 1, RingElement(m, 1));
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < w; ++j) full[i + j] += mul_arity1(ra[i], rb[j]);
  }
  // b^{m-1} = -(q_1 b^{m-2} + ... + q_{m-1}), applied top-down.
  const std::vector<RingElement> q = divided_difference(m);
  for (std::size_t d = full.size(); d-- > w;) {
    const RingElement top = full[d];
    for (std::size_t k = 1; k <= w; ++k) full[d - k] -= mul_arity1(q[k - 1], top);
    full[d] = RingElement(m, 1);
  }
  RingElement out(m, 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < w; ++j) out.coeffs_[i * w + j] = full[j].coeffs_[i];
  }
  return out;
}

RingElement RingElement::basis(std::size_t m, std::size_t i, std::size_t j) {
  RingElement out(m, 2);
  if (i >= m || j + 1 >= m) throw ShapeMismatch("basis exponent out of range");
  out.coeffs_[i * (m - 1) + j] = 1;
  return out;
}

RingElement generator(std::size_t m, unsigned arity, unsigned slot) {
  if (slot < 1 || slot > arity) {
    throw ShapeMismatch("slot " + std::to_string(slot) + " out of range for arity " +
                        std::to_string(arity));
  }
  if (arity == 1) return RingElement::from_poly(m, {BigInt(0), BigInt(1)});
  if (slot == 1) return RingElement::basis(m, 1, 0);
  if (m > 2) return RingElement::basis(m, 0, 1);
  // m = 2: q_2(a,b) = b + a - 1, so b = 1 - a.
  return RingElement::unit(m, 2) - RingElement::basis(m, 1, 0);
}

RingElement ring_mul(const RingElement& u, const RingElement& v) { return u * v; }

RingElement ring_pow(const RingElement& u, std::uint64_t n) {
  RingElement result = RingElement::unit(u.m(), u.arity());
  RingElement base = u;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

BigInt ring_trace(const RingElement& u) {
  if (u.arity() != 1) throw ShapeMismatch("trace is defined on the arity-1 ring");
  const std::size_t m = u.m();
  const RingElement x = generator(m, 1, 1);
  BigInt t;
  RingElement column = u;  // u * x^j
  for (std::size_t j = 0; j < m; ++j) {
    t += column.coefficient(j);
    column = column * x;
  }
  return t;
}

RingElement layer_sum(std::uint64_t n, std::size_t m) {
  if (n < 1) throw RangeError("layer sums start at n = 1");
  const RingElement a = generator(m, 2, 1);
  const RingElement b = generator(m, 2, 2);
  RingElement total(m, 2);
  for (std::uint64_t i = 0; i < n; ++i) total += ring_pow(a, i) * ring_pow(b, n - i);
  return total;
}

bool verify_layer_identity(std::uint64_t n, std::size_t m) {
  RingElement rhs(m, 2);
  for (std::size_t k = 1; k <= m; ++k) rhs += layer_sum(n + k, m);
  return layer_sum(n + m + 1, m) == rhs;
}

}  // namespace mbonacci
