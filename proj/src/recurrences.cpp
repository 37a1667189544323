#include "mbonacci/recurrences.hpp"

#include <string>

#include "mbonacci/error.hpp"

namespace mbonacci {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::tribonacci: return "tribonacci";
    case Family::fibonacci: return "fibonacci";
    case Family::conjectureV: return "conjectureV";
    case Family::paddedW: return "paddedW";
    case Family::custom: return "custom";
  }
  return "custom";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::tribonacci, Family::fibonacci, Family::conjectureV,
                   Family::paddedW, Family::custom}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

RecurrenceSpec::RecurrenceSpec(std::vector<BigInt> coefficients,
                               std::vector<BigInt> initial_terms, Family label)
    : coefficients_(std::move(coefficients)),
      initial_terms_(std::move(initial_terms)),
      label_(label) {
  if (coefficients_.size() < 2) {
    throw InvalidSpec("recurrence order must be at least 2");
  }
  if (initial_terms_.size() != coefficients_.size()) {
    throw InvalidSpec("expected " + std::to_string(coefficients_.size()) +
                      " initial terms, got " +
                      std::to_string(initial_terms_.size()));
  }
}

RecurrenceSpec make_family(Family label, std::size_t m) {
  if (m < 2) throw InvalidSpec("order must be at least 2");
  if (label == Family::tribonacci && m != 3) {
    throw InvalidSpec("tribonacci requires m = 3, got " + std::to_string(m));
  }
  if (label == Family::fibonacci && m != 2) {
    throw InvalidSpec("fibonacci requires m = 2, got " + std::to_string(m));
  }
  if (label == Family::custom) {
    throw InvalidSpec("custom recurrences have no canonical initial terms");
  }

  std::vector<BigInt> ones(m, BigInt(1));
  std::vector<BigInt> init(m);
  if (label == Family::conjectureV) {
    for (std::size_t j = 1; j < m; ++j) init[j] = 1;
  } else {
    // Zero-padded head: W_0 = 0, W_1 = 1, W_j = sum of the previous m terms
    // with negative indices read as 0. Tribonacci and Fibonacci coincide
    // with it at their orders.
    init[1] = 1;
    for (std::size_t j = 2; j < m; ++j) {
      for (std::size_t k = 1; k <= m && k <= j; ++k) init[j] += init[j - k];
    }
  }
  return RecurrenceSpec(std::move(ones), std::move(init), label);
}

namespace {

// Iterates the recurrence, calling emit(n, a_n) for n = 0..hi.
template <typename Emit>
void iterate(const RecurrenceSpec& spec, std::uint64_t hi, Emit&& emit) {
  const std::size_t m = spec.order();
  const auto& c = spec.coefficients();
  // buf[(n) % m] holds a_n for the last m indices.
  std::vector<BigInt> buf(spec.initial_terms());
  for (std::uint64_t n = 0; n < m && n <= hi; ++n) emit(n, buf[n]);
  BigInt next;
  for (std::uint64_t n = m; n <= hi; ++n) {
    next = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      const BigInt& prev = buf[(n - k) % m];
      if (c[k - 1] == 1) {
        next += prev;
      } else {
        mpz_addmul(next.get_mpz_t(), c[k - 1].get_mpz_t(), prev.get_mpz_t());
      }
    }
    buf[n % m].swap(next);
    emit(n, buf[n % m]);
  }
}

}  // namespace

BigInt term(const RecurrenceSpec& spec, std::uint64_t n) {
  BigInt out;
  iterate(spec, n, [&](std::uint64_t i, const BigInt& v) {
    if (i == n) out = v;
  });
  return out;
}

std::vector<BigInt> window(const RecurrenceSpec& spec, std::uint64_t lo,
                           std::uint64_t hi) {
  if (lo > hi) {
    throw RangeError("window lower bound " + std::to_string(lo) +
                     " exceeds upper bound " + std::to_string(hi));
  }
  std::vector<BigInt> out;
  out.reserve(hi - lo + 1);
  iterate(spec, hi, [&](std::uint64_t i, const BigInt& v) {
    if (i >= lo) out.push_back(v);
  });
  return out;
}

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix id(dim);
  for (std::size_t i = 0; i < dim; ++i) id(i, i) = 1;
  return id;
}

BigInt IntMatrix::trace() const {
  BigInt t;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw ShapeMismatch("matrix dimensions differ");
  const std::size_t d = a.dim_;
  IntMatrix r(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const BigInt& bkj = b(k, j);
        if (bkj == 0) continue;
        mpz_addmul(r(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return r;
}

CompanionMatrix companion_matrix(const RecurrenceSpec& spec) {
  const std::size_t m = spec.order();
  CompanionMatrix c(m);
  for (std::size_t j = 0; j < m; ++j) c(0, j) = spec.coefficients()[j];
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = 1;
  return c;
}

CompanionMatrix companion_matrix(std::size_t m) {
  return companion_matrix(make_family(Family::paddedW, m));
}

IntMatrix companion_power(const CompanionMatrix& mat, std::uint64_t n) {
  IntMatrix result = IntMatrix::identity(mat.dim());
  IntMatrix base = mat;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

BigInt term_fast(const RecurrenceSpec& spec, std::uint64_t n) {
  // State s_k = (a_{k+m-1}, ..., a_k); s_n = C^n s_0 and a_n is its last entry.
  const std::size_t m = spec.order();
  const IntMatrix p = companion_power(companion_matrix(spec), n);
  const auto& init = spec.initial_terms();
  BigInt out;
  for (std::size_t j = 0; j < m; ++j) {
    mpz_addmul(out.get_mpz_t(), p(m - 1, j).get_mpz_t(),
               init[m - 1 - j].get_mpz_t());
  }
  return out;
}

}  // namespace mbonacci
