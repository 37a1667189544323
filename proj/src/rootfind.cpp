#include "mbonacci/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mbonacci/error.hpp"

namespace mbonacci {

std::vector<BigInt> char_poly(std::size_t m) {
  if (m < 2) throw InvalidSpec("order must be at least 2");
  std::vector<BigInt> c(m + 1, BigInt(-1));
  c[0] = 1;
  return c;
}

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<double>& coeffs, cplx z) {
  cplx acc = 0.0;
  for (double c : coeffs) acc = acc * z + c;
  return acc;
}

// Kahan-Babuska-Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double get() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

RootSet find_roots(std::size_t m, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw RangeError("root tolerance must be positive");
  std::vector<double> coeffs;
  for (const BigInt& c : char_poly(m)) coeffs.push_back(c.get_d());

  RootSet rs;
  rs.m = m;
  rs.roots.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 0.4 + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(m);
    rs.roots[k] = std::polar(1.5, angle);
  }

  for (rs.iterations = 0; rs.iterations < max_iter;) {
    ++rs.iterations;
    double max_update = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      cplx denom = 1.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) denom *= rs.roots[k] - rs.roots[j];
      }
      const cplx update = horner(coeffs, rs.roots[k]) / denom;
      rs.roots[k] -= update;
      max_update = std::max(max_update, std::abs(update));
    }
    if (max_update < tol) {
      rs.converged = true;
      break;
    }
  }

  auto key = [](const cplx& z) {
    return std::pair(-std::round(std::abs(z) * 1e9), -z.imag());
  };
  std::sort(rs.roots.begin(), rs.roots.end(),
            [&](const cplx& a, const cplx& b) { return key(a) < key(b); });
  for (const cplx& r : rs.roots) rs.residuals.push_back(std::abs(horner(coeffs, r)));
  return rs;
}

std::vector<double> vieta_residuals(const RootSet& rs) {
  const std::size_t m = rs.roots.size();
  // Expand prod (x - r_i); c[k] is the coefficient of x^{m-k}.
  std::vector<cplx> c(m + 1, 0.0);
  c[0] = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) c[k] -= rs.roots[i] * c[k - 1];
  }
  std::vector<double> out(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const cplx e_k = (k % 2 == 0) ? c[k] : -c[k];
    const double expected = (k % 2 == 1) ? 1.0 : -1.0;
    out[k - 1] = std::abs(e_k - expected);
  }
  return out;
}

NumericSum numeric_nested_sum(const RootSet& rs, std::uint64_t n, std::uint64_t cap) {
  if (!rs.converged) throw NotConverged("root set did not converge");
  const std::size_t m = rs.roots.size();

  // powers[i][j] = root_i^j
  std::vector<std::vector<cplx>> powers(m, std::vector<cplx>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    powers[i][0] = 1.0;
    for (std::uint64_t j = 1; j <= n; ++j) powers[i][j] = powers[i][j - 1] * rs.roots[i];
  }

  CompensatedSum re;
  CompensatedSum im;
  CompensatedSum magnitude;
  NumericSum out;
  for_each_composition(
      n, m,
      [&](const Exponents& c) {
        cplx prod = powers[0][c[0]];
        for (std::size_t i = 1; i < m; ++i) prod *= powers[i][c[i]];
        re.add(prod.real());
        im.add(prod.imag());
        magnitude.add(std::abs(prod));
        ++out.terms;
      },
      cap);
  out.value = {re.get(), im.get()};
  out.error_estimate = static_cast<double>(m + n + 2) *
                       std::numeric_limits<double>::epsilon() * magnitude.get();
  return out;
}

}  // namespace mbonacci
