#include "mbonacci/sympoly.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "mbonacci/error.hpp"
#include "mbonacci/symmetric_core.hpp"

namespace mbonacci {

Exponents::Exponents(std::size_t size) : size_(size) {
  if (size > kMaxVars) {
    throw RangeError("at most " + std::to_string(kMaxVars) +
                     " variables are supported, got " + std::to_string(size));
  }
}

Exponents::Exponents(std::initializer_list<std::uint32_t> values)
    : Exponents(values.size()) {
  std::copy(values.begin(), values.end(), e_.begin());
}

std::uint64_t Exponents::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += e_[i];
  return d;
}

bool Exponents::weakly_decreasing() const {
  for (std::size_t i = 1; i < size_; ++i) {
    if (e_[i] > e_[i - 1]) return false;
  }
  return true;
}

namespace {

bool term_before(const MultivariatePoly::Term& a, const MultivariatePoly::Term& b) {
  return a.first > b.first;
}

void append_monomial(std::ostringstream& os, const Exponents& e, char var) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << var << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
  }
  if (first) os << '1';
}

template <typename Range>
std::string render_terms(const Range& terms, char var) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool constant = e.degree() == 0;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(c);
    if (constant) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    append_monomial(os, e, var);
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

MultivariatePoly::MultivariatePoly(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars > kMaxVars) {
    throw RangeError("at most " + std::to_string(kMaxVars) + " variables supported");
  }
}

MultivariatePoly MultivariatePoly::constant(std::size_t num_vars, const BigInt& c) {
  MultivariatePoly p(num_vars);
  if (c != 0) p.terms_.emplace_back(Exponents(num_vars), c);
  return p;
}

MultivariatePoly MultivariatePoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw RangeError("variable index out of range");
  Exponents e(num_vars);
  e[index] = 1;
  return monomial(e, 1);
}

MultivariatePoly MultivariatePoly::monomial(const Exponents& exps, const BigInt& c) {
  MultivariatePoly p(exps.size());
  if (c != 0) p.terms_.emplace_back(exps, c);
  return p;
}

MultivariatePoly MultivariatePoly::from_terms(std::size_t num_vars,
                                              std::vector<Term> terms) {
  MultivariatePoly p(num_vars);
  for (const auto& t : terms) {
    if (t.first.size() != num_vars) {
      throw ShapeMismatch("exponent vector length differs from variable count");
    }
  }
  if (!std::is_sorted(terms.begin(), terms.end(), term_before)) {
    std::sort(terms.begin(), terms.end(), term_before);
  }
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigInt MultivariatePoly::coefficient(const Exponents& exps) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exps,
      [](const Term& t, const Exponents& key) { return t.first > key; });
  if (it != terms_.end() && it->first == exps) return it->second;
  return 0;
}

std::string MultivariatePoly::to_string() const { return render_terms(terms_, 'x'); }

namespace {

template <bool Subtract>
std::vector<MultivariatePoly::Term> merge(const std::vector<MultivariatePoly::Term>& a,
                                          const std::vector<MultivariatePoly::Term>& b) {
  std::vector<MultivariatePoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first > j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first > i->first) {
      out.emplace_back(j->first, Subtract ? BigInt(-j->second) : j->second);
      ++j;
    } else {
      BigInt c = Subtract ? BigInt(i->second - j->second) : BigInt(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  if (o.num_vars_ != num_vars_) throw ShapeMismatch("variable counts differ");
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) {
  if (o.num_vars_ != num_vars_) throw ShapeMismatch("variable counts differ");
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  if (a.num_vars_ != b.num_vars_) throw ShapeMismatch("variable counts differ");
  std::vector<MultivariatePoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.num_vars_);
      for (std::size_t i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      prod.emplace_back(e, ca * cb);
    }
  }
  return MultivariatePoly::from_terms(a.num_vars_, std::move(prod));
}

MultivariatePoly operator*(const BigInt& c, const MultivariatePoly& p) {
  MultivariatePoly out(p.num_vars_);
  if (c == 0) return out;
  out.terms_ = p.terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

MultivariatePoly MultivariatePoly::pow(std::uint32_t n) const {
  MultivariatePoly result = constant(num_vars_, 1);
  MultivariatePoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

void EPolynomial::add_term(const Exponents& exps, const BigInt& c) {
  if (exps.size() != m_) throw ShapeMismatch("e-exponent length differs from m");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt EPolynomial::evaluate(std::span<const BigInt> values) const {
  if (values.size() < m_) throw ShapeMismatch("need a value for every generator");
  BigInt total;
  BigInt power;
  for (const auto& [a, c] : terms_) {
    BigInt prod = c;
    for (std::size_t k = 0; k < m_; ++k) {
      if (a[k] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), values[k].get_mpz_t(), a[k]);
      prod *= power;
    }
    total += prod;
  }
  return total;
}

MultivariatePoly EPolynomial::expand() const {
  MultivariatePoly out(m_);
  for (const auto& [a, c] : terms_) {
    MultivariatePoly prod = MultivariatePoly::constant(m_, c);
    for (std::size_t k = 0; k < m_; ++k) {
      if (a[k] > 0) prod = prod * elementary_poly(k + 1, m_).pow(a[k]);
    }
    out += prod;
  }
  return out;
}

std::string EPolynomial::to_string() const { return render_terms(terms_, 'e'); }

BigInt composition_count(std::uint64_t n, std::size_t m) {
  if (m == 0) return n == 0 ? 1 : 0;
  return binomial(n + m - 1, m - 1);
}

void for_each_composition(std::uint64_t n, std::size_t m,
                          const std::function<void(const Exponents&)>& visit,
                          std::uint64_t cap) {
  if (m == 0) throw RangeError("compositions need at least one part");
  BigInt count = composition_count(n, m);
  if (count > BigInt(std::to_string(cap))) throw CapExceeded(std::move(count), cap);
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw RangeError("composition total too large");
  }

  // Odometer over the first m-1 parts; the last part takes the remainder.
  Exponents c(m);
  c[m - 1] = static_cast<std::uint32_t>(n);
  std::uint64_t prefix = 0;  // sum of parts 0..m-2
  while (true) {
    c[m - 1] = static_cast<std::uint32_t>(n - prefix);
    visit(c);
    if (m == 1) return;
    // Increment the lowest free part that can grow; reset those after it.
    std::size_t i = m - 2;
    while (true) {
      if (prefix < n) {
        ++c[i];
        ++prefix;
        break;
      }
      prefix -= c[i];
      c[i] = 0;
      if (i == 0) return;
      --i;
    }
  }
}

std::vector<Exponents> compositions(std::uint64_t n, std::size_t m, std::uint64_t cap) {
  std::vector<Exponents> out;
  for_each_composition(n, m, [&](const Exponents& c) { out.push_back(c); }, cap);
  return out;
}

MultivariatePoly nested_sum_poly(std::uint64_t n, std::size_t m, std::uint64_t cap) {
  std::vector<MultivariatePoly::Term> terms;
  for_each_composition(n, m, [&](const Exponents& c) { terms.emplace_back(c, 1); }, cap);
  std::reverse(terms.begin(), terms.end());  // already distinct and lex sorted
  return MultivariatePoly::from_terms(m, std::move(terms));
}

MultivariatePoly elementary_poly(std::size_t k, std::size_t m) {
  MultivariatePoly p(m);
  if (k > m) return p;
  std::vector<MultivariatePoly::Term> terms;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Exponents e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = pick[i] ? 1 : 0;
    terms.emplace_back(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return MultivariatePoly::from_terms(m, std::move(terms));
}

namespace {

Exponents sorted_desc(Exponents e) {
  std::sort(&e[0], &e[0] + e.size(), std::greater<>());
  return e;
}

// Number of distinct permutations of a weakly decreasing exponent vector.
BigInt orbit_size(const Exponents& lambda) {
  BigInt size;
  mpz_fac_ui(size.get_mpz_t(), lambda.size());
  std::size_t run = 1;
  BigInt f;
  for (std::size_t i = 1; i <= lambda.size(); ++i) {
    if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
      ++run;
      continue;
    }
    mpz_fac_ui(f.get_mpz_t(), run);
    size /= f;
    run = 1;
  }
  return size;
}

}  // namespace

// Symmetric iff every orbit under permutation of the variables is fully
// present with a single coefficient; adjacent transpositions generate the
// group, so this matches checking each transposition.
bool is_symmetric(const MultivariatePoly& f) {
  struct Orbit {
    const BigInt* coefficient;
    std::uint64_t seen = 0;
  };
  std::map<Exponents, Orbit> orbits;
  for (const auto& [e, c] : f.terms()) {
    auto [it, inserted] = orbits.try_emplace(sorted_desc(e), Orbit{&c});
    if (!inserted && *it->second.coefficient != c) return false;
    ++it->second.seen;
  }
  for (const auto& [lambda, orbit] : orbits) {
    if (orbit_size(lambda) != static_cast<unsigned long>(orbit.seen)) return false;
  }
  return true;
}

namespace {

// Bound on elimination steps: one per monomial of each degree present.
std::uint64_t step_bound(const MultivariatePoly& f) {
  std::vector<std::uint64_t> degrees;
  for (const auto& t : f.terms()) degrees.push_back(t.first.degree());
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  BigInt total;
  for (auto d : degrees) total += composition_count(d, f.num_vars());
  return clamp_to_u64(total + 1);
}

// e-exponents a_k = lambda_k - lambda_{k+1} of the product whose lead is lambda.
Exponents gauss_exponents(const Exponents& lead) {
  const std::size_t m = lead.size();
  Exponents a(m);
  for (std::size_t k = 0; k < m; ++k) {
    a[k] = lead[k] - (k + 1 < m ? lead[k + 1] : 0);
  }
  return a;
}

// A symmetric polynomial restricted to its weakly decreasing exponents,
// which determine it completely.
using Projection = std::map<Exponents, BigInt, std::greater<>>;

class ElementaryProducts {
 public:
  explicit ElementaryProducts(std::size_t m) : m_(m), subsets_(m + 1) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      subsets_[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
  }

  // Projection of prod_k e_k^{a_k}, memoized.
  const Projection& get(const Exponents& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    Projection result;
    // Peel the lowest generator so that the cheap e_1 factors are applied
    // last and products of the higher generators are shared.
    std::size_t k = 1;
    while (k <= m_ && a[k - 1] == 0) ++k;
    if (k > m_) {
      result.emplace(Exponents(m_), 1);
    } else {
      Exponents prev = a;
      --prev[k - 1];
      result = times_elementary(get(prev), k);
    }
    return memo_.emplace(a, std::move(result)).first->second;
  }

 private:
  // Coefficient of a partition nu in P * e_k is the sum over k-subsets S with
  // nu - 1_S >= 0 of P[sort(nu - 1_S)].
  Projection times_elementary(const Projection& p, std::size_t k) const {
    std::vector<Exponents> targets;
    for (const auto& [lambda, c] : p) {
      for (std::uint32_t mask : subsets_[k]) {
        Exponents nu = lambda;
        for (std::size_t i = 0; i < m_; ++i) {
          if (mask & (1u << i)) ++nu[i];
        }
        targets.push_back(sorted_desc(nu));
      }
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    Projection out;
    for (const Exponents& nu : targets) {
      BigInt acc;
      for (std::uint32_t mask : subsets_[k]) {
        Exponents mu = nu;
        bool ok = true;
        for (std::size_t i = 0; i < m_ && ok; ++i) {
          if (mask & (1u << i)) {
            if (mu[i] == 0) ok = false; else --mu[i];
          }
        }
        if (!ok) continue;
        if (auto it = p.find(sorted_desc(mu)); it != p.end()) acc += it->second;
      }
      if (acc != 0) out.emplace(nu, std::move(acc));
    }
    return out;
  }

  std::size_t m_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::map<Exponents, Projection> memo_;
};

}  // namespace

namespace detail {

EPolynomial reduce_expanded(const MultivariatePoly& f) {
  const std::size_t m = f.num_vars();
  EPolynomial out(m);
  MultivariatePoly rest = f;
  const std::uint64_t bound = step_bound(f);
  for (std::uint64_t steps = 0; !rest.is_zero(); ++steps) {
    if (steps > bound) throw InternalError("symmetric reduction did not terminate");
    const auto& [lead, c] = rest.terms().front();
    if (!lead.weakly_decreasing()) {
      throw NotSymmetric("polynomial is not symmetric: leading monomial " +
                         MultivariatePoly::monomial(lead, 1).to_string() +
                         " has increasing exponents");
    }
    const Exponents a = gauss_exponents(lead);
    MultivariatePoly prod = MultivariatePoly::constant(m, c);
    for (std::size_t k = 0; k < m; ++k) {
      if (a[k] > 0) prod = prod * elementary_poly(k + 1, m).pow(a[k]);
    }
    out.add_term(a, c);
    rest -= prod;
  }
  return out;
}

}  // namespace detail

EPolynomial reduce_to_e_basis(const MultivariatePoly& f) {
  const std::size_t m = f.num_vars();
  if (m == 0) throw RangeError("polynomial has no variables");
  if (!is_symmetric(f)) {
    // The literal elimination pinpoints the first non-decreasing lead.
    detail::reduce_expanded(f);
    throw InternalError("non-symmetric input reduced without error");
  }

  Projection rest;
  for (const auto& [e, c] : f.terms()) {
    if (e.weakly_decreasing()) rest.emplace(e, c);
  }

  ElementaryProducts products(m);
  EPolynomial out(m);
  const std::uint64_t bound = step_bound(f);
  for (std::uint64_t steps = 0; !rest.empty(); ++steps) {
    if (steps > bound) throw InternalError("symmetric reduction did not terminate");
    const Exponents lead = rest.begin()->first;
    const BigInt c = rest.begin()->second;
    if (!lead.weakly_decreasing()) {
      throw NotSymmetric("leading exponent is not weakly decreasing");
    }
    const Exponents a = gauss_exponents(lead);
    out.add_term(a, c);
    for (const auto& [nu, d] : products.get(a)) {
      auto [it, inserted] = rest.try_emplace(nu);
      mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      if (it->second == 0) rest.erase(it);
    }
    if (!rest.empty() && rest.begin()->first == lead) {
      throw InternalError("leading term survived elimination");
    }
  }
  return out;
}

BigInt nested_sum_exact(std::uint64_t n, std::size_t m, std::uint64_t cap) {
  const VietaVector v = vieta(m);
  return reduce_to_e_basis(nested_sum_poly(n, m, cap)).evaluate(v.e);
}

bool verify_u_step(std::uint64_t n, std::uint64_t cap) {
  constexpr std::size_t kVars = 3;
  const MultivariatePoly lhs = nested_sum_poly(n + 1, kVars, cap);
  MultivariatePoly rhs = MultivariatePoly::variable(kVars, 2) * nested_sum_poly(n, kVars, cap);
  const auto exp32 = static_cast<std::uint32_t>(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) {
    rhs += MultivariatePoly::monomial(Exponents{i, exp32 - i, 0}, 1);
  }
  rhs += MultivariatePoly::monomial(Exponents{exp32, 0, 0}, 1);
  return lhs == rhs;
}

}  // namespace mbonacci
