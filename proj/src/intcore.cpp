#include "recurring/intcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace recurring {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::kZeroPolynomial, "exact_quotient by zero");
  if (abs(b.lead()) != 1) throw Error(Errc::kHypothesisNotMet, "divisor must have unit leading coefficient");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(rem.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt c = rem[i + db] * b.lead();  // lead is +-1, so this is the exact quotient digit
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= c * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n * n) throw Error(Errc::kHypothesisNotMet, "IntMatrix: entry count is not n*n");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
}

BigInt IntMatrix::trace() const {
  BigInt s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

BigInt IntMatrix::determinant() const {
  std::vector<std::vector<BigInt>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i] = row(i);
  return bareiss_determinant(std::move(rows));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const BigInt& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& m) {
  IntMatrix c(m.n_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) c.a_[i] = s * m.a_[i];
  return c;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// CorePoly

CorePoly::CorePoly(std::vector<BigInt> t) : t_(std::move(t)) {
  if (t_.empty()) throw Error(Errc::kEmptyCoefficients, "core needs at least one coefficient");
  if (t_.back() == 0)
    throw Error(Errc::kDegenerateCore, "t_k = 0; factor out powers of X before building the core");
}

IntPoly CorePoly::as_poly() const {
  const std::size_t k = t_.size();
  std::vector<BigInt> c(k + 1);
  c[k] = 1;
  for (std::size_t j = 1; j <= k; ++j) c[k - j] = -t_[j - 1];
  return IntPoly(std::move(c));
}

std::string CorePoly::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < t_.size(); ++j) {
    if (j) s += ",";
    s += t_[j].get_str();
  }
  return s + "]";
}

CorePoly new_core(std::vector<BigInt> t) { return CorePoly(std::move(t)); }

CorePoly new_core(std::span<const long> t) {
  std::vector<BigInt> v;
  v.reserve(t.size());
  for (long x : t) v.emplace_back(x);
  return CorePoly(std::move(v));
}

CorePoly new_core(std::initializer_list<long> t) {
  return new_core(std::span<const long>(t.begin(), t.size()));
}

CorePoly core_from_poly(const IntPoly& monic) {
  if (monic.degree() < 1 || monic.lead() != 1)
    throw Error(Errc::kHypothesisNotMet, "core_from_poly needs a monic polynomial of degree >= 1");
  const auto k = static_cast<std::size_t>(monic.degree());
  std::vector<BigInt> t(k);
  for (std::size_t j = 1; j <= k; ++j) t[j - 1] = -monic.coeff(k - j);
  return CorePoly(std::move(t));
}

IntMatrix companion(const CorePoly& core) {
  const std::size_t k = core.degree();
  IntMatrix a(k);
  for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = 1;
  for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = core.t(k - j);
  return a;
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly();
  std::vector<BigInt> d(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::kZeroPolynomial, "resultant of a zero polynomial");
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size));
  // Coefficients highest degree first, each row shifted one column right.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = a.coeff(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = b.coeff(n - i);
  return bareiss_determinant(std::move(syl));
}

BigInt discriminant(const CorePoly& core) {
  const std::size_t k = core.degree();
  const IntPoly c = core.as_poly();
  BigInt r = resultant(c, derivative(c));
  return (k * (k - 1) / 2) % 2 == 0 ? r : BigInt(-r);
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(unsigned long n) {
  if (n == 0) throw Error(Errc::kHypothesisNotMet, "cyclotomic index must be >= 1");
  std::map<unsigned long, IntPoly> cache;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d) continue;
    // X^d - 1 divided by CP(e) for every proper divisor e of d.
    IntPoly acc = IntPoly::monomial(1, d) - IntPoly::monomial(1, 0);
    for (const auto& [e, cp] : cache) {
      if (e >= d || d % e) continue;
      auto q = exact_quotient(acc, cp);
      if (!q) throw Error(Errc::kInternalInconsistency, "cyclotomic division left a remainder");
      acc = std::move(*q);
    }
    cache.emplace(d, std::move(acc));
  }
  return cache.at(n);
}

namespace {

// f_(m+N) == f_m for 0 <= m <= N+k on the seeded integer sequence.
bool iterates_with_period(const CorePoly& core, std::uint64_t period) {
  const std::size_t k = core.degree();
  const std::uint64_t steps = 2 * period + k + 1;
  std::vector<BigInt> f;
  f.reserve(steps + k);
  for (std::size_t i = 0; i + 1 < k; ++i) f.emplace_back(0);
  f.emplace_back(1);
  while (f.size() < steps + k - 1) {
    BigInt next = 0;
    for (std::size_t j = 1; j <= k; ++j) next += core.t(j) * f[f.size() - j];
    f.push_back(std::move(next));
  }
  const std::size_t zero = k - 1;  // f[zero] is f_0
  for (std::uint64_t m = 0; m <= period + k; ++m)
    if (f[zero + m + period] != f[zero + m]) return false;
  return true;
}

}  // namespace

std::optional<std::uint64_t> exact_period(const CorePoly& core) {
  const std::size_t k = core.degree();
  IntPoly remaining = core.as_poly();
  std::uint64_t period = 1;
  // phi(n) >= sqrt(n/2), so phi(n) <= k forces n <= 2k^2.
  const unsigned long n_max = 2 * k * k;
  for (unsigned long n = 1; n <= n_max && remaining.degree() > 0; ++n) {
    if (euler_phi(n) > k) continue;
    const IntPoly cp = cyclotomic(n);
    if (cp.degree() > remaining.degree()) continue;
    auto q = exact_quotient(remaining, cp);
    if (!q) continue;
    // A repeated cyclotomic factor makes the terms grow polynomially.
    if (exact_quotient(*q, cp)) return std::nullopt;
    remaining = std::move(*q);
    period = std::lcm(period, static_cast<std::uint64_t>(n));
  }
  if (remaining.degree() != 0) return std::nullopt;
  if (!iterates_with_period(core, period))
    throw Error(Errc::kInternalInconsistency, "cyclotomic period " + std::to_string(period) +
                                                  " not confirmed by iteration for " + core.to_string());
  return period;
}

}  // namespace recurring
