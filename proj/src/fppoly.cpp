#include "recurring/fppoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace recurring {

namespace {

void check_same(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus())
    throw Error(Errc::kModulusMismatch, "moduli " + std::to_string(a.modulus().value()) + " and " +
                                            std::to_string(b.modulus().value()));
}

}  // namespace

FpPoly::FpPoly(Prime p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_.value();
  trim();
}

FpPoly FpPoly::from_signed(Prime p, const std::vector<long>& coeffs) {
  std::vector<Residue> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) {
    long r = x % static_cast<long>(p.value());
    if (r < 0) r += p.value();
    c.push_back(static_cast<Residue>(r));
  }
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::from_int(const IntPoly& f, Prime p) {
  std::vector<Residue> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(reduce(x, p));
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monomial(Prime p, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scale(*this, inv_mod(lead(), p_));
}

Residue FpPoly::eval(Residue x) const {
  Residue acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
  return acc;
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Residue c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

FpPoly add(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  const Residue p = a.modulus();
  std::vector<Residue> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coeff(i), b.coeff(i), p);
  return FpPoly(a.modulus(), std::move(c));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  const Residue p = a.modulus();
  std::vector<Residue> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coeff(i), b.coeff(i), p);
  return FpPoly(a.modulus(), std::move(c));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.modulus());
  const Residue p = a.modulus();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Residue> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = add_mod(c[i + j], mul_mod(x[i], y[j], p), p);
  }
  return FpPoly(a.modulus(), std::move(c));
}

FpPoly scale(const FpPoly& a, Residue s) {
  const Residue p = a.modulus();
  std::vector<Residue> c(a.coeffs());
  for (auto& x : c) x = mul_mod(x, s % p, p);
  return FpPoly(a.modulus(), std::move(c));
}

FpDivMod divmod(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw Error(Errc::kDivisionByZeroPoly, "division by the zero polynomial");
  const Prime prime = a.modulus();
  const Residue p = prime;
  if (a.degree() < b.degree()) return {FpPoly::zero(prime), a};
  std::vector<Residue> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Residue inv_lead = inv_mod(b.lead(), p);
  std::vector<Residue> q(r.size() - db, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Residue c = mul_mod(r[i + db], inv_lead, p);
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] = sub_mod(r[i + j], mul_mod(c, b.coeffs()[j], p), p);
  }
  r.resize(db);
  return {FpPoly(prime, std::move(q)), FpPoly(prime, std::move(r))};
}

FpPoly rem(const FpPoly& a, const FpPoly& b) { return divmod(a, b).remainder; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpXgcd xgcd(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  const Prime p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly::zero(p);
  FpPoly t0 = FpPoly::zero(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, sub(s0, mul(q, s1)));
    t0 = std::exchange(t1, sub(t0, mul(q, t1)));
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Residue inv = inv_mod(r0.lead(), p);
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

FpPoly powmod(const FpPoly& a, const BigInt& e, const FpPoly& m) {
  check_same(a, m);
  if (e < 0) throw Error(Errc::kHypothesisNotMet, "powmod with negative exponent");
  const Prime p = a.modulus();
  FpPoly base = rem(a, m);
  FpPoly result = rem(FpPoly::constant(p, 1), m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
  }
  return result;
}

FpPoly derivative(const FpPoly& f) {
  const Residue p = f.modulus();
  if (f.degree() <= 0) return FpPoly::zero(f.modulus());
  std::vector<Residue> d(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    d[i - 1] = mul_mod(f.coeffs()[i], static_cast<Residue>(i % p), p);
  return FpPoly(f.modulus(), std::move(d));
}

FpPoly FpFactorization::expand(Prime p) const {
  FpPoly acc = FpPoly::constant(p, unit);
  for (const auto& [f, e] : factors)
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, f);
  return acc;
}

namespace {

FpPoly exact_div(const FpPoly& a, const FpPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::kInternalInconsistency, "inexact division in factorization");
  return q;
}

// f(X) = g(X)^p for f with zero derivative.
FpPoly pth_root(const FpPoly& f) {
  const Residue p = f.modulus();
  std::vector<Residue> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FpPoly(f.modulus(), std::move(c));
}

// Monic squarefree parts with the multiplicity they occur at.
void squarefree_decomposition(const FpPoly& f, unsigned scale_exp, std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i * scale_exp);
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c), scale_exp * f.modulus().value(), out);
}

// Products of all irreducible factors of each degree, for squarefree monic f.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f) {
  const Prime p = f.modulus();
  std::vector<std::pair<FpPoly, unsigned>> out;
  const FpPoly x = FpPoly::x(p);
  FpPoly h = rem(x, f);
  for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
    h = powmod(h, BigInt(p.value()), f);
    FpPoly d = gcd(f, sub(h, x));
    if (d.degree() > 0) {
      out.emplace_back(d, i);
      f = exact_div(f, d);
      h = rem(h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// Splits squarefree monic f whose irreducible factors all have degree d.
void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Prime p = f.modulus();
  const Residue pv = p;
  const BigInt half = (big_pow(BigInt(pv), d) - 1) / 2;
  std::uniform_int_distribution<Residue> coef(0, pv - 1);
  for (;;) {
    std::vector<Residue> a(static_cast<std::size_t>(f.degree()));
    for (auto& x : a) x = coef(rng);
    FpPoly r(p, std::move(a));
    if (r.degree() <= 0) continue;
    FpPoly b = FpPoly::zero(p);
    if (pv == 2) {
      // Trace map F_{2^d} -> F_2: r + r^2 + ... + r^(2^(d-1)).
      FpPoly term = r;
      for (unsigned j = 0; j < d; ++j) {
        b = add(b, term);
        term = rem(mul(term, term), f);
      }
    } else {
      b = sub(powmod(r, half, f), FpPoly::constant(p, 1));
    }
    FpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

FpFactorization factorize(const FpPoly& f) {
  if (f.is_zero()) throw Error(Errc::kZeroPolynomial, "factorize(0)");
  const Prime p = f.modulus();
  FpFactorization result;
  result.unit = f.lead();
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree_decomposition(f.monic(), 1, sqf);
  // Fixed seed: the factor set is unique, the seed only affects running time.
  std::mt19937_64 rng(0x5eed0000u + p.value());
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, deg] : distinct_degree(part)) {
      std::vector<FpPoly> irreducibles;
      equal_degree(block, deg, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FpFactor& a, const FpFactor& b) { return a.factor < b.factor; });
  return result;
}

bool is_squarefree(const FpPoly& f) {
  if (f.is_zero()) throw Error(Errc::kZeroPolynomial, "is_squarefree(0)");
  return gcd(f, derivative(f)).degree() == 0;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  const auto fac = factorize(f);
  return fac.count() == 1 && fac.factors[0].multiplicity == 1;
}

BigInt order_of_x_mod(const FpPoly& f, unsigned multiplicity) {
  if (f.degree() < 1) throw Error(Errc::kHypothesisNotMet, "order_of_x_mod needs deg f >= 1");
  if (f.coeff(0) == 0) throw Error(Errc::kXNotInvertible, "X is not invertible modulo " + f.to_string());
  if (multiplicity == 0) throw Error(Errc::kHypothesisNotMet, "multiplicity must be positive");
  const Prime p = f.modulus();
  const FpPoly x = FpPoly::x(p);
  const FpPoly one = FpPoly::constant(p, 1);
  // Order of X in the field F_p[X]/(f) divides p^deg - 1.
  BigInt order = big_pow(BigInt(p.value()), static_cast<unsigned long>(f.degree())) - 1;
  for (const auto& [q, e] : factor_integer(order)) {
    for (unsigned i = 0; i < e; ++i) {
      const BigInt candidate = order / q;
      if (powmod(x, candidate, f) != one) break;
      order = candidate;
    }
  }
  // X^d = 1 + f*h with f not dividing h, so the f-adic valuation of X^(d p^s) - 1 is p^s.
  BigInt lift = 1;
  while (lift < multiplicity) lift *= p.value();
  return order * lift;
}

}  // namespace recurring
