#include "recurring/numtheory.hpp"

#include <algorithm>
#include <map>

namespace recurring {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

Residue inv_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw Error(Errc::kHypothesisNotMet, "zero has no inverse mod " + std::to_string(p));
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  s0 %= static_cast<std::int64_t>(p);
  if (s0 < 0) s0 += p;
  return static_cast<Residue>(s0);
}

Residue reduce(const BigInt& x, Residue p) {
  return static_cast<Residue>(mpz_fdiv_ui(x.get_mpz_t(), p));
}

std::vector<Residue> primes_up_to(std::uint64_t n) {
  std::vector<Residue> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<Residue>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Pollard-Brent; returns a nontrivial factor of composite odd n.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const BigInt& x) {
      BigInt y = x * x + c;
      mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
      return y;
    };
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt d = abs(x - y);
          q = q * d;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n_in) {
  BigInt n = abs(n_in);
  if (n == 0) throw Error(Errc::kHypothesisNotMet, "factor_integer(0)");
  std::map<BigInt, unsigned> out;
  for (unsigned long q = 2; q < 10000 && n > 1; q += (q == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      ++out[BigInt(q)];
      n /= q;
    }
  }
  split(n, out);
  return {out.begin(), out.end()};
}

}  // namespace recurring
