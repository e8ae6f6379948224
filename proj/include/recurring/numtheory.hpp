#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "recurring/error.hpp"

namespace recurring {

using BigInt = mpz_class;
using Residue = std::uint32_t;

bool is_prime_trial(std::uint64_t n);

// A machine-word prime below 2^31, checked by trial division on construction.
class Prime {
 public:
  explicit Prime(std::uint64_t p) : p_(static_cast<Residue>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime_trial(p))
      throw Error(Errc::kNotPrime, std::to_string(p) + " is not a prime below 2^31");
  }

  Residue value() const { return p_; }
  operator Residue() const { return p_; }

  friend bool operator==(Prime a, Prime b) = default;

 private:
  Residue p_;
};

inline Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}
inline Residue add_mod(Residue a, Residue b, Residue p) {
  const Residue s = a + b;  // both < 2^31, no overflow
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }

Residue pow_mod(Residue a, std::uint64_t e, Residue p);
// Throws kHypothesisNotMet for a == 0.
Residue inv_mod(Residue a, Residue p);

// Residue of an arbitrary integer in [0, p).
Residue reduce(const BigInt& x, Residue p);

// Prime factorization as (prime, exponent) pairs in ascending order.
// Trial division by small primes, then Pollard-Brent with GMP primality tests.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

std::vector<Residue> primes_up_to(std::uint64_t n);

BigInt big_pow(const BigInt& base, unsigned long e);
BigInt big_lcm(const BigInt& a, const BigInt& b);

}  // namespace recurring
