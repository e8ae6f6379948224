#pragma once

// Polynomials over the prime field F_p: arithmetic, gcd, factorization into
// monic irreducibles, and the multiplicative order of X modulo a prime power
// of an irreducible.

#include <cstdint>
#include <string>
#include <vector>

#include "recurring/intcore.hpp"
#include "recurring/numtheory.hpp"

namespace recurring {

class FpPoly {
 public:
  FpPoly(Prime p, std::vector<Residue> coeffs);
  // Coefficients given as arbitrary signed integers, reduced into [0, p).
  static FpPoly from_signed(Prime p, const std::vector<long>& coeffs);
  static FpPoly from_int(const IntPoly& f, Prime p);
  static FpPoly zero(Prime p) { return FpPoly(p, {}); }
  static FpPoly constant(Prime p, Residue c) { return FpPoly(p, {c}); }
  static FpPoly x(Prime p) { return FpPoly(p, {0, 1}); }
  static FpPoly monomial(Prime p, Residue c, std::size_t degree);

  Prime modulus() const { return p_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Residue lead() const { return c_.back(); }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  FpPoly monic() const;
  Residue eval(Residue x) const;

  std::string to_string() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;
  // Degree first, then coefficients from the top down.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void trim();

  Prime p_;
  std::vector<Residue> c_;
};

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, Residue c);

struct FpDivMod {
  FpPoly quotient;
  FpPoly remainder;
};
FpDivMod divmod(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& b);

// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);

struct FpXgcd {
  FpPoly g;  // monic
  FpPoly u;
  FpPoly v;  // u*a + v*b == g
};
FpXgcd xgcd(const FpPoly& a, const FpPoly& b);

// a^e mod m, reducing at each step.
FpPoly powmod(const FpPoly& a, const BigInt& e, const FpPoly& m);
FpPoly derivative(const FpPoly& f);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity;
};

struct FpFactorization {
  std::vector<FpFactor> factors;  // sorted by operator< on the factor
  Residue unit = 1;

  FpPoly expand(Prime p) const;
  std::size_t count() const { return factors.size(); }
};

// Complete factorization into monic irreducibles. Throws kZeroPolynomial.
FpFactorization factorize(const FpPoly& f);

bool is_squarefree(const FpPoly& f);
bool is_irreducible(const FpPoly& f);

// Least n >= 1 with X^n == 1 mod f^multiplicity, f monic irreducible.
// Throws kXNotInvertible when f = X.
BigInt order_of_x_mod(const FpPoly& f, unsigned multiplicity);

}  // namespace recurring
