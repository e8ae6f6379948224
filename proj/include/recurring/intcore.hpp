#pragma once

// Exact integer-level objects: the core polynomial X^k - t1 X^(k-1) - ... - tk,
// its companion matrix, discriminant, and the exact (non-modular) periodicity test.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "recurring/error.hpp"

namespace recurring {

using BigInt = mpz_class;

// Dense integer polynomial, lowest degree first. Trailing zeros are trimmed so
// the leading coefficient is nonzero unless the polynomial is zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(const BigInt& c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& lead() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

// Quotient of a by b when b divides a exactly over Z, nullopt otherwise.
// b must have leading coefficient +-1.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
  IntMatrix(std::size_t n, std::vector<BigInt> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<BigInt> row(std::size_t i) const;

  BigInt trace() const;
  BigInt determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& c, const IntMatrix& m);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

// Fraction-free (Bareiss) determinant; exact for any square integer matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// The coefficient vector t = (t1, ..., tk) of X^k - t1 X^(k-1) - ... - tk.
class CorePoly {
 public:
  // Throws kEmptyCoefficients / kDegenerateCore (tk == 0).
  explicit CorePoly(std::vector<BigInt> t);

  std::size_t degree() const { return t_.size(); }
  const std::vector<BigInt>& t() const { return t_; }
  // 1-based, matching t1..tk.
  const BigInt& t(std::size_t j) const { return t_[j - 1]; }
  const BigInt& trailing() const { return t_.back(); }
  bool trailing_is_unit() const { return abs(t_.back()) == 1; }

  IntPoly as_poly() const;
  std::string to_string() const;

  friend bool operator==(const CorePoly& a, const CorePoly& b) = default;

 private:
  std::vector<BigInt> t_;
};

CorePoly new_core(std::vector<BigInt> t);
CorePoly new_core(std::span<const long> t);
CorePoly new_core(std::initializer_list<long> t);

// Core whose polynomial is the given monic IntPoly of degree >= 1.
CorePoly core_from_poly(const IntPoly& monic);

// Rows 0..k-2 carry the superdiagonal ones; the last row is (tk, ..., t1).
IntMatrix companion(const CorePoly& core);

IntPoly derivative(const IntPoly& p);

// det of the Sylvester matrix with the rows of a first. Throws kZeroPolynomial.
BigInt resultant(const IntPoly& a, const IntPoly& b);

// (-1)^(k(k-1)/2) * resultant(C, C').
BigInt discriminant(const CorePoly& core);

unsigned long euler_phi(unsigned long n);

IntPoly cyclotomic(unsigned long n);

// Least N with f_(m+N) = f_m for the integer recursion, when one exists.
std::optional<std::uint64_t> exact_period(const CorePoly& core);

}  // namespace recurring
