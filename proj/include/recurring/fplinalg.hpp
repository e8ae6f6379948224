#pragma once

// Dense k x k linear algebra over F_p, the multiplicative order of a matrix,
// and orbits of row vectors under right multiplication.

#include <cstdint>
#include <vector>

#include "recurring/intcore.hpp"
#include "recurring/numtheory.hpp"

namespace recurring {

using FpVector = std::vector<Residue>;

class FpMatrix {
 public:
  FpMatrix(Prime p, std::size_t k) : p_(p), k_(k), a_(k * k, 0) {}
  FpMatrix(Prime p, std::size_t k, std::vector<Residue> row_major);

  static FpMatrix identity(Prime p, std::size_t k);
  static FpMatrix from_int(const IntMatrix& m, Prime p);

  Prime modulus() const { return p_; }
  std::size_t size() const { return k_; }
  Residue& operator()(std::size_t i, std::size_t j) { return a_[i * k_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }
  FpVector row(std::size_t i) const;
  const std::vector<Residue>& entries() const { return a_; }

  Residue trace() const;
  bool is_identity() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) = default;

 private:
  Prime p_;
  std::size_t k_;
  std::vector<Residue> a_;
};

FpMatrix mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix add(const FpMatrix& a, const FpMatrix& b);
// Negative exponents go through the inverse (kSingularMatrix if det = 0).
FpMatrix pow(const FpMatrix& a, std::int64_t n);
Residue det(const FpMatrix& a);
std::size_t rank(const FpMatrix& a);
FpMatrix inverse(const FpMatrix& a);
// Reduced row echelon form; equal outputs iff equal row spaces.
FpMatrix row_echelon(const FpMatrix& a);

// v * a, row vector acting on the right.
FpVector row_times(const FpVector& v, const FpMatrix& a);

// Least n >= 1 with m^n = I by repeated multiplication. Asserts n <= p^k - 1.
std::uint64_t matrix_order(const FpMatrix& m);

struct OrbitRecord {
  std::vector<FpVector> states;  // preperiod + period distinct states, in visiting order
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
};

// Iterates v -> v*a until the first repeated state.
OrbitRecord vector_orbit(const FpVector& v, const FpMatrix& a);

struct OrbitShape {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
};

// Same as vector_orbit without keeping the visited states when a is invertible.
OrbitShape orbit_shape(const FpVector& v, const FpMatrix& a);

}  // namespace recurring
