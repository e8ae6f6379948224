#pragma once

// Sequences attached to a core: the generalized Fibonacci polynomials (GFP),
// generalized Lucas polynomials (GLP), the Schur-hook columns of the doubly
// infinite companion matrix, and identities tying them to powers of A.
//
// Row n of the infinite companion matrix is e_k * A^n, so rows -k+1..0 form
// the identity and row n carries
//   ((-1)^(k-1) S_(n,1^(k-1)), ..., -S_(n,1), S_(n)).

#include <cstdint>
#include <optional>
#include <vector>

#include "recurring/intcore.hpp"
#include "recurring/numtheory.hpp"

namespace recurring {

// Doubly infinite t-recursive stream, exact or reduced mod p. Holds the
// window (f_(n-k+1), ..., f_n) at the current index n.
class SequenceCursor {
 public:
  SequenceCursor(CorePoly core, std::vector<BigInt> window, std::int64_t index,
                 std::optional<Prime> modulus = std::nullopt);

  // F_0 = 1, F_-1 = ... = F_(-k+1) = 0.
  static SequenceCursor gfp(const CorePoly& core, std::optional<Prime> modulus = std::nullopt);
  // G_0 = k and Newton seeds G_n = sum_(j<n) t_j G_(n-j) + n t_n for n < k.
  static SequenceCursor glp(const CorePoly& core, std::optional<Prime> modulus = std::nullopt);
  // Column `column` (1-based) of the infinite companion matrix, indexed by row.
  static SequenceCursor hook_column(const CorePoly& core, std::size_t column,
                                    std::optional<Prime> modulus = std::nullopt);

  std::int64_t index() const { return index_; }
  const BigInt& value() const { return window_.back(); }
  const std::vector<BigInt>& window() const { return window_; }
  const std::optional<Prime>& modulus() const { return modulus_; }

  void next();
  // Exact mode needs |t_k| = 1 (kNonUnitTrailing); mod-p mode needs p not
  // dividing t_k (kSingularCompanion).
  void prev();
  void seek(std::int64_t n);

 private:
  void normalize(BigInt& x) const;

  CorePoly core_;
  std::vector<BigInt> window_;
  std::int64_t index_;
  std::optional<Prime> modulus_;
};

BigInt gfp(const CorePoly& core, std::int64_t n);
BigInt glp(const CorePoly& core, std::int64_t n);
// Values for n = from..to inclusive.
std::vector<BigInt> gfp_range(const CorePoly& core, std::int64_t from, std::int64_t to,
                              std::optional<Prime> modulus = std::nullopt);
std::vector<BigInt> glp_range(const CorePoly& core, std::int64_t from, std::int64_t to,
                              std::optional<Prime> modulus = std::nullopt);

// Young diagram hook (arm, 1^leg).
struct SchurHookIndex {
  std::int64_t arm;
  unsigned leg;
};

// Throws kLegOutOfRange when leg > k-1.
BigInt schur_hook(const CorePoly& core, SchurHookIndex idx);

// A^n by repeated exact multiplication (A^-1 when n < 0, which needs |t_k| = 1).
IntMatrix companion_power(const CorePoly& core, std::int64_t n);
// A^n assembled entrywise from Schur-hook values.
IntMatrix companion_power_from_hooks(const CorePoly& core, std::int64_t n);
// Both routes, checked equal (kInternalInconsistency otherwise).
IntMatrix companion_power_entries(const CorePoly& core, std::int64_t n);

// Exact inverse of the companion matrix; kNonUnitTrailing unless |t_k| = 1.
IntMatrix companion_inverse(const CorePoly& core);

// (c_0, ..., c_(k-1)) with lambda^n = sum c_j lambda^j. The coefficients are
// row n-k+1 of the infinite companion matrix (the first row of A^n); the
// result is checked against sum c_j A^j = A^n.
std::vector<BigInt> lambda_representation(const CorePoly& core, std::int64_t n);

// D = C'(A), by Horner on the companion matrix.
IntMatrix different_matrix(const CorePoly& core);

// Last entries of the A-orbit of D's first row reproduce G_0..G_n_max.
bool glp_column_check(const CorePoly& core, std::int64_t n_max);
// Smallest-magnitude shift s in [-k, k] with last(D_row0 * A^n) = G_(n+s) for
// 0 <= n <= n_max; nullopt if none matches.
std::optional<int> glp_column_shift(const CorePoly& core, std::int64_t n_max);

// tr(A^n) = G_n for |n| <= n_max (negative side only when |t_k| = 1).
bool trace_equals_glp(const CorePoly& core, std::int64_t n_max);

}  // namespace recurring
