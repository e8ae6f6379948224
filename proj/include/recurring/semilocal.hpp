#pragma once

// The finite ring R_p = F_p[X]/(C mod p) attached to a core and a prime:
// elements as coordinate k-tuples in the basis 1, lambda, ..., lambda^(k-1),
// their standard matrices, traces, A_p-orbits, idempotents, units, radical and
// maximal ideals, and the period/ramification equivalence.
//
// Brute-force routines enumerate all p^k elements and refuse rings with more
// than kBruteForceLimit elements (kHypothesisNotMet).

#include <cstdint>
#include <memory>
#include <vector>

#include "recurring/fplinalg.hpp"
#include "recurring/fppoly.hpp"
#include "recurring/intcore.hpp"

namespace recurring {

inline constexpr std::uint64_t kBruteForceLimit = 20'000;

enum class Splitting { kInert, kSplit, kRamified };

const char* splitting_name(Splitting s) noexcept;

struct Classification {
  Splitting kind;
  std::size_t s;  // number of distinct irreducible factors
  unsigned m;     // lcm of the multiplicities
};

class RpContext;
using RpContextPtr = std::shared_ptr<const RpContext>;

class RingElement {
 public:
  RingElement(RpContextPtr ctx, FpVector coords);

  const RpContext& context() const { return *ctx_; }
  const RpContextPtr& context_ptr() const { return ctx_; }
  const FpVector& coords() const { return coords_; }
  FpPoly as_poly() const;
  bool is_zero() const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RpContextPtr ctx_;
  FpVector coords_;
};

class RpContext : public std::enable_shared_from_this<RpContext> {
 public:
  const CorePoly& core() const { return core_; }
  Prime p() const { return p_; }
  std::size_t degree() const { return core_.degree(); }
  const FpPoly& cpoly() const { return cpoly_; }
  const FpFactorization& factorization() const { return factorization_; }
  const Classification& classification() const { return classification_; }
  // A_p, the companion matrix mod p.
  const FpMatrix& companion() const { return companion_; }
  bool companion_invertible() const { return reduce(core_.trailing(), p_) != 0; }
  // Eventual period of A_p (its multiplicative order when invertible).
  const BigInt& period() const { return period_; }

  // Coordinates are reduced mod p; the length must be k.
  RingElement element(FpVector coords) const;
  RingElement from_poly(const FpPoly& f) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement lambda() const;

  // Number of elements p^k when it is at most kBruteForceLimit.
  std::optional<std::uint64_t> small_size() const;
  // The index-th element in base-p little-endian order of the coordinates.
  RingElement element_at(std::uint64_t index) const;
  bool same_ring(const RpContext& other) const { return core_ == other.core_ && p_ == other.p_; }

 private:
  RpContext(CorePoly core, Prime p);
  friend RpContextPtr make_context(const CorePoly& core, Prime p);

  CorePoly core_;
  Prime p_;
  FpPoly cpoly_;
  FpFactorization factorization_;
  Classification classification_;
  FpMatrix companion_;
  BigInt period_;
};

RpContextPtr make_context(const CorePoly& core, Prime p);

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement power(const RingElement& a, std::uint64_t n);

// Rows a, a*A, ..., a*A^(k-1).
FpMatrix standard_matrix(const RingElement& a);
Residue norm(const RingElement& a);
bool is_unit(const RingElement& a);
std::size_t rank(const RingElement& a);

// sum m_i G_i mod p from the Lucas stream.
Residue trace_formula(const RingElement& a);
// tr(standard_matrix(a)).
Residue trace_matrix(const RingElement& a);

struct OrbitStructure {
  OrbitRecord orbit;
  Residue component_sum = 0;  // sum of all coordinates over the cycle, mod p
  Residue trace_sum = 0;      // sum of traces over the cycle, mod p
  bool length_divides_period = false;
};

OrbitStructure orbit_structure(const RingElement& a);

struct Idempotent {
  RingElement element;
  std::size_t rank;
  FpPoly factor;
  unsigned multiplicity;
};

struct IdempotentSet {
  std::vector<Idempotent> items;

  std::vector<std::size_t> ranks() const;
};

// One idempotent per factor f^e of C mod p, by CRT on xgcd(C / f^e, f^e).
// Verifies e^2 = e, pairwise orthogonality and sum = 1.
IdempotentSet primitive_idempotents(const RpContext& ctx);
std::vector<RingElement> brute_force_idempotents(const RpContext& ctx);

struct RankLawReport {
  bool ranks_sum_to_k = false;       // sum r(e_j) = k
  bool full_sum_has_rank_k = false;  // r(sum e_j) = k
  bool complements_sum_to_k = false; // r(e) + r(1 - e) = k for every sub-sum e
  bool subsums_additive = false;     // r(sum_S e_j) = sum_S r(e_j)
  std::size_t subsets_checked = 0;

  bool all() const { return ranks_sum_to_k && full_sum_has_rank_k && complements_sum_to_k && subsums_additive; }
};

// Throws kHypothesisNotMet when p ramifies.
RankLawReport rank_laws(const RpContext& ctx, const IdempotentSet& idems);

// prod (p^(e d) - p^((e-1) d)) over factors f^e of degree d; for unramified
// rings this is prod (p^(r_i) - 1). Throws kSingularCompanion when p | t_k.
BigInt unit_group_order(const RpContext& ctx);
std::uint64_t brute_force_unit_count(const RpContext& ctx);

// Product of the distinct irreducible factors, reduced mod C.
RingElement nilradical_generator(const RpContext& ctx);
bool in_nilradical(const RingElement& a);
// a^k == 0.
bool is_nilpotent(const RingElement& a);
std::uint64_t brute_force_nilpotent_count(const RpContext& ctx);

std::size_t maximal_ideal_count(const RpContext& ctx);
// Maximal elements among the proper principal ideals, each found as the row
// space of a standard matrix.
std::size_t brute_force_maximal_ideal_count(const RpContext& ctx);

// Elements of the maximal ideal belonging to factor index j.
std::vector<RingElement> maximal_ideal_elements(const RpContext& ctx, std::size_t j);

struct IdealOrbitSums {
  FpPoly factor;
  std::size_t orbit_count = 0;
  Residue trace_sum = 0;      // over all orbits of the ideal, mod p
  Residue component_sum = 0;  // same, summing coordinates
};

// For each maximal ideal, its A_p-orbits with their trace and coordinate sums.
std::vector<IdealOrbitSums> ideal_orbit_sums(const RpContext& ctx);

struct Thm67Record {
  BigInt period;
  bool p_divides_period = false;
  bool ramified = false;               // C mod p not squarefree
  bool p_divides_resultant = false;    // p | Res(C, C')
  bool agree = false;                  // p_divides_period == ramified
};

// Throws kSingularCompanion when p | t_k.
Thm67Record theorem_6_7_check(const CorePoly& core, Prime p);

struct TranslationSurvey {
  std::size_t orbit_pairs = 0;      // ordered pairs of distinct nonzero orbits inside one maximal ideal
  std::size_t pairs_with_unit = 0;  // pairs with a unit g such that O1 g = O2
};

// Empirical check of unit translation between orbits of one maximal ideal.
// Rings above 2000 elements are refused.
TranslationSurvey orbit_translation_survey(const RpContext& ctx);

}  // namespace recurring
