#pragma once

// The period c_p[t] of a core modulo p, by three independent routes:
//   orbit        lcm of the orbit lengths of the standard basis vectors under A_p
//   matrix-order multiplicative order of A_p by repeated multiplication
//   factor-lcm   lcm over the factors f^e of C mod p of the order of X mod f^e
// When p divides t_k, A_p is singular and the power sequence is only
// eventually periodic; only the orbit route (and the factor route restricted
// to the factors other than X) apply.

#include <cstdint>
#include <vector>

#include "recurring/fppoly.hpp"
#include "recurring/intcore.hpp"

namespace recurring {

enum class PeriodMethod { kOrbit, kMatrixOrder, kFactorLcm };

const char* method_name(PeriodMethod m) noexcept;

struct FactorPeriod {
  FpPoly factor;
  unsigned multiplicity;
  BigInt period;
};

struct PeriodResult {
  CorePoly core;
  Prime p;
  BigInt period;
  std::uint64_t preperiod = 0;
  PeriodMethod method;
  std::vector<FactorPeriod> per_factor;

  bool singular() const { return reduce(core.trailing(), p) == 0; }
};

PeriodResult period_orbit(const CorePoly& core, Prime p);
// Throws kSingularCompanion when p | t_k.
PeriodResult period_matrix_order(const CorePoly& core, Prime p);
// Throws kSingularCompanion when p | t_k.
PeriodResult period_factor_lcm(const CorePoly& core, Prime p);

// Eventual period and preperiod from the factorization, valid whether or not
// p | t_k: the X-part of C mod p contributes its multiplicity as preperiod,
// every other factor contributes its order of X.
PeriodResult period_eventual_by_factors(const CorePoly& core, Prime p);

struct ConsistencyOptions {
  // The state-space routes (orbit, matrix order) run only when p^k is at most
  // this; the factorization route always runs.
  std::uint64_t max_state_space = 4'000'000;
};

// Runs every applicable method, checks that they agree (kInternalInconsistency
// otherwise) and returns the factor-based record.
PeriodResult period_consistent(const CorePoly& core, Prime p, ConsistencyOptions opts = {});

}  // namespace recurring
