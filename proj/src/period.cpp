#include "recurring/period.hpp"

#include <algorithm>

#include "recurring/fplinalg.hpp"

namespace recurring {

const char* method_name(PeriodMethod m) noexcept {
  switch (m) {
    case PeriodMethod::kOrbit: return "orbit";
    case PeriodMethod::kMatrixOrder: return "matrix-order";
    case PeriodMethod::kFactorLcm: return "factor-lcm";
  }
  return "unknown";
}

namespace {

void require_invertible(const CorePoly& core, Prime p) {
  if (reduce(core.trailing(), p) == 0)
    throw Error(Errc::kSingularCompanion,
                "p = " + std::to_string(p.value()) + " divides t_k of " + core.to_string());
}

// p^k when it fits below `cap`, otherwise nullopt.
std::optional<std::uint64_t> state_space(Prime p, std::size_t k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > cap / p.value()) return std::nullopt;
    v *= p.value();
  }
  return v;
}

}  // namespace

PeriodResult period_orbit(const CorePoly& core, Prime p) {
  const std::size_t k = core.degree();
  const FpMatrix a = FpMatrix::from_int(companion(core), p);
  // A single vector's orbit can be a proper divisor of the matrix period;
  // the basis vectors together see all of A^n.
  BigInt period = 1;
  std::uint64_t preperiod = 0;
  for (std::size_t i = 0; i < k; ++i) {
    FpVector e(k, 0);
    e[i] = 1;
    const OrbitShape s = orbit_shape(e, a);
    period = big_lcm(period, BigInt(static_cast<unsigned long>(s.period)));
    preperiod = std::max(preperiod, s.preperiod);
  }
  return {core, p, period, preperiod, PeriodMethod::kOrbit, {}};
}

PeriodResult period_matrix_order(const CorePoly& core, Prime p) {
  require_invertible(core, p);
  const std::uint64_t n = matrix_order(FpMatrix::from_int(companion(core), p));
  return {core, p, BigInt(static_cast<unsigned long>(n)), 0, PeriodMethod::kMatrixOrder, {}};
}

PeriodResult period_eventual_by_factors(const CorePoly& core, Prime p) {
  const FpFactorization fac = factorize(FpPoly::from_int(core.as_poly(), p));
  PeriodResult r{core, p, BigInt(1), 0, PeriodMethod::kFactorLcm, {}};
  for (const auto& [f, e] : fac.factors) {
    if (f == FpPoly::x(p)) {
      // A_p restricted to the X^e component is nilpotent of index e.
      r.preperiod = e;
      continue;
    }
    BigInt order = order_of_x_mod(f, e);
    r.period = big_lcm(r.period, order);
    r.per_factor.push_back({f, e, std::move(order)});
  }
  return r;
}

PeriodResult period_factor_lcm(const CorePoly& core, Prime p) {
  require_invertible(core, p);
  return period_eventual_by_factors(core, p);
}

PeriodResult period_consistent(const CorePoly& core, Prime p, ConsistencyOptions opts) {
  PeriodResult best = period_eventual_by_factors(core, p);
  const bool singular = best.singular();
  auto disagree = [&](const PeriodResult& other) {
    return other.period != best.period || other.preperiod != best.preperiod;
  };
  auto fail = [&](const PeriodResult& other) {
    throw Error(Errc::kInternalInconsistency,
                "period methods disagree for " + core.to_string() + " mod " + std::to_string(p.value()) + ": " +
                    method_name(best.method) + " gives " + best.period.get_str() + "/" +
                    std::to_string(best.preperiod) + ", " + method_name(other.method) + " gives " +
                    other.period.get_str() + "/" + std::to_string(other.preperiod));
  };
  if (state_space(p, core.degree(), opts.max_state_space)) {
    const PeriodResult orbit = period_orbit(core, p);
    if (disagree(orbit)) fail(orbit);
    if (!singular) {
      const PeriodResult order = period_matrix_order(core, p);
      if (disagree(order)) fail(order);
    }
  }
  return best;
}

}  // namespace recurring
