#include "recurring/semilocal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "recurring/period.hpp"
#include "recurring/recurrence.hpp"

namespace recurring {

const char* splitting_name(Splitting s) noexcept {
  switch (s) {
    case Splitting::kInert: return "inert";
    case Splitting::kSplit: return "split";
    case Splitting::kRamified: return "ramified";
  }
  return "unknown";
}

namespace {

void check_same(const RingElement& a, const RingElement& b) {
  if (!a.context().same_ring(b.context()))
    throw Error(Errc::kContextMismatch, "elements of different rings");
}

std::uint64_t require_small(const RpContext& ctx, std::uint64_t limit = kBruteForceLimit) {
  auto n = ctx.small_size();
  if (!n || *n > limit)
    throw Error(Errc::kHypothesisNotMet, "ring too large for enumeration: p = " + std::to_string(ctx.p().value()) +
                                             ", k = " + std::to_string(ctx.degree()));
  return *n;
}

Classification classify(const FpFactorization& fac) {
  unsigned m = 1;
  bool repeated = false;
  for (const auto& f : fac.factors) {
    m = std::lcm(m, f.multiplicity);
    repeated = repeated || f.multiplicity > 1;
  }
  const std::size_t s = fac.count();
  if (repeated) return {Splitting::kRamified, s, m};
  return {s == 1 ? Splitting::kInert : Splitting::kSplit, s, m};
}

FpPoly poly_pow(const FpPoly& f, unsigned e) {
  FpPoly acc = FpPoly::constant(f.modulus(), 1);
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, f);
  return acc;
}

BigInt pow_u(Residue p, unsigned long e) { return big_pow(BigInt(p), e); }

}  // namespace

// ---------------------------------------------------------------------------
// RingElement / RpContext

RingElement::RingElement(RpContextPtr ctx, FpVector coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != ctx_->degree())
    throw Error(Errc::kHypothesisNotMet, "element needs exactly k coordinates");
  for (auto& c : coords_) c %= ctx_->p().value();
}

FpPoly RingElement::as_poly() const { return FpPoly(ctx_->p(), coords_); }

bool RingElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.context().same_ring(b.context()) && a.coords_ == b.coords_;
}

RpContext::RpContext(CorePoly core, Prime p)
    : core_(std::move(core)),
      p_(p),
      cpoly_(FpPoly::from_int(core_.as_poly(), p)),
      factorization_(factorize(cpoly_)),
      classification_(classify(factorization_)),
      companion_(FpMatrix::from_int(recurring::companion(core_), p)),
      period_(period_eventual_by_factors(core_, p).period) {}

RpContextPtr make_context(const CorePoly& core, Prime p) {
  return RpContextPtr(new RpContext(core, p));
}

RingElement RpContext::element(FpVector coords) const { return RingElement(shared_from_this(), std::move(coords)); }

RingElement RpContext::from_poly(const FpPoly& f) const {
  const FpPoly r = rem(f, cpoly_);
  FpVector c(degree(), 0);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
  return element(std::move(c));
}

RingElement RpContext::zero() const { return element(FpVector(degree(), 0)); }

RingElement RpContext::one() const {
  FpVector c(degree(), 0);
  c[0] = 1;
  return element(std::move(c));
}

RingElement RpContext::lambda() const { return from_poly(FpPoly::x(p_)); }

std::optional<std::uint64_t> RpContext::small_size() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    n *= p_.value();
    if (n > kBruteForceLimit) return std::nullopt;
  }
  return n;
}

RingElement RpContext::element_at(std::uint64_t index) const {
  FpVector c(degree(), 0);
  for (auto& x : c) {
    x = static_cast<Residue>(index % p_.value());
    index /= p_.value();
  }
  return element(std::move(c));
}

// ---------------------------------------------------------------------------
// Arithmetic and the standard representation

RingElement add(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  const Residue p = a.context().p();
  FpVector c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coords()[i], b.coords()[i], p);
  return RingElement(a.context_ptr(), std::move(c));
}

RingElement sub(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  const Residue p = a.context().p();
  FpVector c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coords()[i], b.coords()[i], p);
  return RingElement(a.context_ptr(), std::move(c));
}

RingElement mul(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  return a.context().from_poly(mul(a.as_poly(), b.as_poly()));
}

RingElement power(const RingElement& a, std::uint64_t n) {
  RingElement result = a.context().one();
  RingElement base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

FpMatrix standard_matrix(const RingElement& a) {
  const RpContext& ctx = a.context();
  const std::size_t k = ctx.degree();
  FpMatrix m(ctx.p(), k);
  FpVector row = a.coords();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = row[j];
    row = row_times(row, ctx.companion());
  }
  return m;
}

Residue norm(const RingElement& a) { return det(standard_matrix(a)); }
bool is_unit(const RingElement& a) { return norm(a) != 0; }
std::size_t rank(const RingElement& a) { return rank(standard_matrix(a)); }

Residue trace_formula(const RingElement& a) {
  const RpContext& ctx = a.context();
  const Residue p = ctx.p();
  const auto g = glp_range(ctx.core(), 0, static_cast<std::int64_t>(ctx.degree()) - 1, ctx.p());
  Residue t = 0;
  for (std::size_t i = 0; i < g.size(); ++i) t = add_mod(t, mul_mod(a.coords()[i], reduce(g[i], p), p), p);
  return t;
}

Residue trace_matrix(const RingElement& a) { return standard_matrix(a).trace(); }

OrbitStructure orbit_structure(const RingElement& a) {
  const RpContext& ctx = a.context();
  const Residue p = ctx.p();
  OrbitStructure out;
  out.orbit = vector_orbit(a.coords(), ctx.companion());
  for (std::size_t i = out.orbit.preperiod; i < out.orbit.states.size(); ++i) {
    const auto& s = out.orbit.states[i];
    for (Residue x : s) out.component_sum = add_mod(out.component_sum, x, p);
    out.trace_sum = add_mod(out.trace_sum, trace_formula(ctx.element(s)), p);
  }
  BigInt r;
  mpz_mod(r.get_mpz_t(), ctx.period().get_mpz_t(), BigInt(static_cast<unsigned long>(out.orbit.period)).get_mpz_t());
  out.length_divides_period = r == 0;
  return out;
}

// ---------------------------------------------------------------------------
// Idempotents and ranks

std::vector<std::size_t> IdempotentSet::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& i : items) r.push_back(i.rank);
  return r;
}

IdempotentSet primitive_idempotents(const RpContext& ctx) {
  IdempotentSet set;
  for (const auto& [f, e] : ctx.factorization().factors) {
    const FpPoly local = poly_pow(f, e);
    const auto [q, r] = divmod(ctx.cpoly(), local);
    if (!r.is_zero()) throw Error(Errc::kInternalInconsistency, "factor does not divide C mod p");
    const FpXgcd g = xgcd(q, local);
    if (!g.g.is_one()) throw Error(Errc::kNotCoprime, "cofactor shares a factor with " + f.to_string());
    RingElement idem = ctx.from_poly(mul(g.u, q));
    const std::size_t r_idem = rank(idem);
    set.items.push_back({std::move(idem), r_idem, f, e});
  }
  RingElement total = ctx.zero();
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    const RingElement& e = set.items[i].element;
    if (!(mul(e, e) == e)) throw Error(Errc::kInternalInconsistency, "CRT element is not idempotent");
    for (std::size_t j = i + 1; j < set.items.size(); ++j)
      if (!mul(e, set.items[j].element).is_zero())
        throw Error(Errc::kInternalInconsistency, "CRT idempotents are not orthogonal");
    total = add(total, e);
  }
  if (!(total == ctx.one())) throw Error(Errc::kInternalInconsistency, "CRT idempotents do not sum to 1");
  return set;
}

std::vector<RingElement> brute_force_idempotents(const RpContext& ctx) {
  const std::uint64_t n = require_small(ctx);
  std::vector<RingElement> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElement e = ctx.element_at(i);
    if (mul(e, e) == e) out.push_back(std::move(e));
  }
  return out;
}

RankLawReport rank_laws(const RpContext& ctx, const IdempotentSet& idems) {
  if (ctx.classification().kind == Splitting::kRamified)
    throw Error(Errc::kHypothesisNotMet, "rank laws need an unramified prime");
  const std::size_t k = ctx.degree();
  const std::size_t s = idems.items.size();
  RankLawReport rep;
  std::size_t sum = 0;
  RingElement total = ctx.zero();
  for (const auto& i : idems.items) {
    sum += i.rank;
    total = add(total, i.element);
  }
  rep.ranks_sum_to_k = sum == k;
  rep.full_sum_has_rank_k = rank(total) == k;
  rep.complements_sum_to_k = true;
  rep.subsums_additive = true;
  // Every subset for s <= 6, otherwise singletons and pairs.
  std::vector<std::vector<std::size_t>> subsets;
  if (s <= 6) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j < s; ++j)
        if (mask >> j & 1) subset.push_back(j);
      subsets.push_back(std::move(subset));
    }
  } else {
    for (std::size_t i = 0; i < s; ++i) {
      subsets.push_back({i});
      for (std::size_t j = i + 1; j < s; ++j) subsets.push_back({i, j});
    }
  }
  for (const auto& subset : subsets) {
    RingElement e = ctx.zero();
    std::size_t expected = 0;
    for (std::size_t j : subset) {
      e = add(e, idems.items[j].element);
      expected += idems.items[j].rank;
    }
    const std::size_t r = rank(e);
    rep.subsums_additive = rep.subsums_additive && r == expected;
    rep.complements_sum_to_k = rep.complements_sum_to_k && r + rank(sub(ctx.one(), e)) == k;
    ++rep.subsets_checked;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Units, radical, maximal ideals

BigInt unit_group_order(const RpContext& ctx) {
  if (!ctx.companion_invertible())
    throw Error(Errc::kSingularCompanion, "unit group order needs p not dividing t_k");
  const Residue p = ctx.p();
  BigInt order = 1;
  for (const auto& [f, e] : ctx.factorization().factors) {
    const auto d = static_cast<unsigned long>(f.degree());
    order *= pow_u(p, e * d) - pow_u(p, (e - 1) * d);
  }
  return order;
}

std::uint64_t brute_force_unit_count(const RpContext& ctx) {
  const std::uint64_t n = require_small(ctx);
  std::uint64_t units = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (is_unit(ctx.element_at(i))) ++units;
  return units;
}

RingElement nilradical_generator(const RpContext& ctx) {
  FpPoly g = FpPoly::constant(ctx.p(), 1);
  for (const auto& f : ctx.factorization().factors) g = mul(g, f.factor);
  return ctx.from_poly(g);
}

bool in_nilradical(const RingElement& a) {
  const RpContext& ctx = a.context();
  FpPoly g = FpPoly::constant(ctx.p(), 1);
  for (const auto& f : ctx.factorization().factors) g = mul(g, f.factor);
  return rem(a.as_poly(), g).is_zero();
}

bool is_nilpotent(const RingElement& a) { return power(a, a.context().degree()).is_zero(); }

std::uint64_t brute_force_nilpotent_count(const RpContext& ctx) {
  const std::uint64_t n = require_small(ctx);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (is_nilpotent(ctx.element_at(i))) ++count;
  return count;
}

std::size_t maximal_ideal_count(const RpContext& ctx) { return ctx.factorization().count(); }

namespace {

// Row space of an RREF matrix contains v.
bool in_row_space(const FpMatrix& rref, FpVector v) {
  const std::size_t k = rref.size();
  const Residue p = rref.modulus();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t lead = 0;
    while (lead < k && rref(i, lead) == 0) ++lead;
    if (lead == k) break;
    const Residue f = v[lead];
    if (f == 0) continue;
    for (std::size_t j = 0; j < k; ++j) v[j] = sub_mod(v[j], mul_mod(f, rref(i, j), p), p);
  }
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

bool contained_in(const FpMatrix& a, const FpMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!in_row_space(b, a.row(i))) return false;
  return true;
}

}  // namespace

std::size_t brute_force_maximal_ideal_count(const RpContext& ctx) {
  const std::uint64_t n = require_small(ctx);
  const std::size_t k = ctx.degree();
  std::set<std::vector<Residue>> seen;
  std::vector<FpMatrix> proper;
  for (std::uint64_t i = 0; i < n; ++i) {
    const FpMatrix m = standard_matrix(ctx.element_at(i));
    if (rank(m) == k) continue;
    FpMatrix r = row_echelon(m);
    if (seen.insert(r.entries()).second) proper.push_back(std::move(r));
  }
  std::size_t maximal = 0;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < proper.size() && is_max; ++j)
      if (i != j && contained_in(proper[i], proper[j])) is_max = false;
    if (is_max) ++maximal;
  }
  return maximal;
}

std::vector<RingElement> maximal_ideal_elements(const RpContext& ctx, std::size_t j) {
  const auto& factors = ctx.factorization().factors;
  if (j >= factors.size()) throw Error(Errc::kHypothesisNotMet, "factor index out of range");
  const FpPoly& f = factors[j].factor;
  const std::size_t free_dim = ctx.degree() - static_cast<std::size_t>(f.degree());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free_dim; ++i) count *= ctx.p().value();
  if (count > kBruteForceLimit) throw Error(Errc::kHypothesisNotMet, "ideal too large for enumeration");
  // f * h mod C for deg h < k - deg f hits each element of (f) exactly once.
  std::vector<RingElement> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Residue> h(free_dim);
    std::uint64_t t = idx;
    for (auto& x : h) {
      x = static_cast<Residue>(t % ctx.p().value());
      t /= ctx.p().value();
    }
    out.push_back(ctx.from_poly(mul(f, FpPoly(ctx.p(), std::move(h)))));
  }
  return out;
}

std::vector<IdealOrbitSums> ideal_orbit_sums(const RpContext& ctx) {
  const Residue p = ctx.p();
  std::vector<IdealOrbitSums> out;
  for (std::size_t j = 0; j < ctx.factorization().count(); ++j) {
    IdealOrbitSums sums{ctx.factorization().factors[j].factor, 0, 0, 0};
    std::set<FpVector> visited;
    for (const auto& m : maximal_ideal_elements(ctx, j)) {
      if (visited.count(m.coords())) continue;
      const OrbitStructure o = orbit_structure(m);
      for (const auto& s : o.orbit.states) visited.insert(s);
      ++sums.orbit_count;
      sums.trace_sum = add_mod(sums.trace_sum, o.trace_sum, p);
      sums.component_sum = add_mod(sums.component_sum, o.component_sum, p);
    }
    out.push_back(std::move(sums));
  }
  return out;
}

Thm67Record theorem_6_7_check(const CorePoly& core, Prime p) {
  const PeriodResult period = period_factor_lcm(core, p);
  const IntPoly c = core.as_poly();
  Thm67Record rec;
  rec.period = period.period;
  rec.p_divides_period = mpz_divisible_ui_p(rec.period.get_mpz_t(), p.value()) != 0;
  rec.ramified = !is_squarefree(FpPoly::from_int(c, p));
  rec.p_divides_resultant = reduce(resultant(c, derivative(c)), p) == 0;
  if (rec.ramified != rec.p_divides_resultant)
    throw Error(Errc::kInternalInconsistency, "squarefree test and resultant disagree for " + core.to_string() +
                                                  " mod " + std::to_string(p.value()));
  rec.agree = rec.p_divides_period == rec.ramified;
  return rec;
}

TranslationSurvey orbit_translation_survey(const RpContext& ctx) {
  const std::uint64_t n = require_small(ctx, 2000);
  std::vector<RingElement> units;
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElement u = ctx.element_at(i);
    if (is_unit(u)) units.push_back(std::move(u));
  }
  TranslationSurvey survey;
  for (std::size_t j = 0; j < ctx.factorization().count(); ++j) {
    // Nonzero orbits of the ideal as sets of states.
    std::vector<std::set<FpVector>> orbits;
    std::set<FpVector> visited;
    for (const auto& m : maximal_ideal_elements(ctx, j)) {
      if (m.is_zero() || visited.count(m.coords())) continue;
      const OrbitRecord o = vector_orbit(m.coords(), ctx.companion());
      std::set<FpVector> states(o.states.begin(), o.states.end());
      visited.insert(states.begin(), states.end());
      orbits.push_back(std::move(states));
    }
    for (std::size_t a = 0; a < orbits.size(); ++a) {
      const RingElement rep = ctx.element(*orbits[a].begin());
      for (std::size_t b = 0; b < orbits.size(); ++b) {
        if (a == b) continue;
        ++survey.orbit_pairs;
        // Multiplication commutes with the A_p action, so one representative suffices.
        const bool found = std::any_of(units.begin(), units.end(), [&](const RingElement& g) {
          return orbits[b].count(mul(rep, g).coords()) > 0;
        });
        if (found) ++survey.pairs_with_unit;
      }
    }
  }
  return survey;
}

}  // namespace recurring
