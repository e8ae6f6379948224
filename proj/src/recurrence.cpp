#include "recurring/recurrence.hpp"

namespace recurring {

SequenceCursor::SequenceCursor(CorePoly core, std::vector<BigInt> window, std::int64_t index,
                               std::optional<Prime> modulus)
    : core_(std::move(core)), window_(std::move(window)), index_(index), modulus_(modulus) {
  if (window_.size() != core_.degree())
    throw Error(Errc::kHypothesisNotMet, "cursor window length must equal the core degree");
  for (auto& x : window_) normalize(x);
}

void SequenceCursor::normalize(BigInt& x) const {
  if (modulus_) mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), modulus_->value());
}

SequenceCursor SequenceCursor::gfp(const CorePoly& core, std::optional<Prime> modulus) {
  return hook_column(core, core.degree(), modulus);
}

SequenceCursor SequenceCursor::glp(const CorePoly& core, std::optional<Prime> modulus) {
  const std::size_t k = core.degree();
  std::vector<BigInt> g(k);
  g[0] = static_cast<unsigned long>(k);
  for (std::size_t n = 1; n < k; ++n) {
    BigInt acc = core.t(n) * static_cast<unsigned long>(n);
    for (std::size_t j = 1; j < n; ++j) acc += core.t(j) * g[n - j];
    g[n] = std::move(acc);
  }
  return SequenceCursor(core, std::move(g), static_cast<std::int64_t>(k) - 1, modulus);
}

SequenceCursor SequenceCursor::hook_column(const CorePoly& core, std::size_t column,
                                           std::optional<Prime> modulus) {
  const std::size_t k = core.degree();
  if (column < 1 || column > k) throw Error(Errc::kLegOutOfRange, "column outside 1..k");
  // Rows -k+1..0 are the identity block.
  std::vector<BigInt> w(k);
  w[column - 1] = 1;
  return SequenceCursor(core, std::move(w), 0, modulus);
}

void SequenceCursor::next() {
  const std::size_t k = core_.degree();
  BigInt f = 0;
  for (std::size_t j = 1; j <= k; ++j) f += core_.t(j) * window_[k - j];
  normalize(f);
  window_.erase(window_.begin());
  window_.push_back(std::move(f));
  ++index_;
}

void SequenceCursor::prev() {
  const std::size_t k = core_.degree();
  // f_(n-k) = (f_n - sum_(j<k) t_j f_(n-j)) / t_k
  BigInt num = window_[k - 1];
  for (std::size_t j = 1; j < k; ++j) num -= core_.t(j) * window_[k - 1 - j];
  if (modulus_) {
    const Residue p = modulus_->value();
    const Residue tk = reduce(core_.trailing(), p);
    if (tk == 0)
      throw Error(Errc::kSingularCompanion, "backward step needs p not dividing t_k, p = " + std::to_string(p));
    num *= inv_mod(tk, p);
  } else {
    if (!core_.trailing_is_unit())
      throw Error(Errc::kNonUnitTrailing, "exact backward step needs |t_k| = 1 for " + core_.to_string());
    num *= core_.trailing();  // t_k = +-1 is its own inverse
  }
  normalize(num);
  window_.pop_back();
  window_.insert(window_.begin(), std::move(num));
  --index_;
}

void SequenceCursor::seek(std::int64_t n) {
  while (index_ < n) next();
  while (index_ > n) prev();
}

namespace {

std::vector<BigInt> collect(SequenceCursor cur, std::int64_t from, std::int64_t to) {
  std::vector<BigInt> out;
  if (to < from) return out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  // Indices still inside the current window are read off directly, so a
  // stream seeded above `from` (GLP) needs no backward step.
  const std::int64_t low = cur.index() - static_cast<std::int64_t>(cur.window().size()) + 1;
  if (from >= low && from <= cur.index()) {
    for (std::int64_t n = from; n <= std::min(to, cur.index()); ++n)
      out.push_back(cur.window()[static_cast<std::size_t>(n - low)]);
  } else {
    cur.seek(from);
    out.push_back(cur.value());
  }
  while (cur.index() < to) {
    cur.next();
    out.push_back(cur.value());
  }
  return out;
}

BigInt signed_by_leg(BigInt v, unsigned leg) { return leg % 2 ? BigInt(-v) : v; }

}  // namespace

BigInt gfp(const CorePoly& core, std::int64_t n) {
  auto c = SequenceCursor::gfp(core);
  c.seek(n);
  return c.value();
}

BigInt glp(const CorePoly& core, std::int64_t n) { return collect(SequenceCursor::glp(core), n, n).front(); }

std::vector<BigInt> gfp_range(const CorePoly& core, std::int64_t from, std::int64_t to,
                              std::optional<Prime> modulus) {
  return collect(SequenceCursor::gfp(core, modulus), from, to);
}

std::vector<BigInt> glp_range(const CorePoly& core, std::int64_t from, std::int64_t to,
                              std::optional<Prime> modulus) {
  return collect(SequenceCursor::glp(core, modulus), from, to);
}

BigInt schur_hook(const CorePoly& core, SchurHookIndex idx) {
  const std::size_t k = core.degree();
  if (idx.leg + 1 > k)
    throw Error(Errc::kLegOutOfRange, "leg " + std::to_string(idx.leg) + " exceeds k-1 = " + std::to_string(k - 1));
  // Column k - leg carries (-1)^leg S_(n,1^leg).
  const auto v = collect(SequenceCursor::hook_column(core, k - idx.leg), idx.arm, idx.arm);
  return signed_by_leg(v.front(), idx.leg);
}

IntMatrix companion_inverse(const CorePoly& core) {
  if (!core.trailing_is_unit())
    throw Error(Errc::kNonUnitTrailing, "A^-1 is not integral unless |t_k| = 1 for " + core.to_string());
  const std::size_t k = core.degree();
  const BigInt& inv_tk = core.trailing();  // +-1
  IntMatrix m(k);
  for (std::size_t j = 0; j + 1 < k; ++j) m(0, j) = -core.t(k - 1 - j) * inv_tk;
  m(0, k - 1) = inv_tk;
  for (std::size_t i = 1; i < k; ++i) m(i, i - 1) = 1;
  return m;
}

IntMatrix companion_power(const CorePoly& core, std::int64_t n) {
  const std::size_t k = core.degree();
  const IntMatrix step = n < 0 ? companion_inverse(core) : companion(core);
  IntMatrix acc = IntMatrix::identity(k);
  const std::int64_t steps = n < 0 ? -n : n;
  for (std::int64_t i = 0; i < steps; ++i) acc = acc * step;
  return acc;
}

IntMatrix companion_power_from_hooks(const CorePoly& core, std::int64_t n) {
  const std::size_t k = core.degree();
  const auto sk = static_cast<std::int64_t>(k);
  IntMatrix m(k);
  for (std::size_t j = 1; j <= k; ++j) {
    const auto leg = static_cast<unsigned>(k - j);
    // Entry (i, j) = (-1)^(k-j) S_(n-k+i, 1^(k-j)) for rows i = 1..k.
    const auto col = collect(SequenceCursor::hook_column(core, j), n - sk + 1, n);
    for (std::size_t i = 1; i <= k; ++i) {
      const BigInt hook = signed_by_leg(col[i - 1], leg);
      m(i - 1, j - 1) = signed_by_leg(hook, leg);
    }
  }
  return m;
}

IntMatrix companion_power_entries(const CorePoly& core, std::int64_t n) {
  IntMatrix direct = companion_power(core, n);
  if (!(direct == companion_power_from_hooks(core, n)))
    throw Error(Errc::kInternalInconsistency,
                "Schur-hook assembly disagrees with A^" + std::to_string(n) + " for " + core.to_string());
  return direct;
}

std::vector<BigInt> lambda_representation(const CorePoly& core, std::int64_t n) {
  const std::size_t k = core.degree();
  const auto row = n - static_cast<std::int64_t>(k) + 1;
  std::vector<BigInt> c(k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto leg = static_cast<unsigned>(k - 1 - j);
    c[j] = signed_by_leg(schur_hook(core, {row, leg}), leg);
  }
  // Hamilton-Cayley: sum c_j A^j must equal A^n.
  const IntMatrix a = companion(core);
  IntMatrix power = IntMatrix::identity(k);
  IntMatrix sum(k);
  for (std::size_t j = 0; j < k; ++j) {
    sum = sum + c[j] * power;
    power = power * a;
  }
  if (!(sum == companion_power(core, n)))
    throw Error(Errc::kInternalInconsistency,
                "lambda^" + std::to_string(n) + " representation fails Hamilton-Cayley for " + core.to_string());
  return c;
}

IntMatrix different_matrix(const CorePoly& core) {
  const std::size_t k = core.degree();
  const IntPoly d = derivative(core.as_poly());
  const IntMatrix a = companion(core);
  IntMatrix acc(k);
  for (int i = d.degree(); i >= 0; --i) acc = acc * a + d.coeff(static_cast<std::size_t>(i)) * IntMatrix::identity(k);
  return acc;
}

namespace {

std::vector<BigInt> different_column(const CorePoly& core, std::int64_t n_max) {
  const std::size_t k = core.degree();
  const IntMatrix a = companion(core);
  std::vector<BigInt> v = different_matrix(core).row(0);
  std::vector<BigInt> out;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    out.push_back(v[k - 1]);
    std::vector<BigInt> next(k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) next[j] += v[i] * a(i, j);
    v = std::move(next);
  }
  return out;
}

}  // namespace

bool glp_column_check(const CorePoly& core, std::int64_t n_max) {
  return different_column(core, n_max) == glp_range(core, 0, n_max);
}

std::optional<int> glp_column_shift(const CorePoly& core, std::int64_t n_max) {
  const auto k = static_cast<int>(core.degree());
  const auto column = different_column(core, n_max);
  for (int mag = 0; mag <= k; ++mag) {
    for (int s : {mag, -mag}) {
      if (s < 0 && !core.trailing_is_unit()) continue;
      if (column == glp_range(core, s, n_max + s)) return s;
      if (mag == 0) break;
    }
  }
  return std::nullopt;
}

bool trace_equals_glp(const CorePoly& core, std::int64_t n_max) {
  const std::size_t k = core.degree();
  const IntMatrix a = companion(core);
  const auto g = glp_range(core, 0, n_max);
  IntMatrix power = IntMatrix::identity(k);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (power.trace() != g[static_cast<std::size_t>(n)]) return false;
    power = power * a;
  }
  if (!core.trailing_is_unit() || n_max < 1) return true;
  const auto back = glp_range(core, -n_max, -1);
  const IntMatrix inv = companion_inverse(core);
  power = inv;
  for (std::int64_t n = -1; n >= -n_max; --n) {
    if (power.trace() != back[static_cast<std::size_t>(n + n_max)]) return false;
    power = power * inv;
  }
  return true;
}

}  // namespace recurring
