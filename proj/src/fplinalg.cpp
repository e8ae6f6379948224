#include "recurring/fplinalg.hpp"

#include <map>
#include <unordered_map>

namespace recurring {

namespace {

void check_same(const FpMatrix& a, const FpMatrix& b) {
  if (a.modulus() != b.modulus()) throw Error(Errc::kModulusMismatch, "matrices over different fields");
  if (a.size() != b.size()) throw Error(Errc::kHypothesisNotMet, "matrix dimensions differ");
}

void mul_into(const FpMatrix& a, const FpMatrix& b, FpMatrix& out) {
  const std::size_t k = a.size();
  const std::uint64_t p = a.modulus();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc = (acc + std::uint64_t{a(i, l)} * b(l, j)) % p;
      out(i, j) = static_cast<Residue>(acc);
    }
}

// Gaussian elimination in place; returns (rank, det) of the square input.
std::pair<std::size_t, Residue> eliminate(FpMatrix& m, bool reduce_above) {
  const std::size_t k = m.size();
  const Residue p = m.modulus();
  Residue d = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < k; ++col) {
    std::size_t piv = r;
    while (piv < k && m(piv, col) == 0) ++piv;
    if (piv == k) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m(piv, j), m(r, j));
      d = sub_mod(0, d, p);
    }
    d = mul_mod(d, m(r, col), p);
    const Residue inv = inv_mod(m(r, col), p);
    for (std::size_t j = 0; j < k; ++j) m(r, j) = mul_mod(m(r, j), inv, p);
    for (std::size_t i = reduce_above ? 0 : r + 1; i < k; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Residue f = m(i, col);
      for (std::size_t j = 0; j < k; ++j) m(i, j) = sub_mod(m(i, j), mul_mod(f, m(r, j), p), p);
    }
    ++r;
  }
  if (r < k) d = 0;
  return {r, d};
}

bool fits_u64(Residue p, std::size_t k) {
  unsigned __int128 v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    v *= p;
    if (v >> 63) return false;
  }
  return true;
}

std::uint64_t encode(const FpVector& v, Residue p) {
  std::uint64_t key = 0;
  for (Residue x : v) key = key * p + x;
  return key;
}

// Visits v, v*a, v*a^2, ... recording first-visit indices until a repeat.
template <typename Visit>
OrbitShape orbit_with_index(const FpVector& v, const FpMatrix& a, Visit&& visit) {
  const Residue p = a.modulus();
  FpVector cur = v;
  for (auto& x : cur) x %= p;
  auto run = [&](auto& seen, auto key_of) -> OrbitShape {
    for (std::uint64_t n = 0;; ++n) {
      auto [it, inserted] = seen.try_emplace(key_of(cur), n);
      if (!inserted) return {it->second, n - it->second};
      visit(cur);
      cur = row_times(cur, a);
    }
  };
  if (fits_u64(p, v.size())) {
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    return run(seen, [p](const FpVector& s) { return encode(s, p); });
  }
  std::map<FpVector, std::uint64_t> seen;
  return run(seen, [](const FpVector& s) { return s; });
}

}  // namespace

FpMatrix::FpMatrix(Prime p, std::size_t k, std::vector<Residue> row_major)
    : p_(p), k_(k), a_(std::move(row_major)) {
  if (a_.size() != k * k) throw Error(Errc::kHypothesisNotMet, "FpMatrix: entry count is not k*k");
  for (auto& x : a_) x %= p_.value();
}

FpMatrix FpMatrix::identity(Prime p, std::size_t k) {
  FpMatrix m(p, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_int(const IntMatrix& m, Prime p) {
  FpMatrix out(p, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = reduce(m(i, j), p);
  return out;
}

FpVector FpMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * k_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_)};
}

Residue FpMatrix::trace() const {
  Residue t = 0;
  for (std::size_t i = 0; i < k_; ++i) t = add_mod(t, (*this)(i, i), p_);
  return t;
}

bool FpMatrix::is_identity() const {
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

FpMatrix mul(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  FpMatrix out(a.modulus(), a.size());
  mul_into(a, b, out);
  return out;
}

FpMatrix add(const FpMatrix& a, const FpMatrix& b) {
  check_same(a, b);
  FpMatrix out(a.modulus(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = add_mod(a(i, j), b(i, j), a.modulus());
  return out;
}

FpMatrix pow(const FpMatrix& a, std::int64_t n) {
  FpMatrix base = n < 0 ? inverse(a) : a;
  auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  FpMatrix result = FpMatrix::identity(a.modulus(), a.size());
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue det(const FpMatrix& a) {
  FpMatrix m = a;
  return eliminate(m, false).second;
}

std::size_t rank(const FpMatrix& a) {
  FpMatrix m = a;
  return eliminate(m, false).first;
}

FpMatrix row_echelon(const FpMatrix& a) {
  FpMatrix m = a;
  eliminate(m, true);
  return m;
}

FpMatrix inverse(const FpMatrix& a) {
  const std::size_t k = a.size();
  const Residue p = a.modulus();
  FpMatrix m = a;
  FpMatrix inv = FpMatrix::identity(a.modulus(), k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m(piv, col) == 0) ++piv;
    if (piv == k) throw Error(Errc::kSingularMatrix, "matrix has zero determinant mod " + std::to_string(p));
    for (std::size_t j = 0; j < k; ++j) {
      std::swap(m(piv, j), m(col, j));
      std::swap(inv(piv, j), inv(col, j));
    }
    const Residue s = inv_mod(m(col, col), p);
    for (std::size_t j = 0; j < k; ++j) {
      m(col, j) = mul_mod(m(col, j), s, p);
      inv(col, j) = mul_mod(inv(col, j), s, p);
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Residue f = m(i, col);
      for (std::size_t j = 0; j < k; ++j) {
        m(i, j) = sub_mod(m(i, j), mul_mod(f, m(col, j), p), p);
        inv(i, j) = sub_mod(inv(i, j), mul_mod(f, inv(col, j), p), p);
      }
    }
  }
  return inv;
}

FpVector row_times(const FpVector& v, const FpMatrix& a) {
  const std::size_t k = a.size();
  const std::uint64_t p = a.modulus();
  FpVector out(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc = (acc + std::uint64_t{v[i]} * a(i, j)) % p;
    out[j] = static_cast<Residue>(acc);
  }
  return out;
}

std::uint64_t matrix_order(const FpMatrix& m) {
  if (det(m) == 0) throw Error(Errc::kSingularMatrix, "matrix_order of a singular matrix");
  const BigInt big_bound = big_pow(BigInt(m.modulus().value()), m.size()) - 1;
  const std::uint64_t bound = big_bound.fits_ulong_p() ? big_bound.get_ui() : UINT64_MAX;
  FpMatrix cur = m;
  FpMatrix next(m.modulus(), m.size());
  for (std::uint64_t n = 1;; ++n) {
    if (cur.is_identity()) return n;
    if (n >= bound)
      throw Error(Errc::kInternalInconsistency, "matrix order exceeds p^k - 1");
    mul_into(cur, m, next);
    std::swap(cur, next);
  }
}

OrbitRecord vector_orbit(const FpVector& v, const FpMatrix& a) {
  if (v.size() != a.size()) throw Error(Errc::kHypothesisNotMet, "vector and matrix dimensions differ");
  OrbitRecord rec;
  const OrbitShape shape = orbit_with_index(v, a, [&](const FpVector& s) { rec.states.push_back(s); });
  rec.preperiod = shape.preperiod;
  rec.period = shape.period;
  return rec;
}

OrbitShape orbit_shape(const FpVector& v, const FpMatrix& a) {
  if (v.size() != a.size()) throw Error(Errc::kHypothesisNotMet, "vector and matrix dimensions differ");
  if (det(a) == 0) return orbit_with_index(v, a, [](const FpVector&) {});
  // Invertible: the orbit is a pure cycle, so only the start has to be remembered.
  const Residue p = a.modulus();
  FpVector start = v;
  for (auto& x : start) x %= p;
  FpVector cur = row_times(start, a);
  std::uint64_t n = 1;
  while (cur != start) {
    cur = row_times(cur, a);
    ++n;
  }
  return {0, n};
}

}  // namespace recurring
