#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "recurring/fplinalg.hpp"

using namespace recurring;

namespace {

FpMatrix comp(std::initializer_list<long> t, unsigned p) { return FpMatrix::from_int(companion(new_core(t)), Prime(p)); }

FpMatrix random_matrix(std::mt19937_64& gen, unsigned p, std::size_t k) {
  FpMatrix m(Prime(p), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = static_cast<Residue>(gen() % p);
  return m;
}

}  // namespace

TEST_CASE("determinant, rank, inverse") {
  const Prime p(7);
  CHECK(rank(FpMatrix::identity(p, 4)) == 4);
  CHECK(det(FpMatrix::identity(p, 3)) == 1);
  CHECK(det(comp({1, 2, 3}, 7)) == 3);
  CHECK(det(comp({1, 1}, 7)) == 6);  // -1

  const FpMatrix sing = comp({1, 2}, 2);
  CHECK(det(sing) == 0);
  CHECK(rank(sing) == 1);
  try {
    inverse(sing);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kSingularMatrix);
  }

  std::mt19937_64 gen(9);
  for (int i = 0; i < 100; ++i) {
    const FpMatrix m = random_matrix(gen, 5, 1 + i % 4);
    if (det(m) == 0) {
      CHECK(rank(m) < m.size());
      continue;
    }
    CHECK(rank(m) == m.size());
    CHECK(mul(m, inverse(m)).is_identity());
    CHECK(pow(m, -3) == pow(inverse(m), 3));
    // det is multiplicative
    const FpMatrix n = random_matrix(gen, 5, m.size());
    CHECK(det(mul(m, n)) == mul_mod(det(m), det(n), 5));
  }
}

TEST_CASE("row echelon identifies row spaces") {
  const Prime p(3);
  FpMatrix a(p, 2, {1, 2, 2, 1});
  FpMatrix b(p, 2, {2, 1, 0, 0});
  CHECK(row_echelon(a) == row_echelon(b));
  CHECK(row_echelon(FpMatrix::identity(p, 3)).is_identity());
}

TEST_CASE("matrix order") {
  CHECK(matrix_order(comp({1, 1}, 2)) == 3);
  CHECK(matrix_order(comp({1, 1}, 3)) == 8);
  CHECK(matrix_order(comp({2}, 7)) == 3);
  CHECK(matrix_order(comp({1}, 13)) == 1);
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) CHECK(matrix_order(comp({1, 1}, p)) == oracle::fibonacci_pair_period(p));
}

TEST_CASE("vector orbits") {
  const OrbitRecord r = vector_orbit({1, 0}, comp({1, 1}, 2));
  CHECK(r.states == std::vector<FpVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(r.preperiod == 0);
  CHECK(r.period == 3);

  const OrbitRecord zero = vector_orbit({0, 0}, comp({1, 1}, 7));
  CHECK(zero.states.size() == 1);
  CHECK(zero.period == 1);

  // A = [[0,1],[0,1]] mod 2: (1,0) -> (0,1) -> (0,1).
  const OrbitRecord s = vector_orbit({1, 0}, comp({1, 2}, 2));
  CHECK(s.states == std::vector<FpVector>{{1, 0}, {0, 1}});
  CHECK(s.preperiod == 1);
  CHECK(s.period == 1);

  // Against a std::set iteration on random singular and nonsingular inputs.
  std::mt19937_64 gen(31);
  for (int i = 0; i < 60; ++i) {
    const FpMatrix a = random_matrix(gen, 3, 1 + i % 4);
    FpVector v(a.size());
    for (auto& x : v) x = static_cast<Residue>(gen() % 3);
    std::vector<FpVector> seen;
    FpVector w = v;
    while (std::find(seen.begin(), seen.end(), w) == seen.end()) {
      seen.push_back(w);
      w = row_times(w, a);
    }
    const std::uint64_t pre = std::find(seen.begin(), seen.end(), w) - seen.begin();
    const OrbitRecord got = vector_orbit(v, a);
    CHECK(got.states == seen);
    CHECK(got.preperiod == pre);
    CHECK(got.period == seen.size() - pre);
    const OrbitShape shape = orbit_shape(v, a);
    CHECK(shape.preperiod == pre);
    CHECK(shape.period == seen.size() - pre);
  }
}
