#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pfrigid/zlinalg.hpp"

using namespace pfrigid;
using zlinalg::IntMatrix;

namespace {

bool divisibility_chain(const std::vector<Int>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0 && d[i + 1] != 0) return false;
    if (d[i] != 0 && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) return false;
  }
  return d.empty() || d.back() >= 0;
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> e(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> factor(-3, 3);
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = pick(rng), k = pick(rng);
    if (i == k) {
      if (step % 3 == 0) u.negate_row(i);
      continue;
    }
    u.add_row_multiple(i, k, factor(rng));
  }
  return u;
}

}  // namespace

TEST_CASE("snf of small examples") {
  SUBCASE("diag(2,3)") {
    const auto s = zlinalg::smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
  }
  SUBCASE("rank one") {
    const auto s = zlinalg::smith_normal_form(IntMatrix{{0, 6}, {0, 0}});
    CHECK(s.d == IntMatrix{{6, 0}, {0, 0}});
  }
  SUBCASE("identity") {
    const auto s = zlinalg::smith_normal_form(IntMatrix::identity(2));
    CHECK(s.d == IntMatrix::identity(2));
  }
  SUBCASE("non-square") {
    const IntMatrix a{{2, 4, 4}, {-6, 6, 12}};
    const auto s = zlinalg::smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.diagonal() == std::vector<Int>{2, 6});
  }
}

TEST_CASE("cokernel invariants") {
  auto h = zlinalg::cokernel_invariants(IntMatrix(2, 2));
  CHECK(h.b1 == 2);
  CHECK(h.torsion.empty());

  h = zlinalg::cokernel_invariants(IntMatrix{{0, 6}, {0, 0}});
  CHECK(h.b1 == 1);
  CHECK(h.torsion == std::vector<Int>{6});

  // [[1,1],[1,1]] reduces by hand to diag(1, 0)
  h = zlinalg::cokernel_invariants(IntMatrix{{1, 1}, {1, 1}});
  CHECK(h.b1 == 1);
  CHECK(h.torsion.empty());

  h = zlinalg::cokernel_invariants(IntMatrix{{2, 0}, {0, 3}});
  CHECK(h.b1 == 0);
  CHECK(h.torsion == std::vector<Int>{6});
  CHECK(h.to_string() == "Z/6");
}

TEST_CASE("determinant") {
  CHECK(zlinalg::determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(zlinalg::determinant(IntMatrix{{0, 1, 2}, {3, 4, 5}, {6, 7, 9}}) == -3);
  CHECK(zlinalg::determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("snf witnesses on random matrices") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const auto s = zlinalg::smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(is_diagonal(s.d));
    REQUIRE(abs(zlinalg::determinant(s.u)) == 1);
    REQUIRE(abs(zlinalg::determinant(s.v)) == 1);
    REQUIRE(divisibility_chain(s.diagonal()));
  }
}

TEST_CASE("snf entries stay exact beyond 64 bits") {
  IntMatrix a(2, 2);
  a(0, 0) = Int("123456789012345678901234567890");
  a(0, 1) = Int("987654321098765432109876543210");
  a(1, 0) = Int("-55555555555555555555555555555");
  a(1, 1) = 7;
  const auto s = zlinalg::smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(abs(s.d(0, 0) * s.d(1, 1)) == abs(zlinalg::determinant(a)));
}

TEST_CASE("cokernel invariants are unimodular-invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix a = random_matrix(rng, r, c, -6, 6);
    const IntMatrix b = random_unimodular(rng, r) * a * random_unimodular(rng, c);
    CHECK(zlinalg::cokernel_invariants(a) == zlinalg::cokernel_invariants(b));
  }
}

TEST_CASE("product of invariant factors equals gcd of maximal minors") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = random_matrix(rng, 3, 3, -5, 5);
    std::vector<std::vector<long>> raw(3, std::vector<long>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) raw[i][j] = a(i, j).get_si();
    const auto [g, rank] = oracle::minor_gcd(raw);
    const auto s = zlinalg::smith_normal_form(a);
    CHECK(s.rank() == rank);
    Int prod = 1;
    for (const Int& d : s.diagonal())
      if (d != 0) prod *= d;
    if (rank > 0) CHECK(prod == g);
  }
}

TEST_CASE("kernel basis") {
  const IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  const auto basis = zlinalg::kernel_basis(a);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    CHECK(a(0, 0) * v[0] + a(0, 1) * v[1] + a(0, 2) * v[2] == 0);
  }
}
