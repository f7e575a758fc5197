#include <random>

#include "doctest.h"
#include "gtw/snf.hpp"

using namespace gtw;

TEST_CASE("elimination agrees with the minors oracle on random matrices") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, std::vector<BigInt>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CHECK(smith_diagonal(m) == smith_diagonal_by_minors(m));
  }
}

TEST_CASE("divisibility chain and known diagonals") {
  IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  auto d = smith_diagonal(m);
  REQUIRE(d.size() == 3);
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] != 0) CHECK(d[i] % d[i - 1] == 0);
  CHECK(d[0] == 2);
  CHECK(smith_diagonal({{0, 0}, {0, 0}}) == std::vector<BigInt>{0, 0});
  CHECK(smith_diagonal({{1, 0}, {0, 1}}) == std::vector<BigInt>{1, 1});
}

TEST_CASE("row lattice membership") {
  IntMatrix m = {{2, 0}, {0, 3}};
  CHECK(in_row_lattice(m, {2, 3}));
  CHECK(in_row_lattice(m, {0, 0}));
  CHECK(in_row_lattice(m, {-4, 9}));
  CHECK(!in_row_lattice(m, {1, 0}));
  CHECK(!in_row_lattice(m, {0, 1}));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> v(2, 0);
    int c0 = coeff(rng), c1 = coeff(rng);
    for (int j = 0; j < 2; ++j) v[j] = c0 * m[0][j] + c1 * m[1][j];
    CHECK(in_row_lattice(m, v));
  }
}

TEST_CASE("abelian invariants") {
  // Z^3, no relators.
  auto free3 = abelian_invariants({}, 3);
  CHECK(free3.free_rank == 3);
  CHECK(free3.torsion.empty());
  CHECK(free3.rank() == 3);

  // Z^2 / <(2,0),(0,2)> = (Z/2)^2.
  auto klein4 = abelian_invariants({{2, 0}, {0, 2}}, 2);
  CHECK(klein4.free_rank == 0);
  CHECK(klein4.torsion == std::vector<BigInt>{2, 2});

  // Z^2 / <(1,1)> = Z.
  auto z = abelian_invariants({{1, 1}}, 2);
  CHECK(z.free_rank == 1);
  CHECK(z.torsion.empty());

  // Z^2 / <(2,2),(0,4)> has torsion 2, 4.
  auto mixed = abelian_invariants({{2, 2}, {0, 4}}, 2);
  CHECK(mixed.free_rank == 0);
  CHECK(mixed.torsion == std::vector<BigInt>{2, 4});
}
