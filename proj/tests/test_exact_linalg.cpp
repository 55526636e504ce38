#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "snc/exact_linalg.hpp"

using namespace snc;

TEST_CASE("smith normal form of small matrices") {
  SUBCASE("identity") {
    auto f = smith_normal_form(IntMatrix::identity(2));
    CHECK(f.d == IntMatrix::identity(2));
    CHECK(f.u == IntMatrix::identity(2));
    CHECK(f.v == IntMatrix::identity(2));
  }
  SUBCASE("2 4 / 6 8") {
    auto m = IntMatrix::from_rows<int>({{2, 4}, {6, 8}});
    auto f = smith_normal_form(m);
    CHECK(f.invariant_factors() == std::vector<Integer>{2, 4});
    CHECK(oracle::determinantal_invariants(m) == std::vector<Integer>{2, 4});
    CHECK(f.u * m * f.v == f.d);
  }
  SUBCASE("zero 3x2") {
    IntMatrix z(3, 2);
    auto f = smith_normal_form(z);
    CHECK(f.d.is_zero());
    CHECK(f.rank() == 0);
  }
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 9);
    auto f = smith_normal_form(m);
    REQUIRE(f.u * m * f.v == f.d);
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(abs(determinant(f.v)) == 1);
    for (std::size_t i = 0; i < f.d.rows(); ++i)
      for (std::size_t j = 0; j < f.d.cols(); ++j)
        if (i != j) CHECK(f.d(i, j) == 0);
    auto inv = f.invariant_factors();
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    CHECK(inv == oracle::determinantal_invariants(m));
    if (m.rows() == m.cols() && determinant(m) != 0) {
      Integer prod = 1;
      for (const auto& d : inv) prod *= d;
      CHECK(prod == abs(determinant(m)));
    }
  }
}

TEST_CASE("rank agrees with fraction-free elimination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 9);
    if (trial % 3 == 0 && m.rows() > 1) m.add_row(0, 1, Integer(rng() % 5));  // force dependencies
    if (trial % 5 == 0 && m.rows() > 2) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(2, j) = m(0, j) * 2 - m(1, j) * 3;
    }
    CHECK(rank(m) == oracle::bareiss_rank(m));
    CHECK(rank(to_rational(m)) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("rational kernel basis") {
  auto k = rational_kernel_basis(RatMatrix::from_rows<int>({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(rational_kernel_basis(RatMatrix::identity(3)).cols() == 0);
  CHECK(rational_kernel_basis(RatMatrix::from_rows<int>({{1, 2}, {2, 4}})).cols() == 1);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix mi = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6, 4);
    RatMatrix m = to_rational(mi);
    RatMatrix b = rational_kernel_basis(m);
    CHECK(b.rows() == m.cols());
    CHECK(b.cols() == m.cols() - oracle::bareiss_rank(mi));
    CHECK((m * b).is_zero());
    CHECK(rank(b) == b.cols());
  }
}

TEST_CASE("extend to lattice basis") {
  auto one = extend_to_lattice_basis(IntMatrix::from_rows<int>({{1}, {0}}), 2);
  REQUIRE(one);
  CHECK((*one)(0, 0) == 1);
  CHECK((*one)(1, 0) == 0);
  CHECK(abs(determinant(*one)) == 1);

  CHECK_FALSE(extend_to_lattice_basis(IntMatrix::from_rows<int>({{2}, {0}}), 2));

  auto two = extend_to_lattice_basis(IntMatrix::from_rows<int>({{1, 2}, {0, 1}}), 2);
  REQUIRE(two);
  CHECK(*two == IntMatrix::from_rows<int>({{1, 2}, {0, 1}}));

  CHECK_THROWS_AS(extend_to_lattice_basis(IntMatrix::from_rows<int>({{1, 2}, {1, 2}}), 2), Error);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t k = 1 + rng() % n;
    IntMatrix v = oracle::random_matrix(rng, n, k, 5);
    if (rank(v) != k) continue;
    auto basis = extend_to_lattice_basis(v, n);
    CHECK(basis.has_value() == (lattice_index(v) == 1));
    CHECK(basis.has_value() == (oracle::determinantal_invariants(v).back() == 1));
    if (basis) {
      CHECK(abs(determinant(*basis)) == 1);
      for (std::size_t j = 0; j < k; ++j) CHECK(basis->column(j) == v.column(j));
    }
  }
}

TEST_CASE("determinant, inverse, solve") {
  auto m = IntMatrix::from_rows<int>({{2, 1}, {1, 1}});
  CHECK(determinant(m) == 1);
  CHECK(unimodular_inverse(m) * m == IntMatrix::identity(2));
  auto r = RatMatrix::from_rows<int>({{2, 0}, {0, 4}});
  CHECK(inverse(r) * r == RatMatrix::identity(2));
  auto x = solve(r, RatVector{1, 1});
  REQUIRE(x);
  CHECK((*x)[1] == Rational(1, 4));
  CHECK_FALSE(solve(RatMatrix::from_rows<int>({{1, 1}, {1, 1}}), RatVector{0, 1}));
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}
