#include <random>

#include "doctest.h"
#include "svar/error.hpp"
#include "svar/matrix.hpp"

using namespace svar;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  Matrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = rng() % p;
  return A;
}

// all vectors of F_p^n in lexicographic order
bool next_vector(Vec& v, std::uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

}  // namespace

TEST_CASE("rref small cases") {
  PrimeField F2(2);
  auto e = rref(F2, Matrix(0, 0));
  CHECK(e.reduced.rows() == 0);
  CHECK(e.pivots.empty());

  auto id = rref(F2, Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r = rref(F2, Matrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(r.reduced == Matrix::from_rows({{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel small cases") {
  PrimeField F2(2);
  CHECK(kernel_basis(F2, Matrix::identity(4)).cols() == 0);
  CHECK(kernel_basis(F2, Matrix(2, 3)).cols() == 3);
  CHECK(rank(F2, kernel_basis(F2, Matrix(2, 3))) == 3);
  Matrix K = kernel_basis(F2, Matrix::from_rows({{1, 1}}));
  REQUIRE(K.cols() == 1);
  CHECK(K.column(0) == Vec{1, 1});
}

TEST_CASE("solve small cases") {
  PrimeField F3(3);
  CHECK(*solve(F3, Matrix::identity(2), Vec{1, 0}) == Vec{1, 0});
  CHECK(!solve(F3, Matrix::from_rows({{0}}), Vec{1}));
  CHECK(*solve(F3, Matrix::from_rows({{1, 1}, {0, 0}}), Vec{2, 0}) == Vec{2, 0});
  CHECK_THROWS_AS(solve(F3, Matrix::identity(2), Vec{1}), UsageError);
}

TEST_CASE("field axioms") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    PrimeField F(p);
    for (Elem a = 1; a < std::min<std::uint32_t>(p, 200); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
  CHECK_THROWS(PrimeField(4));
  CHECK_THROWS(PrimeField(1));
}

TEST_CASE("rank-nullity and idempotence on random matrices") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = rng() % 7, c = rng() % 9;
      Matrix A = random_matrix(rng, r, c, p);
      auto R = rref(F, A);
      CHECK(rref(F, R.reduced).reduced == R.reduced);
      Matrix K = kernel_basis(F, A);
      CHECK(K.cols() + R.pivots.size() == c);
      CHECK(mul(F, A, K).is_zero());
      CHECK(rank(F, K) == K.cols());
    }
  }
}

TEST_CASE("solve agrees with exhaustive search") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % (p == 2 ? 8 : 6);
      Matrix A = random_matrix(rng, r, c, p);
      Vec b(r);
      for (auto& x : b) x = rng() % p;
      auto x = solve(F, A, b);
      bool found = false;
      Vec v(c, 0);
      do {
        if (mul_vec(F, A, v) == b) found = true;
      } while (!found && next_vector(v, p));
      CHECK(found == x.has_value());
      if (x) CHECK(mul_vec(F, A, *x) == b);
    }
  }
}

TEST_CASE("linear solver matches solve") {
  std::mt19937 rng(3);
  PrimeField F(5);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix A = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 5);
    LinearSolver S(F, A);
    Vec b(A.rows());
    for (auto& x : b) x = rng() % 5;
    auto x1 = solve(F, A, b);
    auto x2 = S.solve(b);
    CHECK(x1.has_value() == x2.has_value());
    if (x2) CHECK(mul_vec(F, A, *x2) == b);
  }
}
