#include <random>

#include "artri/linalg.hpp"
#include "artri/poly.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artri;

TEST_CASE("rref on small hand-reduced matrices") {
  Fp f2(2), f5(5);
  auto id = rref(Mat::identity(2, f2));
  CHECK(id.rank == 2);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto z = rref(Mat(3, 2, f2));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());

  auto r = rref(Mat::from_rows({{1, 2}, {2, 4}}, f5));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of multiplication by x on F_2[X]/(X^3)") {
  Fp f(2);
  // basis 1, x, x^2; column j is x * basis_j
  Mat mx = Mat::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, f);
  Mat k = kernel_basis(mx);
  REQUIRE(k.rows() == 1);
  CHECK(k == Mat::from_rows({{0, 0, 1}}, f));
  CHECK(kernel_basis(Mat::identity(4, f)).rows() == 0);
  CHECK(kernel_basis(Mat(2, 3, f)).rows() == 3);
}

TEST_CASE("solve by back-substitution") {
  Fp f(2);
  auto x = solve(Mat::from_rows({{1, 1}, {0, 1}}, f), Mat::from_rows({{0}, {1}}, f));
  REQUIRE(x);
  CHECK(*x == Mat::from_rows({{1}, {1}}, f));
  CHECK_FALSE(solve(Mat(2, 2, f), Mat::from_rows({{1}, {0}}, f)));
  Mat b = Mat::from_rows({{1, 0}, {1, 1}}, f);
  CHECK(*solve(Mat::identity(2, f), b) == b);
  CHECK_THROWS_AS(solve(Mat(2, 2, f), Mat(3, 1, f)), Error);
}

TEST_CASE("mixing characteristics is an error") {
  CHECK_THROWS_AS(Mat::identity(2, Fp(2)) * Mat::identity(2, Fp(3)), Error);
  CHECK_THROWS_AS(Fp(4), Error);
}

TEST_CASE("property: rank-nullity, rref idempotence, solve exactness") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 2147483647u}) {
    Fp f(p);
    for (int t = 0; t < 40; ++t) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Mat m = testing::random_mat(rng, r, c, f, static_cast<int>(rng() % 3));
      auto rr = rref(m);
      Mat k = kernel_basis(m);
      CHECK(rr.rank + k.rows() == c);
      CHECK(rr.pivots.size() == rr.rank);
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      for (std::size_t i = 0; i < k.rows(); ++i) CHECK((m * k.row_range(i, 1).transpose()).is_zero());
      Mat b = testing::random_mat(rng, r, 2, f);
      if (auto x = solve(m, b)) CHECK(m * *x == b);
      Mat y = testing::random_mat(rng, c, 1, f);
      auto x2 = solve(m, m * y);
      REQUIRE(x2);
      CHECK(m * *x2 == m * y);
      if (r == c) {
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rr.rank == r));
        if (inv) CHECK(m * *inv == Mat::identity(r, f));
      }
    }
  }
}

TEST_CASE("property: coordinates recover combinations") {
  std::mt19937_64 rng(11);
  Fp f(5);
  for (int t = 0; t < 30; ++t) {
    Mat fam = row_space_basis(testing::random_mat(rng, 4, 6, f));
    Coordinates c(fam);
    Mat coeff = testing::random_mat(rng, 1, fam.rows(), f);
    Mat v = coeff * fam;
    auto x = c.of(v.row_span(0));
    REQUIRE(x);
    CHECK(std::vector<Scalar>(coeff.row_span(0).begin(), coeff.row_span(0).end()) == *x);
  }
}

TEST_CASE("polynomials: minimal polynomial and roots") {
  Fp f(5);
  std::mt19937_64 rng(0);
  // diag(1, 1, 3) has minimal polynomial (x - 1)(x - 3) = x^2 - 4x + 3
  Mat d = Mat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 3}}, f);
  CHECK(minimal_polynomial(d) == Poly{3, 1, 1});
  CHECK(poly_roots(minimal_polynomial(d), f, rng) == std::vector<Scalar>{1, 3});
  // Jordan block: (x - 2)^2
  Mat j = Mat::from_rows({{2, 0}, {1, 2}}, f);
  Poly mp = minimal_polynomial(j);
  CHECK(mp == Poly{4, 1, 1});
  CHECK(root_multiplicity(mp, 2, f) == 2);
  // x^2 + 2 has no roots mod 5
  CHECK(poly_roots(Poly{2, 0, 1}, f, rng).empty());
  // large prime goes through the splitting path
  Fp big(2147483647u);
  Poly q = poly_mul(Poly{big.neg(12345), 1}, Poly{big.neg(999), 1}, big);
  CHECK(poly_roots(q, big, rng) == std::vector<Scalar>{999, 12345});
}
