#include "artri/algebra.hpp"
#include "artri/io.hpp"
#include "artri/linalg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artri;
using artri::testing::alg;

namespace {

AlgebraSpec poly_spec(std::uint32_t p, std::size_t n) {
  AlgebraSpec s;
  s.name = "t";
  s.p = p;
  s.dim = n;
  for (std::size_t i = 0; i < n; ++i) s.basis.push_back("x" + std::to_string(i));
  s.idempotents = {0};
  for (std::size_t i = 1; i < n; ++i) s.radical.push_back(i);
  s.mult.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) s.mult[i][j][i + j] = 1;
  return s;
}

ErrorCode code_of(const AlgebraSpec& s) {
  try {
    Algebra::validate(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("validation passed");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("truncated polynomial algebras") {
  auto a3 = alg("a3");
  CHECK(a3->loewy_length() == 3);
  CHECK(a3->is_self_injective());
  CHECK(a3->is_symmetric());
  CHECK(a3->nakayama_permutation() == std::vector<std::size_t>{0});
  CHECK(a3->cartan() == std::vector<std::vector<std::size_t>>{{3}});
  CHECK_FALSE(a3->has_semisimple_summand());
  // the form lambda(x^a x^b) with lambda = x^2-coefficient is the anti-diagonal
  const Mat& g = *a3->symmetrizing_form();
  CHECK(g == g.transpose());
  CHECK(artri::rank(g) == 3);

  auto a5 = alg("a5");
  CHECK(a5->loewy_length() == 5);
  CHECK(a5->is_symmetric());
  CHECK(a5->is_self_injective());
  CHECK(a5->field().p() == 5);
  CHECK(alg("a2")->loewy_length() == 2);
}

TEST_CASE("symmetrizing form is associative, symmetric and nonsingular") {
  for (auto name : {"a2", "a3", "a5", "n23"}) {
    auto a = alg(name);
    REQUIRE(a->is_symmetric());
    const Mat& g = *a->symmetrizing_form();
    const Fp& f = a->field();
    CHECK(g == g.transpose());
    CHECK(artri::rank(g) == a->dim());
    // form(xy, z) = form(x, yz) on basis triples, with form(u, v) = g(u, v) bilinear
    auto form = [&](const Elem& u, const Elem& v) {
      Scalar s = 0;
      for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) s = f.add(s, f.mul(f.mul(u[i], v[j]), g(i, j)));
      return s;
    };
    for (std::size_t x = 0; x < a->dim(); ++x)
      for (std::size_t y = 0; y < a->dim(); ++y)
        for (std::size_t z = 0; z < a->dim(); ++z) {
          Elem bx = a->basis_elem(x), by = a->basis_elem(y), bz = a->basis_elem(z);
          CHECK(form(a->mul(bx, by), bz) == form(bx, a->mul(by, bz)));
        }
  }
}

TEST_CASE("two-simple self-injective Nakayama algebras") {
  auto n22 = alg("n22");
  CHECK(n22->loewy_length() == 2);
  CHECK(n22->is_self_injective());
  // soc(A e_1) = span(a) has type 2 and vice versa
  CHECK(n22->nakayama_permutation() == std::vector<std::size_t>{1, 0});
  CHECK_FALSE(n22->is_symmetric());
  CHECK(n22->projective_dim(0) == 2);

  auto n23 = alg("n23");
  CHECK(n23->loewy_length() == 3);
  CHECK(n23->nakayama_permutation() == std::vector<std::size_t>{0, 1});
  CHECK(n23->is_symmetric());
  CHECK(n23->cartan() == std::vector<std::vector<std::size_t>>{{2, 1}, {1, 2}});

  for (auto a : {n22, n23}) {
    // sigma is an algebra automorphism permuting the idempotents by pi
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) {
        Elem x = a->basis_elem(i), y = a->basis_elem(j);
        CHECK(a->sigma(a->mul(x, y)) == a->mul(a->sigma(x), a->sigma(y)));
        CHECK(a->sigma_inv(a->sigma(x)) == x);
      }
  }
}

TEST_CASE("non-self-injective path algebra") {
  auto p = alg("pathA2");
  CHECK_FALSE(p->is_self_injective());
  CHECK_FALSE(p->is_symmetric());
  CHECK(p->has_semisimple_summand());
  CHECK_THROWS_AS(p->nakayama_permutation(), Error);
}

TEST_CASE("projective dimensions add up") {
  for (auto name : {"a2", "a3", "a5", "n22", "n23", "pathA2"}) {
    auto a = alg(name);
    std::size_t s = 0;
    for (std::size_t i = 0; i < a->rank(); ++i) s += a->projective_dim(i);
    CHECK(s == a->dim());
  }
}

TEST_CASE("validation rejects broken tables") {
  AlgebraSpec s = poly_spec(2, 3);
  CHECK_NOTHROW(Algebra::validate(s));

  AlgebraSpec na = s;
  na.mult[1][2] = {0, 1, 0};  // x * x^2 = x
  CHECK(code_of(na) == ErrorCode::NotAssociative);

  AlgebraSpec nu = s;
  nu.idempotents = {};
  nu.radical = {0, 1, 2};
  CHECK(code_of(nu) == ErrorCode::NoUnit);

  AlgebraSpec ni = s;
  ni.radical = {1};
  ni.idempotents = {0, 2};
  CHECK(code_of(ni) == ErrorCode::NotSplitBasic);

  AlgebraSpec ov = s;
  ov.radical = {0, 1, 2};
  CHECK(code_of(ov) == ErrorCode::NotSplitBasic);

  CHECK_THROWS_AS(parse_algebra_spec("{ not json"), Error);
  CHECK_THROWS_AS(parse_algebra_spec(R"({"name":"x","p":4,"dim":1,"basis":["1"],"idempotents":[0],"radical":[],"mult":[[[1]]]})"),
                  Error);
}

TEST_CASE("radical must be an ideal and nilpotent") {
  // k x k with basis e, f where f declared radical but f^2 = f
  AlgebraSpec s;
  s.name = "bad";
  s.p = 3;
  s.dim = 2;
  s.basis = {"e", "f"};
  s.idempotents = {0};
  s.radical = {1};
  s.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};
  CHECK(code_of(s) == ErrorCode::RadicalNotNilpotent);
}
