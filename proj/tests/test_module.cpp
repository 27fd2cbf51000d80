#include <random>

#include "artri/linalg.hpp"
#include "artri/module.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artri;
using artri::testing::alg;
using artri::testing::uniserial;

namespace {

// Same module written in a random basis.
ModuleRep conjugate(const ModuleRep& m, std::mt19937_64& rng) {
  const Fp& f = m.field();
  Mat s;
  do {
    s = testing::random_mat(rng, m.dim(), m.dim(), f);
  } while (!inverse(s));
  Mat si = *inverse(s);
  std::vector<Mat> act;
  for (const auto& a : m.actions()) act.push_back(s * a * si);
  return ModuleRep(m.alg(), m.dim(), act);
}

}  // namespace

TEST_CASE("hom dimensions between uniserials are min(i, j)") {
  for (auto [name, n] : {std::pair{"a3", 3}, std::pair{"a5", 5}})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(hom_dim(uniserial(name, i), uniserial(name, j)) == static_cast<std::size_t>(std::min(i, j)));
  CHECK(hom_dim(uniserial("a5", 2), uniserial("a5", 3)) == 2);
}

TEST_CASE("hom from the regular module and into it") {
  for (auto name : {"a3", "a5", "n22", "n23"}) {
    auto a = alg(name);
    ModuleRep reg = regular_module(a);
    for (std::size_t i = 0; i < a->rank(); ++i) {
      ModuleRep s = simple_module(a, i);
      ModuleRep h = heart(a, i);
      for (const auto& m : {s, h, projective_module(a, i)}) {
        CHECK(hom_dim(reg, m) == m.dim());
        CHECK(hom_dim(m, reg) == m.dim());
      }
    }
  }
  auto n22 = alg("n22");
  CHECK(hom_dim(simple_module(n22, 0), simple_module(n22, 1)) == 0);
  CHECK(hom_dim(simple_module(n22, 0), simple_module(n22, 0)) == 1);
}

TEST_CASE("hom_basis elements intertwine") {
  auto a = alg("n23");
  ModuleRep p = projective_module(a, 0), q = direct_sum(projective_module(a, 1), heart(a, 0));
  for (const auto& h : hom_basis(p, q)) CHECK(is_hom(p, q, h.matrix));
}

TEST_CASE("stable category table for k[X]/(X^5)") {
  const int table[4][4] = {{1, 1, 1, 1}, {1, 2, 2, 1}, {1, 2, 2, 1}, {1, 1, 1, 1}};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(stable_hom_dim(uniserial("a5", i), uniserial("a5", j)) == static_cast<std::size_t>(table[i - 1][j - 1]));
  // general uniserial rule min(i, j, n - i, n - j) over k[X]/(X^3)
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(stable_hom_dim(uniserial("a3", i), uniserial("a3", j)) == static_cast<std::size_t>(std::min({i, j, 3 - i, 3 - j})));
  for (int j = 1; j <= 5; ++j) CHECK(stable_hom_dim(uniserial("a5", 5), uniserial("a5", j)) == 0);
}

TEST_CASE("projective covers and syzygies") {
  auto pc = projective_cover(uniserial("a3", 2));
  CHECK(pc.p.dim() == 3);
  CHECK(kernel_basis(pc.surj.matrix).rows() == 1);
  CHECK(is_hom(pc.p, uniserial("a3", 2), pc.surj.matrix));
  CHECK(artri::rank(pc.surj.matrix) == 2);

  CHECK(is_isomorphic(syzygy(uniserial("a3", 1)), uniserial("a3", 2)));
  CHECK(is_isomorphic(syzygy(syzygy(uniserial("a3", 1))), uniserial("a3", 1)));
  CHECK(is_isomorphic(syzygy(uniserial("a5", 2)), uniserial("a5", 3)));
  CHECK(syzygy(uniserial("a5", 5)).dim() == 0);
  CHECK(projective_cover(uniserial("a5", 5)).p.dim() == 5);
  CHECK_THROWS_AS(projective_cover(ModuleRep::zero(alg("a3"))), Error);

  auto n22 = alg("n22");
  auto c = projective_cover(simple_module(n22, 1));
  CHECK(c.types == Types{1});
  // kernel of the cover lies in the radical of the cover
  Mat k = kernel_basis(c.surj.matrix).transpose();
  Mat r = radical_of(c.p);
  CHECK(artri::rank(hstack(r, k)) == artri::rank(r));
}

TEST_CASE("cosyzygy inverts syzygy up to projectives") {
  for (auto [name, n] : {std::pair{"a3", 3}, std::pair{"a5", 5}})
    for (int i = 1; i < n; ++i) {
      ModuleRep v = uniserial(name, i);
      ModuleRep up = cosyzygy(v);
      CHECK(is_isomorphic(up, uniserial(name, n - i)));
      CHECK(is_isomorphic(syzygy(up), v));
    }
  auto n23 = alg("n23");
  ModuleRep s = simple_module(n23, 0);
  CHECK(is_isomorphic(syzygy(cosyzygy(s)), s));
}

TEST_CASE("Nakayama functor on modules") {
  for (auto name : {"a3", "a5", "n23"}) {
    auto a = alg(name);
    for (std::size_t i = 0; i < a->rank(); ++i)
      for (const auto& m : {simple_module(a, i), heart(a, i), projective_module(a, i)}) {
        ModuleRep nm = nakayama_module(m);
        nm.validate();
        CHECK(is_isomorphic(nm, m));
      }
  }
  auto n22 = alg("n22");
  const auto& pi = n22->nakayama_permutation();
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(is_isomorphic(nakayama_module(projective_module(n22, j)), projective_module(n22, pi[j])));
    CHECK(is_isomorphic(nakayama_module(simple_module(n22, j)), simple_module(n22, pi[j])));
  }
  CHECK(nakayama_module(ModuleRep::zero(n22)).dim() == 0);
  // nu of a map is a map
  ModuleRep p = projective_module(n22, 0), s = simple_module(n22, 0);
  auto pc = projective_cover(s);
  Mat nf = nakayama_map(pc.p, s, pc.surj.matrix);
  CHECK(is_hom(nakayama_module(pc.p), nakayama_module(s), nf));
}

TEST_CASE("hearts") {
  CHECK(heart(alg("a3"), 0).dim() == 1);
  CHECK(is_isomorphic(heart(alg("a5"), 0), uniserial("a5", 3)));
  CHECK_THROWS_AS(heart(alg("pathA2"), 1), Error);
  auto n23 = alg("n23");
  for (std::size_t i = 0; i < 2; ++i) {
    ModuleRep p = projective_module(n23, i);
    CHECK(heart(n23, i).dim() + 2 == p.dim());
    CHECK(heart(n23, i).dim() == radical_of(p).cols() - socle_of(p).cols());
  }
}

TEST_CASE("decomposition with certificates") {
  auto a5 = alg("a5");
  auto d = decompose(regular_module(a5));
  REQUIRE(d.summands.size() == 1);
  CHECK(d.summands[0].multiplicity == 1);

  ModuleRep m13 = direct_sum(uniserial("a5", 1), uniserial("a5", 3));
  auto d13 = decompose(m13);
  REQUIRE(d13.summands.size() == 2);
  std::vector<std::size_t> dims{d13.summands[0].module.dim(), d13.summands[1].module.dim()};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 3});

  auto d22 = decompose(direct_sum(uniserial("a5", 2), uniserial("a5", 2)));
  REQUIRE(d22.summands.size() == 1);
  CHECK(d22.summands[0].multiplicity == 2);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 12; ++t) {
    ModuleRep m = ModuleRep::zero(a5);
    std::vector<std::size_t> want;
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < parts; ++k) {
      int i = 1 + static_cast<int>(rng() % 5);
      want.push_back(static_cast<std::size_t>(i));
      m = direct_sum(m, uniserial("a5", i));
    }
    m = conjugate(m, rng);
    for (std::uint64_t seed : {0ull, 99ull}) {
      auto dc = decompose(m, seed);
      std::vector<std::size_t> got;
      Mat sum(m.dim(), m.dim(), m.field());
      for (const auto& s : dc.summands) {
        CHECK(verify_locality(module_endomorphisms(s.module), s.cert));
        for (std::size_t c = 0; c < s.multiplicity; ++c) {
          got.push_back(s.module.dim());
          CHECK(s.projections[c] * s.inclusions[c] == Mat::identity(s.module.dim(), m.field()));
          sum = sum + s.inclusions[c] * s.projections[c];
        }
      }
      CHECK(sum == Mat::identity(m.dim(), m.field()));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("isomorphism tests") {
  std::mt19937_64 rng(5);
  ModuleRep v2 = uniserial("a5", 2);
  CHECK(is_isomorphic(v2, v2));
  CHECK_FALSE(is_isomorphic(v2, uniserial("a5", 3)));
  CHECK(is_isomorphic(v2, conjugate(v2, rng)));
  auto n23 = alg("n23");
  CHECK_FALSE(is_isomorphic(simple_module(n23, 0), simple_module(n23, 1)));
  CHECK_THROWS_AS(is_isomorphic(v2, uniserial("a3", 2)), Error);
}

TEST_CASE("module validation") {
  auto a3 = alg("a3");
  std::vector<Mat> act(3, Mat::identity(2, a3->field()));
  CHECK_THROWS_AS(ModuleRep(a3, 2, act).validate(), Error);
  CHECK_THROWS_AS(ModuleRep(a3, 2, std::vector<Mat>(2, Mat::identity(2, a3->field()))), Error);
  CHECK(composition_factors(projective_module(alg("n23"), 0)) == std::vector<std::size_t>{2, 1});
}
