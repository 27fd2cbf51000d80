#include <random>

#include "artri/homotopy.hpp"
#include "artri/linalg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artri;
using artri::testing::alg;
using artri::testing::cx;
using artri::testing::uniserial;

namespace {

PerfectComplex lambda_stalk(const AlgebraPtr& a, int n = 0) {
  Types t;
  for (std::size_t i = 0; i < a->rank(); ++i) t.push_back(i);
  return PerfectComplex::stalk(a, t, n);
}

PerfectComplex contractible(const AlgebraPtr& a, std::size_t type, int n) {
  PerfectComplex p = PerfectComplex::stalk(a, {type}, n);
  return cone(identity_map(p));
}

// The same complex seen through random elementary automorphisms g_n of each
// term: d'_n = g_n d_n g_{n-1}^{-1}, so that units stop sitting on the diagonal.
PerfectComplex random_conjugate(const PerfectComplex& c, std::mt19937_64& rng) {
  const Algebra& A = c.algebra();
  std::map<int, ProjMat> g, gi;
  for (const auto& [n, t] : c.terms()) {
    ProjMat m = ProjMat::identity(A, t), mi = ProjMat::identity(A, t);
    for (int k = 0; k < 6; ++k) {
      std::size_t a = rng() % t.size(), b = rng() % t.size();
      ProjMat e = ProjMat::identity(A, t), ei = ProjMat::identity(A, t);
      if (a == b) {
        Scalar s = 1 + static_cast<Scalar>(rng() % (A.field().p() - 1));
        e.at(a, a) = A.scale(e.at(a, a), s);
        ei.at(a, a) = A.scale(ei.at(a, a), A.field().inv(s));
      } else {
        const Mat& cb = A.corner(t[a], t[b]);
        if (cb.rows() == 0) continue;
        std::size_t r = rng() % cb.rows();
        Elem x(cb.row_span(r).begin(), cb.row_span(r).end());
        e.at(a, b) = x;
        ei.at(a, b) = A.scale(x, A.field().neg(1));
      }
      m = pm_mul(A, e, m);
      mi = pm_mul(A, mi, ei);
    }
    g[n] = m;
    gi[n] = mi;
  }
  std::map<int, ProjMat> d;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) d[n] = pm_mul(A, pm_mul(A, g[n], c.diff(n)), gi[n - 1]);
  return PerfectComplex(c.alg(), c.terms(), d);
}

void check_homology_iso(const PerfectComplex& a, const PerfectComplex& b) {
  int lo = std::min(a.lo(), b.lo()) - 1, hi = std::max(a.hi(), b.hi()) + 1;
  for (int n = lo; n <= hi; ++n) CHECK(is_isomorphic(homology(a, n), homology(b, n)));
}

}  // namespace

TEST_CASE("shift laws") {
  auto a3 = alg("a3");
  PerfectComplex c1 = cx("a3", "C1");
  CHECK(shift(c1, 0) == c1);
  CHECK(shift(shift(c1, 2), -3) == shift(c1, -1));
  CHECK(shift(shift(c1, 1), 1) == shift(c1, 2));
  PerfectComplex l2 = shift(lambda_stalk(a3), 2);
  CHECK(l2.lo() == 2);
  CHECK(l2.hi() == 2);
  CHECK(shift(cx("a3", "Lambda3"), -1) == l2);
}

TEST_CASE("homology of basic complexes") {
  auto a3 = alg("a3");
  PerfectComplex p = lambda_stalk(a3);
  CHECK(homology(p, 0).dim() == 3);
  CHECK(homology(p, 1).dim() == 0);
  PerfectComplex c1 = cx("a3", "C1");
  CHECK(is_isomorphic(homology(c1, 1), uniserial("a3", 2)));
  CHECK(is_isomorphic(homology(c1, 0), uniserial("a3", 2)));
  PerfectComplex pm = from_resolution(uniserial("a3", 1), 1);
  CHECK(is_isomorphic(homology(pm, 0), uniserial("a3", 1)));
  CHECK(is_isomorphic(homology(pm, 1), uniserial("a3", 1)));
  // H_S over a3 has homology dims (2, 1, 2)
  PerfectComplex hs = cx("a3", "HS");
  CHECK(homology(hs, 2).dim() == 2);
  CHECK(homology(hs, 1).dim() == 1);
  CHECK(homology(hs, 0).dim() == 2);
}

TEST_CASE("minimization") {
  auto a3 = alg("a3");
  CHECK(minimize(contractible(a3, 0, 0)).is_zero());
  PerfectComplex c1 = cx("a3", "C1");
  CHECK(minimize(c1) == c1);
  PerfectComplex padded = direct_sum(lambda_stalk(a3), contractible(a3, 0, 0));
  CHECK(minimize(padded) == lambda_stalk(a3));
  CHECK(is_minimal(c1));
  CHECK_FALSE(is_minimal(padded));
}

TEST_CASE("property: minimize removes random contractible padding") {
  std::mt19937_64 rng(17);
  for (auto name : {"a3", "a5", "n22", "n23"}) {
    auto a = alg(name);
    std::vector<PerfectComplex> seeds = {lambda_stalk(a)};
    for (std::size_t i = 0; i < a->rank(); ++i) {
      seeds.push_back(from_resolution(simple_module(a, i), 2));
      seeds.push_back(from_resolution(heart(a, i).dim() ? heart(a, i) : simple_module(a, i), 1));
    }
    for (const auto& s : seeds) {
      for (int t = 0; t < 3; ++t) {
        PerfectComplex c = s;
        int pads = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < pads; ++k) {
          int deg = s.lo() - 1 + static_cast<int>(rng() % static_cast<unsigned>(s.hi() - s.lo() + 3));
          c = direct_sum(c, contractible(a, rng() % a->rank(), deg));
        }
        c = random_conjugate(c, rng);
        c.validate();
        Minimized m = minimize_with_maps(c);
        m.complex.validate();
        m.proj.validate();
        m.incl.validate();
        CHECK(is_minimal(m.complex));
        CHECK(is_isomorphic(m.complex, s));
        CHECK(minimize(m.complex) == m.complex);
        // incl then proj is the identity of the minimal model; proj then incl is homotopic to id
        ChainMap ip = compose(m.incl, m.proj);
        HomSpace end_min(m.complex, m.complex);
        CHECK(end_min.is_null_homotopic(cm_add(ip, cm_scale(identity_map(m.complex), a->field().neg(1)))));
        HomSpace end_c(c, c);
        CHECK(end_c.is_null_homotopic(cm_add(compose(m.proj, m.incl), cm_scale(identity_map(c), a->field().neg(1)))));
        check_homology_iso(c, m.complex);
      }
    }
  }
}

TEST_CASE("cones") {
  auto a3 = alg("a3");
  PerfectComplex c1 = cx("a3", "C1"), l = lambda_stalk(a3);
  ChainMap zero{c1, l, {}};
  PerfectComplex z = cone(zero);
  z.validate();
  CHECK(is_isomorphic(z, direct_sum(shift(c1, 1), l)));
  CHECK(minimize(cone(identity_map(c1))).is_zero());
  // cone of the top-to-socle map P -> nu P is C_1 itself
  ChainMap w{l, nu(l), {}};
  ProjMat m = ProjMat::zero(*a3, {0}, {0});
  m.at(0, 0) = a3->basis_elem(2);
  w.maps[0] = m;
  w.validate();
  CHECK(is_isomorphic(cone(w), c1));
}

TEST_CASE("hom spaces in the homotopy category") {
  auto a3 = alg("a3");
  PerfectComplex l = lambda_stalk(a3), c1 = cx("a3", "C1");
  CHECK(hom_dim(l, l) == 3);
  CHECK(hom_dim(l, shift(c1, -1)) == 2);
  CHECK(hom_dim(l, shift(l, 1)) == 0);
  CHECK(hom_dim(c1, shift(c1, 1)) >= 1);
  for (auto name : {"a3", "a5", "n22", "n23"}) {
    auto a = alg(name);
    std::vector<PerfectComplex> fx = {lambda_stalk(a)};
    for (std::size_t i = 0; i < a->rank(); ++i) {
      fx.push_back(from_resolution(simple_module(a, i), 1));
      fx.push_back(from_resolution(simple_module(a, i), 3));
    }
    for (const auto& c : fx) {
      // representability: Hom(Lambda[n], C) = H_n(C)
      for (int n = -5; n <= 5; ++n) CHECK(hom_dim(lambda_stalk(a, n), c) == homology(c, n).dim());
      // additivity in the first variable
      for (const auto& d : fx)
        CHECK(hom_dim(direct_sum(c, d), fx[0]) == hom_dim(c, fx[0]) + hom_dim(d, fx[0]));
    }
  }
}

TEST_CASE("complex decomposition") {
  auto a3 = alg("a3");
  PerfectComplex c1 = cx("a3", "C1");
  auto d1 = decompose_complex(c1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].multiplicity == 1);
  auto d2 = decompose_complex(direct_sum(c1, c1));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].multiplicity == 2);
  auto d3 = decompose_complex(direct_sum(c1, direct_sum(lambda_stalk(a3, 1), cx("a3", "HS"))), 4);
  CHECK(d3.size() == 3);
  for (const auto& s : d3) {
    CHECK(verify_locality(complex_endomorphisms(s.complex), s.cert));
    for (const auto& i : s.inclusions) i.validate();
  }
  CHECK(is_indecomposable(cx("a5", "HS")));
  CHECK_FALSE(is_indecomposable(direct_sum(c1, c1)));
}

TEST_CASE("resolutions") {
  PerfectComplex r0 = from_resolution(uniserial("a3", 1), 0);
  CHECK(r0.lo() == 0);
  CHECK(r0.hi() == 0);
  PerfectComplex r1 = from_resolution(uniserial("a3", 1), 1);
  CHECK(r1.term(1) == Types{0});
  CHECK(r1.diff(1).at(0, 0) == Elem{0, 1, 0});
  PerfectComplex r3 = from_resolution(uniserial("a5", 2), 3);
  CHECK(r3.lo() == 0);
  CHECK(r3.hi() == 3);
  for (int n = 0; n <= 3; ++n) CHECK(r3.term(n) == Types{0});
  CHECK(is_minimal(r3));
  CHECK(is_indecomposable(r3));
  CHECK(is_isomorphic(homology(r3, 0), uniserial("a5", 2)));
}

TEST_CASE("Nakayama twist on complexes") {
  auto n22 = alg("n22");
  PerfectComplex p0 = PerfectComplex::stalk(n22, {0});
  CHECK(nu(p0).term(0) == Types{1});
  CHECK(nu_inv(nu(p0)) == p0);
  PerfectComplex r = from_resolution(simple_module(n22, 0), 2);
  nu(r).validate();
  CHECK(nu_power(nu_power(r, 3), -3) == r);
  CHECK(nu(cx("a3", "C1")) == cx("a3", "C1"));
}
