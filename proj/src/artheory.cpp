#include "artri/artheory.hpp"

#include <algorithm>
#include <random>

#include "artri/linalg.hpp"
#include "artri/module_complex.hpp"

namespace artri {

namespace {

ChainMap radical_element(const ChainMap& psi, Scalar lambda) {
  const Fp& f = psi.source.algebra().field();
  return cm_add(psi, cm_scale(identity_map(psi.source), f.neg(lambda)));
}

ModChainMap mc_combination(const std::vector<ModChainMap>& basis, std::span<const Scalar> c,
                           const ModuleComplex& s, const ModuleComplex& t) {
  ModChainMap out{s, t, {}};
  for (const auto& [n, m] : s.terms()) {
    Mat acc(t.term(n).dim(), m.dim(), s.alg()->field());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k]) acc = acc + basis[k].at(n).scaled(c[k]);
    out.maps[n] = acc;
  }
  return out;
}

ModChainMap mc_identity(const ModuleComplex& c) {
  ModChainMap id{c, c, {}};
  for (const auto& [n, m] : c.terms()) id.maps[n] = Mat::identity(m.dim(), m.field());
  return id;
}

// First vector of the subspace of Hom_K killed by all the given linear maps
// (each sends a basis index to a coordinate vector).
std::pair<std::size_t, std::vector<Scalar>> annihilated_subspace(
    std::size_t h, const std::vector<std::vector<std::vector<Scalar>>>& images, const Fp& f) {
  // images[r][k] = coordinates of (rho_r * basis_k)
  std::size_t rows = 0;
  for (const auto& im : images)
    if (!im.empty()) rows += im[0].size();
  Mat eqs(rows, h, f);
  std::size_t off = 0;
  for (const auto& im : images) {
    if (im.empty()) continue;
    for (std::size_t k = 0; k < h; ++k)
      for (std::size_t i = 0; i < im[k].size(); ++i) eqs(off + i, k) = im[k][i];
    off += im[0].size();
  }
  Mat ker = kernel_basis(eqs);
  if (ker.rows() == 0) return {0, {}};
  return {ker.rows(), std::vector<Scalar>(ker.row_span(0).begin(), ker.row_span(0).end())};
}


}  // namespace

ARTriangle ar_triangle_ending_at(const PerfectComplex& z0, std::uint64_t seed) {
  PerfectComplex z = minimize(z0);
  if (z.is_zero()) throw Error(ErrorCode::NotIndecomposable, "zero complex");
  const Algebra& A = z.algebra();
  const Fp& f = A.field();
  A.nakayama_permutation();

  HomSpace ez(z, z);
  EndoAlgebra end = complex_endomorphisms(z);
  std::mt19937_64 rng(seed);
  SplitResult sr = analyze_endomorphisms(end, rng);
  if (!sr.local) throw Error(ErrorCode::NotIndecomposable, "End(z) is not local");

  PerfectComplex nz = nu(z);
  HomSpace h(z, nz);
  const auto cycles = ez.cycle_basis();
  std::vector<ChainMap> rad;
  for (std::size_t i = 0; i < cycles.size(); ++i) rad.push_back(radical_element(cycles[i], sr.cert.lambdas[i]));

  std::vector<std::vector<std::vector<Scalar>>> images;
  for (const auto& r : rad) {
    std::vector<std::vector<Scalar>> im;
    for (const auto& b : h.basis()) im.push_back(h.coords(compose(r, b)));
    images.push_back(std::move(im));
  }
  auto [sdim, coords] = annihilated_subspace(h.dim(), images, f);
  if (sdim == 0) throw Error(ErrorCode::NoSocleElement, "Hom_K(z, nu z) has no element killed by Rad End(z)");

  ARTriangle t;
  t.z = z;
  t.w = h.combination(coords);
  t.cert.hom_dim = h.dim();
  t.cert.socle_dim = sdim;
  t.cert.coords = coords;
  t.cert.end_cert = sr.cert;
  t.cert.right_annihilated = true;
  HomSpace hn(z, nz);
  for (const auto& r : rad)
    if (!hn.is_null_homotopic(compose(t.w, nu(r)))) t.cert.right_annihilated = false;

  PerfectComplex ycone = shift(cone(t.w), -1);
  t.x = shift(nz, -1);
  ChainMap f0{t.x, ycone, {}}, g0{ycone, z, {}};
  for (const auto& [n, ty] : ycone.terms()) {
    const Types& zt = z.term(n);
    const Types& xt = t.x.term(n);
    ProjMat p = ProjMat::zero(A, ty, zt), i = ProjMat::zero(A, xt, ty);
    for (std::size_t a = 0; a < zt.size(); ++a) p.at(a, a) = A.idempotent(zt[a]);
    for (std::size_t a = 0; a < xt.size(); ++a) i.at(a, zt.size() + a) = A.idempotent(xt[a]);
    if (!zt.empty()) g0.maps[n] = p;
    if (!xt.empty()) f0.maps[n] = i;
  }
  Minimized mm = minimize_with_maps(ycone);
  t.y = mm.complex;
  t.f = compose(f0, mm.proj);
  t.g = compose(mm.incl, g0);
  return t;
}

ARSequence ar_sequence(const ModuleRep& m, std::uint64_t seed) {
  if (m.dim() == 0) throw Error(ErrorCode::ZeroModule, "AR sequence of the zero module");
  if (is_projective(m)) throw Error(ErrorCode::ProjectiveInput, "module is projective");
  if (!is_indecomposable(m, seed)) throw Error(ErrorCode::NotIndecomposable, "module is decomposable");
  const Fp& f = m.field();

  // (1) minimal presentation P_1 -> P_0 -> M
  ModuleComplex p = to_module_complex(from_resolution(m, 1));
  ProjectiveCover pc = projective_cover(m);
  // (2) apply nu term-wise
  ModuleComplex np = nakayama(p);
  // (3) socle element of Hom_K(P, nu P) as a left End(P)-module
  ModuleHomK h(p, np);
  ModuleHomK e(p, p);
  std::mt19937_64 rng(seed);
  SplitResult sr = analyze_endomorphisms(module_complex_endomorphisms(p), rng);
  if (!sr.local) throw Error(ErrorCode::NotIndecomposable, "End of the presentation is not local");
  auto cycles = e.cycle_basis();
  std::vector<std::vector<std::vector<Scalar>>> images;
  ModChainMap id = mc_identity(p);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::vector<Scalar> c{1, f.neg(sr.cert.lambdas[i])};
    ModChainMap r = mc_combination({cycles[i], id}, c, p, p);
    std::vector<std::vector<Scalar>> im;
    for (const auto& b : h.basis()) im.push_back(h.coords(compose(r, b)));
    images.push_back(std::move(im));
  }
  auto [sdim, coords] = annihilated_subspace(h.dim(), images, f);
  if (sdim == 0) throw Error(ErrorCode::NoSocleElement, "no socle element in Hom_K(P, nu P)");
  ModChainMap w = mc_combination(h.basis(), coords, p, np);

  // (4) cone, (5) zero homology of nu P[-1] -> cone(w)[-1] -> P
  ConeTriangle ct = cocone(w);
  HomologyData hx = homology_data(shift(np, -1), 0), hy = homology_data(ct.y, 0), hz = homology_data(p, 0);
  Mat inj = homology_map(ct.from_x, 0, hx, hy);
  Mat to_h0 = homology_map(ct.to_z, 0, hy, hz);
  Mat iso = pc.surj.matrix * hz.sq.lift;

  ARSequence s;
  s.tau_m = hx.sq.module;
  s.middle = hy.sq.module;
  s.m = m;
  s.inject = {s.tau_m, s.middle, inj};
  s.surject = {s.middle, m, iso * to_h0};
  s.exact = rank(inj) == s.tau_m.dim() && rank(s.surject.matrix) == m.dim() &&
            (s.surject.matrix * inj).is_zero() && s.middle.dim() == s.tau_m.dim() + m.dim();
  // split iff some s : M -> E has surject * s = 1
  auto hb = hom_basis(m, s.middle);
  Mat sys(m.dim() * m.dim(), hb.size(), f);
  for (std::size_t k = 0; k < hb.size(); ++k) {
    auto v = (s.surject.matrix * hb[k].matrix).data();
    for (std::size_t i = 0; i < v.size(); ++i) sys(i, k) = v[i];
  }
  s.split = solve(sys, Mat::column(Mat::identity(m.dim(), f).data(), f)).has_value();
  return s;
}

PerfectComplex e_complex(const ModuleRep& m, std::uint64_t seed) {
  if (!m.alg()->is_symmetric()) throw Error(ErrorCode::NotSymmetric, "'" + m.alg()->name() + "' is not symmetric");
  if (is_projective(m)) throw Error(ErrorCode::ProjectiveInput, "module is projective");
  return ar_triangle_ending_at(from_resolution(m, 1), seed).y;
}

bool is_on_rim(const PerfectComplex& c, std::uint64_t seed) {
  auto parts = decompose_complex(ar_triangle_ending_at(c, seed).y, seed);
  return parts.size() == 1 && parts[0].multiplicity == 1;
}

RimWalk walk_to_rim(const PerfectComplex& c, std::uint64_t seed) {
  RimWalk walk;
  PerfectComplex cur = minimize(c);
  walk.path.push_back(cur);
  const std::size_t start = length(cur);
  for (;;) {
    auto parts = decompose_complex(ar_triangle_ending_at(cur, seed).y, seed);
    if (parts.size() == 1 && parts[0].multiplicity == 1) break;
    if (walk.distance >= start) throw Error(ErrorCode::WalkDiverged, "walk longer than the length of the start");
    auto best = std::min_element(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return length(a.complex) < length(b.complex);
    });
    cur = best->complex;
    walk.path.push_back(cur);
    ++walk.distance;
  }
  if (start - length(cur) != walk.distance)
    throw Error(ErrorCode::WalkDiverged, "distance " + std::to_string(walk.distance) + " but length drop " +
                                             std::to_string(start - length(cur)));
  return walk;
}

std::size_t distance_from_rim(const PerfectComplex& c, std::uint64_t seed) { return walk_to_rim(c, seed).distance; }

PerfectComplex projective_chain_complex(AlgebraPtr alg, std::size_t s, std::size_t n) {
  const Algebra& A = *alg;
  auto inv = A.nakayama_inverse();
  if (projective_module(alg, s).dim() == 1) throw Error(ErrorCode::SimpleProjective, "P_" + std::to_string(s) + " is simple");
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  std::size_t t = s;
  terms[0] = {s};
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t next = inv[t];
    ProjMat d = ProjMat::zero(A, {next}, {t});
    d.at(0, 0) = A.socle_element(t);
    terms[static_cast<int>(k)] = {next};
    diffs[static_cast<int>(k)] = d;
    t = next;
  }
  return PerfectComplex(alg, terms, diffs);
}

PerfectComplex big_homology_complex(AlgebraPtr alg, std::size_t s, std::size_t r) {
  const Algebra& A = *alg;
  const auto& pi = A.nakayama_permutation();
  if (A.loewy_length() < 3) throw Error(ErrorCode::RadicalTooShort, "Loewy length " + std::to_string(A.loewy_length()));
  ModuleRep ps = projective_module(alg, s);
  Subquotient rad = subquotient(ps, radical_of(ps), Mat(ps.dim(), 0, A.field()));
  ProjectiveCover pc = projective_cover(rad.module);
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  terms[1] = pc.types;
  terms[0] = {s};
  ProjMat d1 = ProjMat::zero(A, pc.types, {s});
  for (std::size_t a = 0; a < pc.types.size(); ++a)
    d1.at(a, 0) = proj_elems(A, {s}, rad.lift.apply(pc.gens.col_vec(a)))[0];
  diffs[1] = d1;
  std::size_t t = s;
  for (std::size_t k = 1; k <= r; ++k) {
    std::size_t next = pi[t];
    ProjMat d = ProjMat::zero(A, {t}, {next});
    d.at(0, 0) = A.socle_element(next);
    terms[-static_cast<int>(k)] = {next};
    diffs[1 - static_cast<int>(k)] = d;
    t = next;
  }
  return PerfectComplex(alg, terms, diffs);
}

std::vector<PerfectComplex> rim_ray(const PerfectComplex& c, std::size_t depth, std::uint64_t seed) {
  std::vector<PerfectComplex> ray{minimize(c)};
  auto translate = [](const PerfectComplex& x) { return shift(nu_inv(x), 1); };
  for (std::size_t n = 0; n < depth; ++n) {
    auto parts = decompose_complex(ar_triangle_ending_at(translate(ray[n]), seed).y, seed);
    if (n == 0) {
      if (parts.size() != 1 || parts[0].multiplicity != 1) throw Error(ErrorCode::NotOnRim, "complex is not on the rim");
      ray.push_back(parts[0].complex);
      continue;
    }
    PerfectComplex prev = translate(ray[n - 1]);
    std::vector<PerfectComplex> rest;
    bool removed = false;
    for (const auto& s : parts)
      for (std::size_t k = 0; k < s.multiplicity; ++k) {
        if (!removed && is_isomorphic(s.complex, prev, seed)) {
          removed = true;
          continue;
        }
        rest.push_back(s.complex);
      }
    if (!removed || rest.size() != 1) throw Error(ErrorCode::WalkDiverged, "mesh at distance " + std::to_string(n) + " is not of ZA_infinity shape");
    ray.push_back(rest[0]);
  }
  return ray;
}

bool HomologyDiagram::meshes_ok() const {
  return std::all_of(meshes.begin(), meshes.end(), [](const MeshCheck& m) { return m.flagged || m.exact; });
}

namespace {

std::optional<int> projective_degree(const PerfectComplex& c) {
  if (c.terms().size() == 1 && c.terms().begin()->second.size() == 1) return c.lo();
  return std::nullopt;
}

ModuleRep entry(const PerfectComplex& cn, int j) { return homology(nu_power(cn, j), j); }

}  // namespace

HomologyDiagram homology_diagram(const PerfectComplex& c, std::size_t depth, std::size_t window, std::uint64_t seed) {
  if (!is_on_rim(c, seed)) throw Error(ErrorCode::NotOnRim, "complex is not on the rim");
  HomologyDiagram d;
  d.depth = depth;
  if (window == 0) window = 2 * depth + 1;
  d.jlo = -static_cast<int>(window / 2);
  d.jhi = d.jlo + static_cast<int>(window) - 1;
  d.ray = rim_ray(c, depth, seed);
  d.projective_degree = projective_degree(d.ray[0]);
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<ModuleRep> row;
    for (int j = d.jlo; j <= d.jhi; ++j) row.push_back(entry(d.ray[n], j));
    d.rows.push_back(std::move(row));
  }
  for (std::size_t n = 0; n < depth; ++n)
    for (int j = d.jlo + 1; j <= d.jhi; ++j) {
      MeshCheck mc;
      mc.n = static_cast<int>(n);
      mc.j = j;
      std::size_t up = n > 0 ? d.at(n - 1, j - 1).dim() : 0;
      mc.exact = d.at(n, j).dim() + d.at(n, j - 1).dim() == up + d.at(n + 1, j).dim();
      mc.flagged = d.projective_degree && n == 0 && (j == *d.projective_degree || j == *d.projective_degree + 1);
      d.meshes.push_back(mc);
    }
  if (!d.projective_degree) {
    d.wing_checked = true;
    const std::size_t k = c.algebra().rank();
    std::map<int, std::vector<std::size_t>> rim;
    for (int i = d.jlo - static_cast<int>(depth); i <= d.jhi; ++i) rim[i] = composition_factors(entry(d.ray[0], i));
    for (std::size_t n = 0; n <= depth; ++n)
      for (int j = d.jlo; j <= d.jhi; ++j) {
        std::vector<std::size_t> want(k, 0);
        for (int i = j - static_cast<int>(n); i <= j; ++i)
          for (std::size_t s = 0; s < k; ++s) want[s] += rim[i][s];
        if (composition_factors(d.at(n, j)) != want) d.wing_ok = false;
      }
  }
  return d;
}

ModuleRep stabilization_module(const PerfectComplex& c, std::uint64_t seed) {
  if (!is_on_rim(c, seed)) throw Error(ErrorCode::NotOnRim, "complex is not on the rim");
  PerfectComplex m = minimize(c);
  if (auto k = projective_degree(m)) {
    auto ray = rim_ray(m, 2, seed);
    return entry(ray[2], *k + 1);
  }
  int hi_h = m.lo() - 1;
  for (int n = m.lo(); n <= m.hi(); ++n)
    if (homology(m, n).dim() > 0) hi_h = n;
  std::size_t depth = length(m);
  auto ray = rim_ray(m, depth, seed);
  return entry(ray[depth], hi_h + 1);
}

bool is_rigid(const PerfectComplex& c, std::uint64_t seed) {
  if (!is_indecomposable(c, seed)) throw Error(ErrorCode::NotIndecomposable, "complex is decomposable");
  return hom_dim(c, shift(c, 1)) == 0;
}

}  // namespace artri
