#include "artri/module.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "artri/linalg.hpp"

namespace artri {

namespace {

Mat cols_of(const std::vector<std::vector<Scalar>>& v, std::size_t n, const Fp& f) {
  Mat m(n, v.size(), f);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = v[j][i];
  return m;
}

std::vector<Scalar> flat(const Mat& m) { return m.data(); }

Mat unflat(std::span<const Scalar> v, std::size_t rows, std::size_t cols, const Fp& f) {
  Mat m(rows, cols, f);
  for (std::size_t i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = v[i];
  return m;
}

}  // namespace

ModuleRep::ModuleRep(AlgebraPtr alg, std::size_t dim, std::vector<Mat> action)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != alg_->dim())
    throw Error(ErrorCode::InvalidModule, "expected " + std::to_string(alg_->dim()) + " action matrices, got " +
                                              std::to_string(action_.size()));
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_)
      throw Error(ErrorCode::InvalidModule, "action matrix is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
    require_same_field(a.field(), alg_->field());
  }
}

ModuleRep ModuleRep::zero(AlgebraPtr alg) {
  std::size_t n = alg->dim();
  const Fp& f = alg->field();
  return ModuleRep(std::move(alg), 0, std::vector<Mat>(n, Mat(0, 0, f)));
}

Mat ModuleRep::act(const Elem& a) const {
  Mat m(dim_, dim_, field());
  for (std::size_t b = 0; b < a.size(); ++b)
    if (a[b]) m = m + action_[b].scaled(a[b]);
  return m;
}

void ModuleRep::validate() const {
  const Algebra& A = *alg_;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Mat lhs = action_[i] * action_[j];
      Mat rhs = act(A.left(i).col_vec(j));
      if (!(lhs == rhs))
        throw Error(ErrorCode::InvalidModule,
                    "action of basis pair (" + std::to_string(i) + "," + std::to_string(j) + ") breaks the table");
    }
  if (!(act(A.one()) == Mat::identity(dim_, field())))
    throw Error(ErrorCode::InvalidModule, "unit does not act as the identity");
}

std::vector<Scalar> Subquotient::coords(std::span<const Scalar> v) const {
  Coordinates c(hstack(w_basis, lift).transpose());
  auto x = c.of(v);
  if (!x) throw Error(ErrorCode::DimensionMismatch, "vector outside the subquotient's ambient submodule");
  return std::vector<Scalar>(x->begin() + static_cast<std::ptrdiff_t>(w_basis.cols()), x->end());
}

Subquotient subquotient(const ModuleRep& m, const Mat& u, const Mat& w) {
  const Fp& f = m.field();
  Subquotient sq;
  sq.u_basis = u;
  sq.w_basis = w;
  Coordinates c(m.dim(), f);
  for (std::size_t j = 0; j < w.cols(); ++j)
    if (c.push(w.col_vec(j))) throw Error(ErrorCode::DimensionMismatch, "subquotient: dependent generators of W");
  std::vector<std::vector<Scalar>> lift;
  for (std::size_t j = 0; j < u.cols(); ++j) {
    auto v = u.col_vec(j);
    if (!c.push(v)) lift.push_back(v);
  }
  const std::size_t k = lift.size(), wd = w.cols();
  sq.lift = cols_of(lift, m.dim(), f);
  std::vector<Mat> act(m.alg()->dim(), Mat(k, k, f));
  for (std::size_t b = 0; b < act.size(); ++b)
    for (std::size_t j = 0; j < k; ++j) {
      auto img = m.action(b).apply(lift[j]);
      auto x = c.of(img);
      if (!x) throw Error(ErrorCode::InvalidModule, "subquotient: U is not a submodule");
      for (std::size_t i = 0; i < k; ++i) act[b](i, j) = (*x)[wd + i];
    }
  // W must be a submodule as well
  for (std::size_t b = 0; b < act.size(); ++b)
    for (std::size_t j = 0; j < wd; ++j) {
      auto x = c.of(m.action(b).apply(w.col_vec(j)));
      for (std::size_t i = 0; i < k; ++i)
        if ((*x)[wd + i]) throw Error(ErrorCode::InvalidModule, "subquotient: W is not a submodule");
    }
  sq.module = ModuleRep(m.alg(), k, std::move(act));
  return sq;
}

ModuleRep submodule(const ModuleRep& m, const Mat& u) {
  return subquotient(m, u, Mat(m.dim(), 0, m.field())).module;
}

ModuleRep quotient(const ModuleRep& m, const Mat& w) {
  return subquotient(m, Mat::identity(m.dim(), m.field()), w).module;
}

Mat submodule_closure(const ModuleRep& m, const Mat& gens) {
  const Fp& f = m.field();
  RowSpace rs(m.dim(), f);
  std::vector<std::vector<Scalar>> basis, queue;
  for (std::size_t j = 0; j < gens.cols(); ++j) queue.push_back(gens.col_vec(j));
  const auto& g = m.alg()->generators();
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    if (!rs.add(v)) continue;
    basis.push_back(v);
    for (auto b : g) queue.push_back(m.action(b).apply(v));
  }
  return cols_of(basis, m.dim(), f);
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  require_same_algebra(*a.alg(), *b.alg());
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a.alg()->dim(); ++i) act.push_back(direct_sum(a.action(i), b.action(i)));
  return ModuleRep(a.alg(), a.dim() + b.dim(), std::move(act));
}

ModuleRep regular_module(AlgebraPtr alg) {
  std::vector<Mat> act;
  for (std::size_t b = 0; b < alg->dim(); ++b) act.push_back(alg->left(b));
  std::size_t n = alg->dim();
  return ModuleRep(std::move(alg), n, std::move(act));
}

ModuleRep projective_module(AlgebraPtr alg, std::size_t i) {
  const Algebra& A = *alg;
  if (i >= A.rank()) throw Error(ErrorCode::DimensionMismatch, "no simple with index " + std::to_string(i));
  const Mat& pb = A.projective_basis(i);
  Coordinates c(pb);
  std::vector<Mat> act;
  for (std::size_t b = 0; b < A.dim(); ++b) {
    Mat m(pb.rows(), pb.rows(), A.field());
    for (std::size_t j = 0; j < pb.rows(); ++j) {
      auto x = c.of(A.left(b).apply(pb.row_span(j)));
      for (std::size_t r = 0; r < pb.rows(); ++r) m(r, j) = (*x)[r];
    }
    act.push_back(std::move(m));
  }
  return ModuleRep(alg, pb.rows(), std::move(act));
}

ModuleRep projective_sum(AlgebraPtr alg, const std::vector<std::size_t>& types) {
  ModuleRep m = ModuleRep::zero(alg);
  for (auto t : types) m = direct_sum(m, projective_module(alg, t));
  return m;
}

ModuleRep simple_module(AlgebraPtr alg, std::size_t i) {
  const Algebra& A = *alg;
  std::vector<Mat> act;
  Elem e = A.idempotent(i);
  for (std::size_t b = 0; b < A.dim(); ++b) {
    Mat m(1, 1, A.field());
    m(0, 0) = e[b];
    act.push_back(m);
  }
  return ModuleRep(alg, 1, std::move(act));
}

std::vector<Scalar> proj_coords(const Algebra& alg, const std::vector<std::size_t>& types, const std::vector<Elem>& x) {
  std::vector<Scalar> out;
  for (std::size_t a = 0; a < types.size(); ++a) {
    auto c = alg.projective_coords(types[a], x[a]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Elem> proj_elems(const Algebra& alg, const std::vector<std::size_t>& types, std::span<const Scalar> c) {
  std::vector<Elem> out;
  std::size_t off = 0;
  for (auto t : types) {
    const Mat& pb = alg.projective_basis(t);
    Elem e = alg.zero();
    for (std::size_t r = 0; r < pb.rows(); ++r)
      if (c[off + r])
        for (std::size_t k = 0; k < alg.dim(); ++k) e[k] = alg.field().add(e[k], alg.field().mul(c[off + r], pb(r, k)));
    out.push_back(std::move(e));
    off += pb.rows();
  }
  return out;
}

Mat radical_of(const ModuleRep& m) {
  Mat all(m.dim(), 0, m.field());
  for (auto r : m.alg()->spec().radical) all = hstack(all, m.action(r));
  return column_space_basis(all);
}

Mat socle_of(const ModuleRep& m) {
  Mat eqs(0, m.dim(), m.field());
  for (auto r : m.alg()->spec().radical) eqs = vstack(eqs, m.action(r));
  return kernel_basis(eqs).transpose();
}

std::vector<std::size_t> composition_factors(const ModuleRep& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.alg()->rank(); ++i) out.push_back(rank(m.action(m.alg()->spec().idempotents[i])));
  return out;
}

bool is_hom(const ModuleRep& m, const ModuleRep& n, const Mat& t) {
  if (t.rows() != n.dim() || t.cols() != m.dim()) return false;
  for (auto g : m.alg()->generators())
    if (!(t * m.action(g) == n.action(g) * t)) return false;
  return true;
}

std::vector<ModHom> hom_basis(const ModuleRep& m, const ModuleRep& n) {
  require_same_algebra(*m.alg(), *n.alg());
  const Fp& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<ModHom> out;
  if (dm == 0 || dn == 0) return out;
  const auto& gens = m.alg()->generators();
  // unknown T(r, c) at index r * dm + c; equation T A_M(g) - A_N(g) T = 0
  Mat eqs(gens.size() * dn * dm, dn * dm, f);
  std::size_t row = 0;
  for (auto g : gens) {
    const Mat& am = m.action(g);
    const Mat& an = n.action(g);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c, ++row) {
        for (std::size_t k = 0; k < dm; ++k)
          if (am(k, c)) eqs(row, r * dm + k) = f.add(eqs(row, r * dm + k), am(k, c));
        for (std::size_t k = 0; k < dn; ++k)
          if (an(r, k)) eqs(row, k * dm + c) = f.sub(eqs(row, k * dm + c), an(r, k));
      }
  }
  Mat ker = kernel_basis(eqs);
  for (std::size_t i = 0; i < ker.rows(); ++i) out.push_back({m, n, unflat(ker.row_span(i), dn, dm, f)});
  return out;
}

std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n) { return hom_basis(m, n).size(); }

std::size_t stable_hom_dim(const ModuleRep& m, const ModuleRep& n) {
  auto hs = hom_basis(m, n);
  if (hs.empty()) return 0;
  ProjectiveCover pc = projective_cover(n);
  RowSpace through(m.dim() * n.dim(), m.field());
  for (const auto& g : hom_basis(m, pc.p)) through.add(flat(pc.surj.matrix * g.matrix));
  return hs.size() - through.dim();
}

ProjectiveCover projective_cover(const ModuleRep& m) {
  if (m.dim() == 0) throw Error(ErrorCode::ZeroModule, "projective cover of the zero module");
  const Algebra& A = *m.alg();
  const Fp& f = m.field();
  Mat rad = radical_of(m);
  RowSpace modrad(m.dim(), f);
  for (std::size_t j = 0; j < rad.cols(); ++j) modrad.add(rad.col_vec(j));
  ProjectiveCover pc;
  std::vector<std::vector<Scalar>> gens;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    Mat ei = column_space_basis(m.action(A.spec().idempotents[i]));
    for (std::size_t j = 0; j < ei.cols(); ++j) {
      auto v = ei.col_vec(j);
      if (modrad.add(v)) {
        gens.push_back(v);
        pc.types.push_back(i);
      }
    }
  }
  pc.gens = cols_of(gens, m.dim(), f);
  pc.p = projective_sum(m.alg(), pc.types);
  Mat s(m.dim(), pc.p.dim(), f);
  std::size_t col = 0;
  for (std::size_t a = 0; a < pc.types.size(); ++a) {
    const Mat& pb = A.projective_basis(pc.types[a]);
    for (std::size_t r = 0; r < pb.rows(); ++r, ++col) {
      Elem y(pb.row_span(r).begin(), pb.row_span(r).end());
      auto img = m.act(y).apply(gens[a]);
      for (std::size_t i = 0; i < m.dim(); ++i) s(i, col) = img[i];
    }
  }
  pc.surj = {pc.p, m, s};
  return pc;
}

ModuleRep syzygy(const ModuleRep& m, Mat* incl) {
  ProjectiveCover pc = projective_cover(m);
  Mat k = kernel_basis(pc.surj.matrix).transpose();
  Subquotient sq = subquotient(pc.p, k, Mat(pc.p.dim(), 0, m.field()));
  if (incl) *incl = sq.lift;
  return sq.module;
}

bool is_projective(const ModuleRep& m) {
  if (m.dim() == 0) return true;
  return projective_cover(m).p.dim() == m.dim();
}

ModuleRep cosyzygy(const ModuleRep& m, std::uint64_t seed) {
  const Algebra& A = *m.alg();
  const auto& pi = A.nakayama_permutation();
  if (m.dim() == 0) return m;
  // injective hull: the injective envelope of S_j is A e_{pi(j)}
  Mat soc = socle_of(m);
  std::vector<std::size_t> types;
  for (std::size_t j = 0; j < A.rank(); ++j) {
    std::size_t mult = rank(m.action(A.spec().idempotents[j]) * soc);
    for (std::size_t c = 0; c < mult; ++c) types.push_back(pi[j]);
  }
  ModuleRep inj = projective_sum(m.alg(), types);
  auto hs = hom_basis(m, inj);
  const Fp& f = m.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  for (int trial = 0; trial < 256; ++trial) {
    Mat t(inj.dim(), m.dim(), f);
    for (std::size_t k = 0; k < hs.size(); ++k) {
      Scalar c = trial < static_cast<int>(hs.size()) ? (static_cast<int>(k) == trial) : static_cast<Scalar>(dist(rng));
      if (c) t = t + hs[k].matrix.scaled(c);
    }
    if (rank(t) == m.dim()) return quotient(inj, column_space_basis(t));
  }
  throw Error(ErrorCode::Inconclusive, "no injective hull embedding found");
}

ModuleRep nakayama_module(const ModuleRep& m) {
  const Algebra& A = *m.alg();
  const Fp& f = m.field();
  ModuleRep reg = regular_module(m.alg());
  auto hs = hom_basis(m, reg);
  const std::size_t h = hs.size();
  Mat fam(h, A.dim() * m.dim(), f);
  for (std::size_t k = 0; k < h; ++k) {
    auto v = flat(hs[k].matrix);
    std::copy(v.begin(), v.end(), fam.row_span(k).begin());
  }
  Coordinates c(fam);
  std::vector<Mat> act;
  for (std::size_t b = 0; b < A.dim(); ++b) {
    // rho(b): phi -> R_b phi, as a matrix on the hom basis; the dual action is its transpose
    Mat rho(h, h, f);
    for (std::size_t k = 0; k < h; ++k) {
      auto x = c.of(flat(A.right(b) * hs[k].matrix));
      for (std::size_t r = 0; r < h; ++r) rho(r, k) = (*x)[r];
    }
    act.push_back(rho.transpose());
  }
  return ModuleRep(m.alg(), h, std::move(act));
}

Mat nakayama_map(const ModuleRep& source, const ModuleRep& target, const Mat& fm) {
  const Fp& f = source.field();
  ModuleRep reg = regular_module(source.alg());
  auto hm = hom_basis(source, reg);
  auto hn = hom_basis(target, reg);
  Mat fam(hm.size(), reg.dim() * source.dim(), f);
  for (std::size_t k = 0; k < hm.size(); ++k) {
    auto v = flat(hm[k].matrix);
    std::copy(v.begin(), v.end(), fam.row_span(k).begin());
  }
  // F*: psi -> psi f, from Hom(N, A) to Hom(M, A); nu f is its transpose
  Mat fstar(hm.size(), hn.size(), f);
  if (!hm.empty()) {
    Coordinates c(fam);
    for (std::size_t k = 0; k < hn.size(); ++k) {
      auto x = c.of(flat(hn[k].matrix * fm));
      for (std::size_t r = 0; r < hm.size(); ++r) fstar(r, k) = (*x)[r];
    }
  }
  return fstar.transpose();
}

ModuleRep heart(AlgebraPtr alg, std::size_t s) {
  ModuleRep p = projective_module(alg, s);
  if (p.dim() == 1) throw Error(ErrorCode::SimpleProjective, "P_" + std::to_string(s) + " is simple");
  return subquotient(p, radical_of(p), socle_of(p)).module;
}

std::size_t DecompositionCert::total_count() const {
  std::size_t n = 0;
  for (const auto& s : summands) n += s.multiplicity;
  return n;
}

EndoAlgebra module_endomorphisms(const ModuleRep& m) {
  EndoAlgebra e;
  Subquotient top = subquotient(m, Mat::identity(m.dim(), m.field()), radical_of(m));
  Coordinates c(hstack(top.w_basis, top.lift).transpose());
  const std::size_t wd = top.w_basis.cols(), k = top.lift.cols();
  for (const auto& h : hom_basis(m, m)) {
    Mat t(k, k, m.field());
    for (std::size_t j = 0; j < k; ++j) {
      auto x = c.of(h.matrix.apply(top.lift.col_vec(j)));
      for (std::size_t i = 0; i < k; ++i) t(i, j) = (*x)[wd + i];
    }
    e.basis.push_back(h.matrix);
    e.tops.push_back(std::move(t));
  }
  return e;
}

namespace {

struct Leaf {
  Mat incl;  // columns in the ambient module
  ModuleRep module;
  LocalityCert cert;
};

void split_rec(const ModuleRep& ambient, const Mat& basis, std::mt19937_64& rng, std::vector<Leaf>& out) {
  ModuleRep sub = subquotient(ambient, basis, Mat(ambient.dim(), 0, ambient.field())).module;
  SplitResult r = analyze_endomorphisms(module_endomorphisms(sub), rng);
  if (r.local) {
    out.push_back({basis, sub, r.cert});
    return;
  }
  Mat k = kernel_basis(r.fitting).transpose();
  Mat im = column_space_basis(r.fitting);
  split_rec(ambient, basis * k, rng, out);
  split_rec(ambient, basis * im, rng, out);
}

}  // namespace

DecompositionCert decompose(const ModuleRep& m, std::uint64_t seed) {
  DecompositionCert cert;
  if (m.dim() == 0) return cert;
  std::mt19937_64 rng(seed);
  std::vector<Leaf> leaves;
  split_rec(m, Mat::identity(m.dim(), m.field()), rng, leaves);
  Mat all(m.dim(), 0, m.field());
  for (const auto& l : leaves) all = hstack(all, l.incl);
  Mat inv = *inverse(all);
  std::size_t off = 0;
  for (const auto& l : leaves) {
    Mat proj = inv.row_range(off, l.incl.cols());
    off += l.incl.cols();
    bool placed = false;
    for (auto& s : cert.summands) {
      if (s.module.dim() == l.module.dim() && is_isomorphic(s.module, l.module, seed)) {
        s.multiplicity += 1;
        s.inclusions.push_back(l.incl);
        s.projections.push_back(proj);
        placed = true;
        break;
      }
    }
    if (!placed) cert.summands.push_back({l.module, 1, {l.incl}, {proj}, l.cert});
  }
  return cert;
}

bool is_indecomposable(const ModuleRep& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  std::mt19937_64 rng(seed);
  return analyze_endomorphisms(module_endomorphisms(m), rng).local;
}

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed) {
  require_same_algebra(*m.alg(), *n.alg());
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  if (composition_factors(m) != composition_factors(n)) return false;
  auto hmn = hom_basis(m, n);
  const std::size_t h = hmn.size();
  if (h == 0) return false;
  if (hom_dim(n, m) != h || hom_dim(m, m) != h || hom_dim(n, n) != h) return false;
  const Fp& f = m.field();
  const std::size_t d = m.dim();
  auto combo = [&](const std::vector<Scalar>& c) {
    Mat t(d, d, f);
    for (std::size_t k = 0; k < h; ++k)
      if (c[k]) t = t + hmn[k].matrix.scaled(c[k]);
    return t;
  };
  for (const auto& b : hmn)
    if (rank(b.matrix) == d) return true;
  double space = std::pow(static_cast<double>(f.p()), static_cast<double>(h));
  if (space <= 4096.0) {
    std::vector<Scalar> c(h, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < h && ++c[i] == f.p()) c[i++] = 0;
      if (i == h) return false;
      if (rank(combo(c)) == d) return true;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  for (int t = 0; t < 64; ++t) {
    std::vector<Scalar> c(h);
    for (auto& x : c) x = static_cast<Scalar>(dist(rng));
    if (rank(combo(c)) == d) return true;
  }
  throw Error(ErrorCode::Inconclusive, "no invertible intertwiner found in 64 trials");
}

}  // namespace artri
