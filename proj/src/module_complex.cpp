#include "artri/module_complex.hpp"

#include <algorithm>

namespace artri {

namespace {

std::vector<Scalar> flat(const Mat& m) { return m.data(); }

}  // namespace

ModuleComplex::ModuleComplex(AlgebraPtr alg, std::map<int, ModuleRep> terms, std::map<int, Mat> diffs)
    : alg_(std::move(alg)) {
  for (auto& [n, m] : terms)
    if (m.dim() > 0) terms_.emplace(n, m);
  for (auto& [n, d] : diffs)
    if (terms_.count(n) && terms_.count(n - 1)) diffs_[n] = d;
}

ModuleRep ModuleComplex::term(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? ModuleRep::zero(alg_) : it->second;
}

Mat ModuleComplex::diff(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return Mat(term(n - 1).dim(), term(n).dim(), alg_->field());
}

void ModuleComplex::validate() const {
  for (const auto& [n, d] : diffs_) {
    if (!is_hom(term(n), term(n - 1), d)) throw Error(ErrorCode::InvalidComplex, "d_" + std::to_string(n) + " is not a module map");
    if (!(diff(n - 1) * d).is_zero()) throw Error(ErrorCode::InvalidComplex, "d^2 != 0 at degree " + std::to_string(n));
  }
}

Mat ModChainMap::at(int n) const {
  auto it = maps.find(n);
  if (it != maps.end()) return it->second;
  return Mat(target.term(n).dim(), source.term(n).dim(), source.alg()->field());
}

void ModChainMap::validate() const {
  int lo = std::min(source.lo(), target.lo()), hi = std::max(source.hi(), target.hi()) + 1;
  for (int n = lo; n <= hi; ++n)
    if (!(target.diff(n) * at(n) == at(n - 1) * source.diff(n)))
      throw Error(ErrorCode::InvalidChainMap, "square at degree " + std::to_string(n) + " does not commute");
}

ModuleComplex to_module_complex(const PerfectComplex& c) {
  std::map<int, ModuleRep> terms;
  std::map<int, Mat> diffs;
  for (const auto& [n, t] : c.terms()) terms.emplace(n, term_module(c, n));
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs[n] = flat_diff(c, n);
  return ModuleComplex(c.alg(), terms, diffs);
}

ModChainMap to_module_map(const ChainMap& f) {
  ModChainMap g{to_module_complex(f.source), to_module_complex(f.target), {}};
  for (const auto& [n, m] : f.maps) g.maps[n] = flatten(f.source.algebra(), m);
  return g;
}

ModuleComplex shift(const ModuleComplex& c, int j) {
  std::map<int, ModuleRep> terms;
  std::map<int, Mat> diffs;
  for (const auto& [n, m] : c.terms()) terms.emplace(n + j, m);
  Scalar sign = (j % 2 == 0) ? 1 : c.alg()->field().neg(1);
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs[n + j] = c.diff(n).scaled(sign);
  return ModuleComplex(c.alg(), terms, diffs);
}

ModuleComplex nakayama(const ModuleComplex& c) {
  std::map<int, ModuleRep> terms;
  std::map<int, Mat> diffs;
  for (const auto& [n, m] : c.terms()) terms.emplace(n, nakayama_module(m));
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs[n] = nakayama_map(c.term(n), c.term(n - 1), c.diff(n));
  return ModuleComplex(c.alg(), terms, diffs);
}

ModChainMap compose(const ModChainMap& f, const ModChainMap& g) {
  ModChainMap h{f.source, g.target, {}};
  for (const auto& [n, m] : f.source.terms()) h.maps[n] = g.at(n) * f.at(n);
  return h;
}

ConeTriangle cocone(const ModChainMap& w) {
  const ModuleComplex& a = w.source;
  const ModuleComplex& b = w.target;
  const Fp& f = a.alg()->field();
  std::map<int, ModuleRep> terms;
  std::map<int, Mat> diffs;
  int lo = std::min(a.lo(), b.lo() - 1), hi = std::max(a.hi(), b.hi() - 1);
  for (int n = lo; n <= hi; ++n) terms.emplace(n, direct_sum(a.term(n), b.term(n + 1)));
  Scalar m1 = f.neg(1);
  for (int n = lo + 1; n <= hi; ++n) {
    // [[d^A_n, 0], [-w_n, -d^B_{n+1}]]
    std::size_t an = a.term(n).dim(), am = a.term(n - 1).dim();
    std::size_t bn = b.term(n + 1).dim(), bm = b.term(n).dim();
    Mat d(am + bm, an + bn, f);
    d.set_block(0, 0, a.diff(n));
    d.set_block(am, 0, w.at(n).scaled(m1));
    d.set_block(am, an, b.diff(n + 1).scaled(m1));
    diffs[n] = d;
  }
  ConeTriangle t;
  t.y = ModuleComplex(a.alg(), terms, diffs);
  ModuleComplex x = shift(b, -1);
  t.from_x = {x, t.y, {}};
  t.to_z = {t.y, a, {}};
  for (int n = lo; n <= hi; ++n) {
    std::size_t an = a.term(n).dim(), bn = b.term(n + 1).dim();
    Mat i(an + bn, bn, f), p(an, an + bn, f);
    i.set_block(an, 0, Mat::identity(bn, f));
    p.set_block(0, 0, Mat::identity(an, f));
    t.from_x.maps[n] = i;
    t.to_z.maps[n] = p;
  }
  return t;
}

HomologyData homology_data(const ModuleComplex& c, int n) {
  ModuleRep m = c.term(n);
  Mat k = kernel_basis(c.diff(n)).transpose();
  Mat im = column_space_basis(c.diff(n + 1));
  return {subquotient(m, k, im)};
}

Mat homology_map(const ModChainMap& f, int n, const HomologyData& hs, const HomologyData& ht) {
  const Fp& fld = f.source.alg()->field();
  Mat out(ht.sq.module.dim(), hs.sq.module.dim(), fld);
  Mat fn = f.at(n);
  for (std::size_t j = 0; j < hs.sq.lift.cols(); ++j) {
    auto v = fn.apply(hs.sq.lift.col_vec(j));
    auto c = ht.sq.coords(v);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

ModuleHomK::ModuleHomK(const ModuleComplex& c, const ModuleComplex& d) : c_(c), d_(d) {
  const Fp& f = c.alg()->field();
  lo_ = std::max(c.lo(), d.lo());
  hi_ = std::min(c.hi(), d.hi());
  if (c.terms().empty() || d.terms().empty() || lo_ > hi_) return;
  std::map<int, std::size_t> off;
  for (int k = lo_; k <= hi_; ++k) {
    off[k] = ambient_;
    ambient_ += c.term(k).dim() * d.term(k).dim();
  }
  auto place = [&](std::vector<Scalar>& v, int k, const Mat& m) {
    if (k < lo_ || k > hi_) return;
    auto fm = flat(m);
    for (std::size_t i = 0; i < fm.size(); ++i) v[off[k] + i] = f.add(v[off[k] + i], fm[i]);
  };

  // unknowns: hom bases per degree; equations d^D_k f_k - f_{k-1} d^C_k = 0
  struct U {
    int deg;
    Mat m;
  };
  std::vector<U> unknowns;
  for (int k = lo_; k <= hi_; ++k)
    for (auto& h : hom_basis(c.term(k), d.term(k))) unknowns.push_back({k, h.matrix});
  std::map<int, std::size_t> coff;
  std::size_t csize = 0;
  for (int k = lo_; k <= hi_ + 1; ++k) {
    coff[k] = csize;
    csize += c.term(k).dim() * d.term(k - 1).dim();
  }
  Mat eqs(csize, unknowns.size(), f);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    int k = unknowns[u].deg;
    auto a = flat(d.diff(k) * unknowns[u].m);
    for (std::size_t i = 0; i < a.size(); ++i) eqs(coff[k] + i, u) = f.add(eqs(coff[k] + i, u), a[i]);
    auto b = flat(unknowns[u].m * c.diff(k + 1));
    for (std::size_t i = 0; i < b.size(); ++i) eqs(coff[k + 1] + i, u) = f.sub(eqs(coff[k + 1] + i, u), b[i]);
  }
  Mat zk = kernel_basis(eqs);
  z_rows_ = Mat(zk.rows(), ambient_, f);
  for (std::size_t r = 0; r < zk.rows(); ++r) {
    std::vector<Scalar> v(ambient_, 0);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (zk(r, u)) place(v, unknowns[u].deg, unknowns[u].m.scaled(zk(r, u)));
    std::copy(v.begin(), v.end(), z_rows_.row_span(r).begin());
  }

  quot_.emplace(ambient_, f);
  for (int k = lo_ - 1; k <= hi_; ++k)
    for (auto& h : hom_basis(c.term(k), d.term(k + 1))) {
      std::vector<Scalar> v(ambient_, 0);
      place(v, k, d.diff(k + 1) * h.matrix);
      place(v, k + 1, h.matrix * c.diff(k + 1));
      if (!quot_->push(v)) ++b_dim_;
    }
  for (std::size_t r = 0; r < z_rows_.rows(); ++r)
    if (!quot_->push(z_rows_.row_span(r))) basis_.push_back(decode(z_rows_.row_span(r)));
}

std::vector<Scalar> ModuleHomK::encode(const ModChainMap& f) const {
  std::vector<Scalar> v;
  for (int k = lo_; k <= hi_; ++k) {
    auto m = flat(f.at(k));
    v.insert(v.end(), m.begin(), m.end());
  }
  return v;
}

ModChainMap ModuleHomK::decode(std::span<const Scalar> v) const {
  ModChainMap f{c_, d_, {}};
  std::size_t pos = 0;
  for (int k = lo_; k <= hi_; ++k) {
    std::size_t r = d_.term(k).dim(), cc = c_.term(k).dim();
    Mat m(r, cc, c_.alg()->field());
    for (std::size_t i = 0; i < r * cc; ++i) m(i / cc, i % cc) = v[pos++];
    f.maps[k] = m;
  }
  return f;
}

std::vector<ModChainMap> ModuleHomK::cycle_basis() const {
  std::vector<ModChainMap> out;
  for (std::size_t r = 0; r < z_rows_.rows(); ++r) out.push_back(decode(z_rows_.row_span(r)));
  return out;
}

std::vector<Scalar> ModuleHomK::coords(const ModChainMap& f) const {
  f.validate();
  if (!quot_) return {};
  auto x = quot_->of(encode(f));
  if (!x) throw Error(ErrorCode::InvalidChainMap, "map is not in the span of chain maps");
  return std::vector<Scalar>(x->begin() + static_cast<std::ptrdiff_t>(b_dim_), x->end());
}

bool ModuleHomK::is_null_homotopic(const ModChainMap& f) const {
  auto c = coords(f);
  return std::all_of(c.begin(), c.end(), [](Scalar s) { return s == 0; });
}

EndoAlgebra module_complex_endomorphisms(const ModuleComplex& c) {
  EndoAlgebra e;
  std::map<int, Subquotient> tops;
  for (const auto& [n, m] : c.terms()) tops.emplace(n, subquotient(m, Mat::identity(m.dim(), m.field()), radical_of(m)));
  for (const auto& f : ModuleHomK(c, c).cycle_basis()) {
    Mat total(0, 0, c.alg()->field()), top(0, 0, c.alg()->field());
    for (const auto& [n, m] : c.terms()) {
      Mat fn = f.at(n);
      total = direct_sum(total, fn);
      const Subquotient& sq = tops.at(n);
      Mat t(sq.lift.cols(), sq.lift.cols(), m.field());
      for (std::size_t j = 0; j < sq.lift.cols(); ++j) {
        auto x = sq.coords(fn.apply(sq.lift.col_vec(j)));
        for (std::size_t i = 0; i < x.size(); ++i) t(i, j) = x[i];
      }
      top = direct_sum(top, t);
    }
    e.basis.push_back(total);
    e.tops.push_back(top);
  }
  return e;
}

}  // namespace artri
