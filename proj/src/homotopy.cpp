#include "artri/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace artri {

// ---------------------------------------------------------------- ProjMat

ProjMat ProjMat::zero(const Algebra& alg, const Types& src, const Types& dst) {
  ProjMat m;
  m.src = src;
  m.dst = dst;
  m.entries.assign(src.size() * dst.size(), alg.zero());
  return m;
}

ProjMat ProjMat::identity(const Algebra& alg, const Types& t) {
  ProjMat m = zero(alg, t, t);
  for (std::size_t a = 0; a < t.size(); ++a) m.at(a, a) = alg.idempotent(t[a]);
  return m;
}

ProjMat pm_mul(const Algebra& alg, const ProjMat& a, const ProjMat& b) {
  if (a.dst != b.src) throw Error(ErrorCode::DimensionMismatch, "composing maps with incompatible projective terms");
  ProjMat r = ProjMat::zero(alg, a.src, b.dst);
  for (std::size_t i = 0; i < a.src.size(); ++i)
    for (std::size_t j = 0; j < a.dst.size(); ++j) {
      const Elem& x = a.at(i, j);
      if (alg.is_zero(x)) continue;
      for (std::size_t k = 0; k < b.dst.size(); ++k) {
        const Elem& y = b.at(j, k);
        if (alg.is_zero(y)) continue;
        r.at(i, k) = alg.add(r.at(i, k), alg.mul(x, y));
      }
    }
  return r;
}

ProjMat pm_add(const Algebra& alg, const ProjMat& a, const ProjMat& b) {
  if (a.src != b.src || a.dst != b.dst) throw Error(ErrorCode::DimensionMismatch, "adding maps between different terms");
  ProjMat r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = alg.add(a.entries[i], b.entries[i]);
  return r;
}

ProjMat pm_sub(const Algebra& alg, const ProjMat& a, const ProjMat& b) {
  return pm_add(alg, a, pm_scale(alg, b, alg.field().neg(1)));
}

ProjMat pm_scale(const Algebra& alg, const ProjMat& a, Scalar s) {
  ProjMat r = a;
  for (auto& e : r.entries) e = alg.scale(e, s);
  return r;
}

bool pm_is_zero(const Algebra& alg, const ProjMat& a) {
  return std::all_of(a.entries.begin(), a.entries.end(), [&](const Elem& e) { return alg.is_zero(e); });
}

bool pm_in_radical(const Algebra& alg, const ProjMat& a) {
  return std::all_of(a.entries.begin(), a.entries.end(), [&](const Elem& e) { return alg.in_radical(e); });
}

ProjMat pm_direct_sum(const Algebra& alg, const ProjMat& a, const ProjMat& b) {
  Types src = a.src, dst = a.dst;
  src.insert(src.end(), b.src.begin(), b.src.end());
  dst.insert(dst.end(), b.dst.begin(), b.dst.end());
  ProjMat r = ProjMat::zero(alg, src, dst);
  for (std::size_t i = 0; i < a.src.size(); ++i)
    for (std::size_t j = 0; j < a.dst.size(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.src.size(); ++i)
    for (std::size_t j = 0; j < b.dst.size(); ++j) r.at(a.src.size() + i, a.dst.size() + j) = b.at(i, j);
  return r;
}

namespace {

std::size_t types_dim(const Algebra& alg, const Types& t) {
  std::size_t n = 0;
  for (auto i : t) n += alg.projective_dim(i);
  return n;
}

// [[a, b], [c, d]] with row types (a.src, c.src) and column types (a.dst, b.dst)
ProjMat pm_block(const Algebra& alg, const ProjMat& a, const ProjMat& b, const ProjMat& c, const ProjMat& d) {
  Types src = a.src, dst = a.dst;
  src.insert(src.end(), c.src.begin(), c.src.end());
  dst.insert(dst.end(), b.dst.begin(), b.dst.end());
  ProjMat r = ProjMat::zero(alg, src, dst);
  const std::size_t ra = a.src.size(), ca = a.dst.size();
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < dst.size(); ++j) {
      const ProjMat& blk = i < ra ? (j < ca ? a : b) : (j < ca ? c : d);
      std::size_t ii = i < ra ? i : i - ra, jj = j < ca ? j : j - ca;
      if (!blk.empty()) r.at(i, j) = blk.at(ii, jj);
    }
  return r;
}

}  // namespace

Mat flatten(const Algebra& alg, const ProjMat& m) {
  const Fp& f = alg.field();
  Mat out(types_dim(alg, m.dst), types_dim(alg, m.src), f);
  std::size_t col = 0;
  for (std::size_t a = 0; a < m.src.size(); ++a) {
    const Mat& pb = alg.projective_basis(m.src[a]);
    for (std::size_t r = 0; r < pb.rows(); ++r, ++col) {
      Elem y(pb.row_span(r).begin(), pb.row_span(r).end());
      std::size_t row = 0;
      for (std::size_t b = 0; b < m.dst.size(); ++b) {
        auto c = alg.projective_coords(m.dst[b], alg.mul(y, m.at(a, b)));
        for (auto x : c) out(row++, col) = x;
      }
    }
  }
  return out;
}

Mat top_matrix(const Algebra& alg, const ProjMat& m) {
  Mat t(m.dst.size(), m.src.size(), alg.field());
  for (std::size_t a = 0; a < m.src.size(); ++a)
    for (std::size_t b = 0; b < m.dst.size(); ++b)
      if (m.src[a] == m.dst[b]) t(b, a) = alg.idempotent_coeff(m.src[a], m.at(a, b));
  return t;
}

// ---------------------------------------------------------------- complexes

namespace {
const Types kNoTypes;
}

PerfectComplex::PerfectComplex(AlgebraPtr alg, std::map<int, Types> terms, std::map<int, ProjMat> diffs)
    : alg_(std::move(alg)) {
  for (auto& [n, t] : terms)
    if (!t.empty()) terms_[n] = t;
  for (auto& [n, d] : diffs) {
    if (!terms_.count(n) || !terms_.count(n - 1)) {
      if (!pm_is_zero(*alg_, d)) throw Error(ErrorCode::InvalidComplex, "differential out of the term range at degree " + std::to_string(n));
      continue;
    }
    if (d.src != terms_[n] || d.dst != terms_[n - 1])
      throw Error(ErrorCode::InvalidComplex, "differential at degree " + std::to_string(n) + " has the wrong shape");
    diffs_[n] = d;
  }
}

PerfectComplex PerfectComplex::stalk(AlgebraPtr alg, const Types& t, int n) {
  return PerfectComplex(std::move(alg), {{n, t}}, {});
}

const Types& PerfectComplex::term(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? kNoTypes : it->second;
}

ProjMat PerfectComplex::diff(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return ProjMat::zero(*alg_, term(n), term(n - 1));
}

std::size_t PerfectComplex::term_dim(int n) const { return types_dim(*alg_, term(n)); }

std::size_t PerfectComplex::rank() const {
  std::size_t r = 0;
  for (const auto& [n, t] : terms_) r += t.size();
  return r;
}

void PerfectComplex::validate() const {
  const Algebra& A = *alg_;
  for (const auto& [n, d] : diffs_)
    for (std::size_t a = 0; a < d.src.size(); ++a)
      for (std::size_t b = 0; b < d.dst.size(); ++b) {
        const Elem& x = d.at(a, b);
        if (A.mul(A.mul(A.idempotent(d.src[a]), x), A.idempotent(d.dst[b])) != x)
          throw Error(ErrorCode::InvalidComplex, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                                     ") of d_" + std::to_string(n) + " is outside its corner");
      }
  for (int n = lo() + 1; n <= hi(); ++n)
    if (!pm_is_zero(A, pm_mul(A, diff(n + 1), diff(n))))
      throw Error(ErrorCode::InvalidComplex, "d_" + std::to_string(n + 1) + " d_" + std::to_string(n) + " != 0");
}

bool operator==(const PerfectComplex& a, const PerfectComplex& b) {
  if (a.terms() != b.terms()) return false;
  if (a.is_zero()) return true;
  if (!same_algebra(a.algebra(), b.algebra())) return false;
  for (int n = a.lo(); n <= a.hi(); ++n)
    if (a.diff(n).entries != b.diff(n).entries) return false;
  return true;
}

ProjMat ChainMap::at(int n) const {
  auto it = maps.find(n);
  if (it != maps.end()) return it->second;
  return ProjMat::zero(source.algebra(), source.term(n), target.term(n));
}

void ChainMap::validate() const {
  const Algebra& A = source.algebra();
  require_same_algebra(A, target.algebra());
  int lo = std::min(source.lo(), target.lo()), hi = std::max(source.hi(), target.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    ProjMat l = pm_mul(A, source.diff(n), at(n - 1));
    ProjMat r = pm_mul(A, at(n), target.diff(n));
    if (!pm_is_zero(A, pm_sub(A, l, r)))
      throw Error(ErrorCode::InvalidChainMap, "square at degree " + std::to_string(n) + " does not commute");
  }
}

ChainMap identity_map(const PerfectComplex& c) {
  ChainMap f{c, c, {}};
  for (const auto& [n, t] : c.terms()) f.maps[n] = ProjMat::identity(c.algebra(), t);
  return f;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  ChainMap h{f.source, g.target, {}};
  const Algebra& A = f.source.algebra();
  for (const auto& [n, t] : f.source.terms())
    if (!g.target.term(n).empty()) h.maps[n] = pm_mul(A, f.at(n), g.at(n));
  return h;
}

ChainMap cm_add(const ChainMap& f, const ChainMap& g) {
  ChainMap h{f.source, f.target, {}};
  for (const auto& [n, t] : f.source.terms())
    if (!f.target.term(n).empty()) h.maps[n] = pm_add(f.source.algebra(), f.at(n), g.at(n));
  return h;
}

ChainMap cm_scale(const ChainMap& f, Scalar s) {
  ChainMap h = f;
  for (auto& [n, m] : h.maps) m = pm_scale(f.source.algebra(), m, s);
  return h;
}

PerfectComplex shift(const PerfectComplex& c, int j) {
  if (c.is_zero()) return c;
  const Algebra& A = c.algebra();
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  for (const auto& [n, t] : c.terms()) terms[n + j] = t;
  Scalar sign = (j % 2 == 0) ? 1 : A.field().neg(1);
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs[n + j] = pm_scale(A, c.diff(n), sign);
  return PerfectComplex(c.alg(), terms, diffs);
}

ChainMap shift(const ChainMap& f, int j) {
  ChainMap g{shift(f.source, j), shift(f.target, j), {}};
  for (const auto& [n, m] : f.maps) g.maps[n + j] = m;
  return g;
}

PerfectComplex direct_sum(const PerfectComplex& a, const PerfectComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  require_same_algebra(a.algebra(), b.algebra());
  const Algebra& A = a.algebra();
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n) {
    Types t = a.term(n);
    t.insert(t.end(), b.term(n).begin(), b.term(n).end());
    terms[n] = t;
    if (n > lo) diffs[n] = pm_direct_sum(A, a.diff(n), b.diff(n));
  }
  return PerfectComplex(a.alg(), terms, diffs);
}

namespace {

PerfectComplex twist(const PerfectComplex& c, bool inverse) {
  if (c.is_zero()) return c;
  const Algebra& A = c.algebra();
  std::vector<std::size_t> pi = inverse ? A.nakayama_inverse() : A.nakayama_permutation();
  auto tw = [&](const Types& t) {
    Types r;
    for (auto i : t) r.push_back(pi[i]);
    return r;
  };
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  for (const auto& [n, t] : c.terms()) terms[n] = tw(t);
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    ProjMat d = c.diff(n);
    ProjMat e = ProjMat::zero(A, tw(d.src), tw(d.dst));
    for (std::size_t i = 0; i < d.entries.size(); ++i)
      e.entries[i] = inverse ? A.sigma_inv(d.entries[i]) : A.sigma(d.entries[i]);
    diffs[n] = e;
  }
  return PerfectComplex(c.alg(), terms, diffs);
}

}  // namespace

PerfectComplex nu(const PerfectComplex& c) { return twist(c, false); }
PerfectComplex nu_inv(const PerfectComplex& c) { return twist(c, true); }

PerfectComplex nu_power(const PerfectComplex& c, int j) {
  PerfectComplex r = c;
  for (int k = 0; k < j; ++k) r = nu(r);
  for (int k = 0; k > j; --k) r = nu_inv(r);
  return r;
}

ChainMap nu(const ChainMap& f) {
  const Algebra& A = f.source.algebra();
  ChainMap g{nu(f.source), nu(f.target), {}};
  for (const auto& [n, m] : f.maps) {
    ProjMat e = ProjMat::zero(A, g.source.term(n), g.target.term(n));
    for (std::size_t i = 0; i < m.entries.size(); ++i) e.entries[i] = A.sigma(m.entries[i]);
    g.maps[n] = e;
  }
  return g;
}

PerfectComplex cone(const ChainMap& f) {
  const PerfectComplex& a = f.source;
  const PerfectComplex& b = f.target;
  const Algebra& A = a.algebra();
  if (a.is_zero()) return b;
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  int lo = std::min(a.lo() + 1, b.is_zero() ? a.lo() + 1 : b.lo());
  int hi = std::max(a.hi() + 1, b.is_zero() ? a.hi() + 1 : b.hi());
  Scalar m1 = A.field().neg(1);
  for (int n = lo; n <= hi; ++n) {
    Types t = a.term(n - 1);
    t.insert(t.end(), b.term(n).begin(), b.term(n).end());
    terms[n] = t;
    if (n > lo)
      diffs[n] = pm_block(A, pm_scale(A, a.diff(n - 1), m1), f.at(n - 1),
                          ProjMat::zero(A, b.term(n), a.term(n - 2)), b.diff(n));
  }
  return PerfectComplex(a.alg(), terms, diffs);
}

// ---------------------------------------------------------------- minimization

Minimized minimize_with_maps(const PerfectComplex& c) {
  const Algebra& A = c.algebra();
  std::map<int, Types> terms = c.terms();
  std::map<int, ProjMat> diffs;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs[n] = c.diff(n);
  std::map<int, ProjMat> proj, incl;
  for (const auto& [n, t] : terms) {
    proj[n] = ProjMat::identity(A, t);
    incl[n] = ProjMat::identity(A, t);
  }
  auto get_diff = [&](int n) {
    auto it = diffs.find(n);
    return it != diffs.end() ? it->second : ProjMat::zero(A, terms[n], terms[n - 1]);
  };

  for (;;) {
    bool found = false;
    int n = 0;
    std::size_t ua = 0, ub = 0;
    for (auto& [deg, d] : diffs) {
      for (std::size_t a = 0; a < d.src.size() && !found; ++a)
        for (std::size_t b = 0; b < d.dst.size() && !found; ++b)
          if (d.src[a] == d.dst[b] && A.idempotent_coeff(d.src[a], d.at(a, b)) != 0) {
            found = true;
            n = deg;
            ua = a;
            ub = b;
          }
      if (found) break;
    }
    if (!found) break;

    ProjMat d = diffs[n];
    const Types tn = terms[n], tm = terms[n - 1];
    const std::size_t t = tn[ua];
    Elem uinv = A.corner_inverse(t, d.at(ua, ub));
    std::vector<std::size_t> rn, rm;
    for (std::size_t a = 0; a < tn.size(); ++a)
      if (a != ua) rn.push_back(a);
    for (std::size_t b = 0; b < tm.size(); ++b)
      if (b != ub) rm.push_back(b);
    Types tn2, tm2;
    for (auto a : rn) tn2.push_back(tn[a]);
    for (auto b : rm) tm2.push_back(tm[b]);

    ProjMat dn = ProjMat::zero(A, tn2, tm2);
    for (std::size_t r = 0; r < rn.size(); ++r)
      for (std::size_t k = 0; k < rm.size(); ++k)
        dn.at(r, k) = A.sub(d.at(rn[r], rm[k]), A.mul(A.mul(d.at(rn[r], ub), uinv), d.at(ua, rm[k])));

    ProjMat pn = ProjMat::zero(A, tn, tn2), pm = ProjMat::zero(A, tm, tm2);
    ProjMat in = ProjMat::zero(A, tn2, tn), im = ProjMat::zero(A, tm2, tm);
    for (std::size_t k = 0; k < rn.size(); ++k) {
      pn.at(rn[k], k) = A.idempotent(tn2[k]);
      in.at(k, rn[k]) = A.idempotent(tn2[k]);
      in.at(k, ua) = A.scale(A.mul(d.at(rn[k], ub), uinv), A.field().neg(1));
    }
    for (std::size_t k = 0; k < rm.size(); ++k) {
      pm.at(rm[k], k) = A.idempotent(tm2[k]);
      im.at(k, rm[k]) = A.idempotent(tm2[k]);
      pm.at(ub, k) = A.scale(A.mul(uinv, d.at(ua, rm[k])), A.field().neg(1));
    }

    ProjMat dup = get_diff(n + 1), ddown = get_diff(n - 1);
    ProjMat dup2 = ProjMat::zero(A, dup.src, tn2), ddown2 = ProjMat::zero(A, tm2, ddown.dst);
    for (std::size_t r = 0; r < dup.src.size(); ++r)
      for (std::size_t k = 0; k < rn.size(); ++k) dup2.at(r, k) = dup.at(r, rn[k]);
    for (std::size_t k = 0; k < rm.size(); ++k)
      for (std::size_t c2 = 0; c2 < ddown.dst.size(); ++c2) ddown2.at(k, c2) = ddown.at(rm[k], c2);

    terms[n] = tn2;
    terms[n - 1] = tm2;
    diffs[n] = dn;
    if (diffs.count(n + 1) || !dup.src.empty()) diffs[n + 1] = dup2;
    if (diffs.count(n - 1) || !ddown.dst.empty()) diffs[n - 1] = ddown2;
    proj[n] = pm_mul(A, proj[n], pn);
    proj[n - 1] = pm_mul(A, proj[n - 1], pm);
    incl[n] = pm_mul(A, in, incl[n]);
    incl[n - 1] = pm_mul(A, im, incl[n - 1]);
  }

  Minimized out;
  std::map<int, ProjMat> live;
  for (auto& [n, d] : diffs)
    if (!terms[n].empty() && !terms[n - 1].empty()) live[n] = d;
  out.complex = PerfectComplex(c.alg(), terms, live);
  out.proj = {c, out.complex, {}};
  out.incl = {out.complex, c, {}};
  for (const auto& [n, t] : out.complex.terms()) {
    out.proj.maps[n] = proj[n];
    out.incl.maps[n] = incl[n];
  }
  return out;
}

PerfectComplex minimize(const PerfectComplex& c) { return minimize_with_maps(c).complex; }

bool is_minimal(const PerfectComplex& c) {
  for (int n = c.lo() + 1; n <= c.hi(); ++n)
    if (!top_matrix(c.algebra(), c.diff(n)).is_zero()) return false;
  return true;
}

std::size_t length(const PerfectComplex& c) {
  PerfectComplex m = minimize(c);
  return m.is_zero() ? 0 : static_cast<std::size_t>(m.hi() - m.lo() + 1);
}

ModuleRep term_module(const PerfectComplex& c, int n) { return projective_sum(c.alg(), c.term(n)); }

Mat flat_diff(const PerfectComplex& c, int n) { return flatten(c.algebra(), c.diff(n)); }

ModuleRep homology(const PerfectComplex& c, int n) {
  if (c.term(n).empty()) return ModuleRep::zero(c.alg());
  ModuleRep m = term_module(c, n);
  Mat k = kernel_basis(flat_diff(c, n)).transpose();
  Mat im = column_space_basis(flat_diff(c, n + 1));
  return subquotient(m, k, im).module;
}

// ---------------------------------------------------------------- Hom in K

namespace {

struct Slot {
  int deg;
  std::size_t a, b;
  Elem x;
};

}  // namespace

HomSpace::HomSpace(const PerfectComplex& c, const PerfectComplex& d) : c_(c), d_(d) {
  if (c.is_zero() || d.is_zero()) return;
  require_same_algebra(c.algebra(), d.algebra());
  const Algebra& A = c.algebra();
  const Fp& f = A.field();
  const std::size_t n = A.dim();
  lo_ = std::max(c.lo(), d.lo());
  hi_ = std::min(c.hi(), d.hi());
  if (lo_ > hi_) return;

  // offsets of f_k in the ambient vector
  std::map<int, std::size_t> off;
  for (int k = lo_; k <= hi_; ++k) {
    off[k] = ambient_;
    ambient_ += c.term(k).size() * d.term(k).size() * n;
  }
  auto f_index = [&](int k, std::size_t a, std::size_t b) { return off[k] + (a * d.term(k).size() + b) * n; };

  // chain map unknowns in corner coordinates
  std::vector<Slot> unknowns;
  for (int k = lo_; k <= hi_; ++k)
    for (std::size_t a = 0; a < c.term(k).size(); ++a)
      for (std::size_t b = 0; b < d.term(k).size(); ++b) {
        const Mat& cb = A.corner(c.term(k)[a], d.term(k)[b]);
        for (std::size_t r = 0; r < cb.rows(); ++r) unknowns.push_back({k, a, b, Elem(cb.row_span(r).begin(), cb.row_span(r).end())});
      }

  // commutator d^C_k f_{k-1} - f_k d^D_k, for k in [lo_, hi_ + 1]
  std::map<int, std::size_t> coff;
  std::size_t csize = 0;
  for (int k = lo_; k <= hi_ + 1; ++k) {
    coff[k] = csize;
    csize += c.term(k).size() * d.term(k - 1).size() * n;
  }
  std::map<int, ProjMat> dc, dd;
  for (int k = lo_ - 1; k <= hi_ + 2; ++k) {
    dc[k] = c.diff(k);
    dd[k] = d.diff(k);
  }
  Mat eqs(csize, unknowns.size(), f);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const Slot& s = unknowns[u];
    // -f_k d^D_k : row a of the degree-k commutator
    const ProjMat& ddk = dd[s.deg];
    for (std::size_t cc = 0; cc < ddk.dst.size(); ++cc) {
      Elem v = A.mul(s.x, ddk.at(s.b, cc));
      std::size_t base = coff[s.deg] + (s.a * d.term(s.deg - 1).size() + cc) * n;
      for (std::size_t i = 0; i < n; ++i) eqs(base + i, u) = f.sub(eqs(base + i, u), v[i]);
    }
    // d^C_{k+1} f_k : column b of the degree-(k+1) commutator
    const ProjMat& dck = dc[s.deg + 1];
    for (std::size_t r = 0; r < dck.src.size(); ++r) {
      Elem v = A.mul(dck.at(r, s.a), s.x);
      std::size_t base = coff[s.deg + 1] + (r * d.term(s.deg).size() + s.b) * n;
      for (std::size_t i = 0; i < n; ++i) eqs(base + i, u) = f.add(eqs(base + i, u), v[i]);
    }
  }
  Mat zk = kernel_basis(eqs);
  z_dim_ = zk.rows();
  z_rows_ = Mat(z_dim_, ambient_, f);
  for (std::size_t r = 0; r < z_dim_; ++r)
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      Scalar s = zk(r, u);
      if (!s) continue;
      const Slot& sl = unknowns[u];
      std::size_t base = f_index(sl.deg, sl.a, sl.b);
      for (std::size_t i = 0; i < n; ++i) z_rows_(r, base + i) = f.add(z_rows_(r, base + i), f.mul(s, sl.x[i]));
    }

  // null-homotopic maps: f_k = d^C_k h_{k-1} + h_k d^D_{k+1}, h_k : C_k -> D_{k+1}
  std::vector<std::vector<Scalar>> bvecs;
  for (int k = lo_ - 1; k <= hi_; ++k)
    for (std::size_t a = 0; a < c.term(k).size(); ++a)
      for (std::size_t b = 0; b < d.term(k + 1).size(); ++b) {
        const Mat& cb = A.corner(c.term(k)[a], d.term(k + 1)[b]);
        for (std::size_t r = 0; r < cb.rows(); ++r) {
          Elem x(cb.row_span(r).begin(), cb.row_span(r).end());
          std::vector<Scalar> v(ambient_, 0);
          if (k >= lo_ && k <= hi_) {
            const ProjMat& ddk = dd[k + 1];
            for (std::size_t cc = 0; cc < ddk.dst.size(); ++cc) {
              Elem y = A.mul(x, ddk.at(b, cc));
              std::size_t base = f_index(k, a, cc);
              for (std::size_t i = 0; i < n; ++i) v[base + i] = f.add(v[base + i], y[i]);
            }
          }
          if (k + 1 >= lo_ && k + 1 <= hi_) {
            const ProjMat& dck = dc[k + 1];
            for (std::size_t rr = 0; rr < dck.src.size(); ++rr) {
              Elem y = A.mul(dck.at(rr, a), x);
              std::size_t base = f_index(k + 1, rr, b);
              for (std::size_t i = 0; i < n; ++i) v[base + i] = f.add(v[base + i], y[i]);
            }
          }
          bvecs.push_back(std::move(v));
        }
      }

  quot_.emplace(ambient_, f);
  for (auto& v : bvecs)
    if (!quot_->push(v)) ++b_dim_;
  for (std::size_t r = 0; r < z_dim_; ++r) {
    auto row = z_rows_.row_span(r);
    if (!quot_->push(row)) basis_.push_back(decode(row));
  }
}

std::vector<Scalar> HomSpace::encode(const ChainMap& fm) const {
  const Algebra& A = c_.algebra();
  std::vector<Scalar> v;
  v.reserve(ambient_);
  for (int k = lo_; k <= hi_; ++k) {
    ProjMat m = fm.at(k);
    if (m.src != c_.term(k) || m.dst != d_.term(k)) throw Error(ErrorCode::InvalidChainMap, "map has the wrong terms");
    for (const auto& e : m.entries) v.insert(v.end(), e.begin(), e.end());
  }
  (void)A;
  return v;
}

ChainMap HomSpace::decode(std::span<const Scalar> v) const {
  const Algebra& A = c_.algebra();
  ChainMap fm{c_, d_, {}};
  std::size_t pos = 0;
  for (int k = lo_; k <= hi_; ++k) {
    ProjMat m = ProjMat::zero(A, c_.term(k), d_.term(k));
    for (auto& e : m.entries)
      for (auto& x : e) x = v[pos++];
    fm.maps[k] = m;
  }
  return fm;
}

std::vector<ChainMap> HomSpace::cycle_basis() const {
  std::vector<ChainMap> out;
  for (std::size_t r = 0; r < z_dim_; ++r) out.push_back(decode(z_rows_.row_span(r)));
  return out;
}

std::vector<Scalar> HomSpace::coords(const ChainMap& fm) const {
  if (basis_.empty() && b_dim_ == 0) {
    fm.validate();
    return {};
  }
  fm.validate();
  auto x = quot_->of(encode(fm));
  if (!x) throw Error(ErrorCode::InvalidChainMap, "map is not in the span of chain maps");
  return std::vector<Scalar>(x->begin() + static_cast<std::ptrdiff_t>(b_dim_), x->end());
}

bool HomSpace::is_null_homotopic(const ChainMap& fm) const {
  auto c = coords(fm);
  return std::all_of(c.begin(), c.end(), [](Scalar s) { return s == 0; });
}

ChainMap HomSpace::combination(const std::vector<Scalar>& cf) const {
  ChainMap r{c_, d_, {}};
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (cf[k]) r = r.maps.empty() ? cm_scale(basis_[k], cf[k]) : cm_add(r, cm_scale(basis_[k], cf[k]));
  return r;
}

std::size_t hom_dim(const PerfectComplex& c, const PerfectComplex& d) { return HomSpace(c, d).dim(); }

// ---------------------------------------------------------------- decomposition

namespace {

Mat flatten_total(const PerfectComplex& c, const ChainMap& f) {
  Mat out(0, 0, c.algebra().field());
  for (const auto& [n, t] : c.terms()) out = direct_sum(out, flatten(c.algebra(), f.at(n)));
  return out;
}

Mat top_total(const PerfectComplex& c, const ChainMap& f) {
  Mat out(0, 0, c.algebra().field());
  for (const auto& [n, t] : c.terms()) out = direct_sum(out, top_matrix(c.algebra(), f.at(n)));
  return out;
}

// Summand of C_n spanned (as a submodule) by the columns of u, given by generators.
ProjMat summand_generators(const PerfectComplex& c, int n, const Mat& u) {
  const Algebra& A = c.algebra();
  ModuleRep m = term_module(c, n);
  Mat rad = radical_of(m);
  RowSpace modrad(m.dim(), A.field());
  for (std::size_t j = 0; j < rad.cols(); ++j) modrad.add(rad.col_vec(j));
  Types types;
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const Mat& ei = m.action(A.spec().idempotents[i]);
    for (std::size_t j = 0; j < u.cols(); ++j) {
      auto v = ei.apply(u.col_vec(j));
      if (modrad.add(v)) {
        types.push_back(i);
        rows.push_back(proj_elems(A, c.term(n), v));
      }
    }
  }
  ProjMat g = ProjMat::zero(A, types, c.term(n));
  for (std::size_t a = 0; a < types.size(); ++a)
    for (std::size_t b = 0; b < c.term(n).size(); ++b) g.at(a, b) = rows[a][b];
  if (types_dim(A, types) != u.cols())
    throw Error(ErrorCode::SplitnessViolation, "invariant subspace is not a projective summand");
  return g;
}

// Solve y * g = x for y with entries in the corners, g a generator matrix.
std::vector<Elem> solve_row(const Algebra& A, const Types& ytypes_src, std::size_t src_type, const ProjMat& g,
                            const std::vector<Elem>& x) {
  const std::size_t n = A.dim();
  const Fp& f = A.field();
  std::vector<std::pair<std::size_t, Elem>> unknowns;
  for (std::size_t c = 0; c < ytypes_src.size(); ++c) {
    const Mat& cb = A.corner(src_type, ytypes_src[c]);
    for (std::size_t r = 0; r < cb.rows(); ++r) unknowns.push_back({c, Elem(cb.row_span(r).begin(), cb.row_span(r).end())});
  }
  Mat sys(g.dst.size() * n, unknowns.size(), f);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (std::size_t b = 0; b < g.dst.size(); ++b) {
      Elem v = A.mul(unknowns[u].second, g.at(unknowns[u].first, b));
      for (std::size_t i = 0; i < n; ++i) sys(b * n + i, u) = v[i];
    }
  Mat rhs(g.dst.size() * n, 1, f);
  for (std::size_t b = 0; b < g.dst.size(); ++b)
    for (std::size_t i = 0; i < n; ++i) rhs(b * n + i, 0) = x[b][i];
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorCode::SplitnessViolation, "summand is not a subcomplex");
  std::vector<Elem> y(ytypes_src.size(), A.zero());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if ((*sol)(u, 0)) y[unknowns[u].first] = A.add(y[unknowns[u].first], A.scale(unknowns[u].second, (*sol)(u, 0)));
  return y;
}

// Subcomplex of c with U_n = columns of blocks[n] (flattened coordinates), and its inclusion.
ChainMap subcomplex(const PerfectComplex& c, const std::map<int, Mat>& blocks) {
  const Algebra& A = c.algebra();
  std::map<int, ProjMat> gens;
  std::map<int, Types> terms;
  for (const auto& [n, u] : blocks) {
    if (u.cols() == 0) continue;
    gens[n] = summand_generators(c, n, u);
    terms[n] = gens[n].src;
  }
  std::map<int, ProjMat> diffs;
  for (auto& [n, g] : gens) {
    auto it = gens.find(n - 1);
    if (it == gens.end()) continue;
    ProjMat gd = pm_mul(A, g, c.diff(n));
    ProjMat dn = ProjMat::zero(A, g.src, it->second.src);
    for (std::size_t a = 0; a < g.src.size(); ++a) {
      std::vector<Elem> x(gd.dst.size());
      for (std::size_t b = 0; b < gd.dst.size(); ++b) x[b] = gd.at(a, b);
      auto y = solve_row(A, it->second.src, g.src[a], it->second, x);
      for (std::size_t cc = 0; cc < y.size(); ++cc) dn.at(a, cc) = y[cc];
    }
    diffs[n] = dn;
  }
  PerfectComplex sub(c.alg(), terms, diffs);
  ChainMap incl{sub, c, {}};
  for (auto& [n, g] : gens) incl.maps[n] = g;
  return incl;
}

struct CLeaf {
  ChainMap incl;  // into the minimal model
  LocalityCert cert;
};

void split_complex(const ChainMap& incl, std::mt19937_64& rng, std::vector<CLeaf>& out) {
  const PerfectComplex& x = incl.source;
  EndoAlgebra e = complex_endomorphisms(x);
  SplitResult r = analyze_endomorphisms(e, rng);
  if (r.local) {
    out.push_back({incl, r.cert});
    return;
  }
  std::map<int, Mat> kb, ib;
  std::size_t off = 0;
  for (const auto& [n, t] : x.terms()) {
    std::size_t dn = x.term_dim(n);
    Mat blk(dn, dn, x.algebra().field());
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dn; ++j) blk(i, j) = r.fitting(off + i, off + j);
    kb[n] = kernel_basis(blk).transpose();
    ib[n] = column_space_basis(blk);
    off += dn;
  }
  ChainMap k = subcomplex(x, kb), im = subcomplex(x, ib);
  split_complex(compose(k, incl), rng, out);
  split_complex(compose(im, incl), rng, out);
}

}  // namespace

EndoAlgebra complex_endomorphisms(const PerfectComplex& c) {
  EndoAlgebra e;
  HomSpace h(c, c);
  for (const auto& f : h.cycle_basis()) {
    e.basis.push_back(flatten_total(c, f));
    e.tops.push_back(top_total(c, f));
  }
  return e;
}

std::vector<ComplexSummand> decompose_complex(const PerfectComplex& c, std::uint64_t seed) {
  std::vector<ComplexSummand> out;
  PerfectComplex m = minimize(c);
  if (m.is_zero()) return out;
  std::mt19937_64 rng(seed);
  std::vector<CLeaf> leaves;
  split_complex(identity_map(m), rng, leaves);
  for (auto& l : leaves) {
    bool placed = false;
    for (auto& s : out)
      if (s.complex.terms().size() == l.incl.source.terms().size() && is_isomorphic(s.complex, l.incl.source, seed)) {
        s.multiplicity += 1;
        s.inclusions.push_back(l.incl);
        placed = true;
        break;
      }
    if (!placed) out.push_back({l.incl.source, 1, {l.incl}, l.cert});
  }
  return out;
}

bool is_indecomposable(const PerfectComplex& c, std::uint64_t seed) {
  PerfectComplex m = minimize(c);
  if (m.is_zero()) return false;
  std::mt19937_64 rng(seed);
  return analyze_endomorphisms(complex_endomorphisms(m), rng).local;
}

bool is_isomorphic(const PerfectComplex& c0, const PerfectComplex& d0, std::uint64_t seed) {
  PerfectComplex c = minimize(c0), d = minimize(d0);
  if (c.is_zero() || d.is_zero()) return c.is_zero() && d.is_zero();
  require_same_algebra(c.algebra(), d.algebra());
  if (c.lo() != d.lo() || c.hi() != d.hi()) return false;
  for (const auto& [n, t] : c.terms()) {
    Types a = t, b = d.term(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  HomSpace h(c, d);
  const std::size_t k = h.dim();
  if (k == 0) return false;
  if (hom_dim(d, c) != k || hom_dim(c, c) != k || hom_dim(d, d) != k) return false;
  const Algebra& A = c.algebra();
  const Fp& f = A.field();
  auto invertible = [&](const ChainMap& fm) {
    for (const auto& [n, t] : c.terms())
      if (artri::rank(top_matrix(A, fm.at(n))) != t.size()) return false;
    return true;
  };
  for (const auto& b : h.basis())
    if (invertible(b)) return true;
  double space = std::pow(static_cast<double>(f.p()), static_cast<double>(k));
  if (space <= 4096.0) {
    std::vector<Scalar> cf(k, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < k && ++cf[i] == f.p()) cf[i++] = 0;
      if (i == k) return false;
      if (invertible(h.combination(cf))) return true;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  for (int t = 0; t < 64; ++t) {
    std::vector<Scalar> cf(k);
    for (auto& x : cf) x = static_cast<Scalar>(dist(rng));
    if (invertible(h.combination(cf))) return true;
  }
  throw Error(ErrorCode::Inconclusive, "no invertible chain map found in 64 trials");
}

// ---------------------------------------------------------------- resolutions

PerfectComplex from_resolution(const ModuleRep& m, std::size_t n) {
  if (m.dim() == 0) throw Error(ErrorCode::ZeroModule, "resolution of the zero module");
  const Algebra& A = *m.alg();
  std::map<int, Types> terms;
  std::map<int, ProjMat> diffs;
  ProjectiveCover pc = projective_cover(m);
  terms[0] = pc.types;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat kb = kernel_basis(pc.surj.matrix).transpose();
    if (kb.cols() == 0) break;
    Subquotient sq = subquotient(pc.p, kb, Mat(pc.p.dim(), 0, A.field()));
    ProjectiveCover next = projective_cover(sq.module);
    Types prev = pc.types;
    ProjMat d = ProjMat::zero(A, next.types, prev);
    for (std::size_t a = 0; a < next.types.size(); ++a) {
      auto v = sq.lift.apply(next.gens.col_vec(a));
      auto elems = proj_elems(A, prev, v);
      for (std::size_t b = 0; b < prev.size(); ++b) d.at(a, b) = elems[b];
    }
    terms[static_cast<int>(k)] = next.types;
    diffs[static_cast<int>(k)] = d;
    pc = next;
  }
  return PerfectComplex(m.alg(), terms, diffs);
}

}  // namespace artri
