#include "artri/algebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "artri/linalg.hpp"

namespace artri {

namespace {

std::string idx_list(std::initializer_list<std::size_t> v) {
  std::string s = "(";
  bool first = true;
  for (auto x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

Mat rows_of(const std::vector<Elem>& v, std::size_t n, const Fp& f) {
  Mat m(v.size(), n, f);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i][j];
  return m;
}

}  // namespace

void require_same_algebra(const Algebra& a, const Algebra& b) {
  require_same_field(a.field(), b.field());
  if (!same_algebra(a, b)) throw Error(ErrorCode::AlgebraMismatch, "'" + a.name() + "' vs '" + b.name() + "'");
}

Elem Algebra::basis_elem(std::size_t b) const {
  Elem e(dim(), 0);
  e[b] = 1;
  return e;
}

Elem Algebra::one() const {
  Elem e(dim(), 0);
  for (auto i : spec_.idempotents) e[i] = 1;
  return e;
}

Elem Algebra::mul(const Elem& a, const Elem& b) const {
  Elem r(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i]) continue;
    const Mat& l = left_[i];
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!b[j]) continue;
      Scalar c = f_.mul(a[i], b[j]);
      for (std::size_t k = 0; k < dim(); ++k)
        if (l(k, j)) r[k] = f_.add(r[k], f_.mul(c, l(k, j)));
    }
  }
  return r;
}

Elem Algebra::add(const Elem& a, const Elem& b) const {
  Elem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = f_.add(a[i], b[i]);
  return r;
}

Elem Algebra::sub(const Elem& a, const Elem& b) const {
  Elem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = f_.sub(a[i], b[i]);
  return r;
}

Elem Algebra::scale(const Elem& a, Scalar s) const {
  Elem r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = f_.mul(a[i], s);
  return r;
}

bool Algebra::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](Scalar x) { return x == 0; });
}

Mat Algebra::left_mult(const Elem& a) const {
  Mat m(dim(), dim(), f_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (a[i]) m = m + left_[i].scaled(a[i]);
  return m;
}

Mat Algebra::right_mult(const Elem& a) const {
  Mat m(dim(), dim(), f_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (a[i]) m = m + right_[i].scaled(a[i]);
  return m;
}

std::vector<Scalar> Algebra::corner_coords(std::size_t i, std::size_t j, const Elem& a) const {
  auto c = Coordinates(corner(i, j)).of(a);
  if (!c) throw Error(ErrorCode::InvalidComplex, "element outside e_" + std::to_string(i) + " A e_" + std::to_string(j));
  return *c;
}

std::vector<Scalar> Algebra::projective_coords(std::size_t i, const Elem& a) const {
  auto c = Coordinates(proj_basis_[i]).of(a);
  if (!c) throw Error(ErrorCode::InvalidModule, "element outside A e_" + std::to_string(i));
  return *c;
}

bool Algebra::in_radical(const Elem& a) const {
  for (auto i : spec_.idempotents)
    if (a[i]) return false;
  return true;
}

Elem Algebra::corner_inverse(std::size_t i, const Elem& u) const {
  Elem e = idempotent(i);
  auto v = solve(left_mult(u), Mat::column(e, f_));
  if (!v) throw Error(ErrorCode::InvalidComplex, "corner element is not a unit");
  Elem w = v->col_vec(0);
  return mul(mul(e, w), e);
}

const Elem& Algebra::socle_element(std::size_t i) const {
  if (socle_dim_[i] != 1) throw Error(ErrorCode::NotSelfInjective, "socle of A e_" + std::to_string(i) + " is not simple");
  return socle_[i];
}

std::size_t Algebra::socle_type(std::size_t i) const {
  socle_element(i);
  return socle_type_[i];
}

const std::vector<std::size_t>& Algebra::nakayama_permutation() const {
  if (!self_injective_) throw Error(ErrorCode::NotSelfInjective, "'" + name() + "' is not self-injective");
  return pi_;
}

std::vector<std::size_t> Algebra::nakayama_inverse() const {
  const auto& pi = nakayama_permutation();
  std::vector<std::size_t> inv(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) inv[pi[j]] = j;
  return inv;
}

Elem Algebra::sigma(const Elem& a) const {
  nakayama_permutation();
  return sigma_.apply(a);
}

Elem Algebra::sigma_inv(const Elem& a) const {
  nakayama_permutation();
  return sigma_inv_.apply(a);
}

AlgebraPtr Algebra::validate(const AlgebraSpec& spec) {
  std::shared_ptr<Algebra> a(new Algebra());
  a->spec_ = spec;
  a->f_ = Fp(spec.p);
  a->check_structure();
  a->compute_radical_data();
  a->compute_corners();
  a->compute_socles();
  a->compute_nakayama();
  a->compute_symmetrizing_form();
  return a;
}

void Algebra::check_structure() {
  const std::size_t n = spec_.dim;
  if (n == 0) throw Error(ErrorCode::ParseError, "algebra of dimension 0");
  if (spec_.basis.size() != n) throw Error(ErrorCode::ParseError, "basis has " + std::to_string(spec_.basis.size()) + " labels, dim is " + std::to_string(n));
  if (spec_.mult.size() != n) throw Error(ErrorCode::ParseError, "mult table has wrong row count");
  for (const auto& row : spec_.mult) {
    if (row.size() != n) throw Error(ErrorCode::ParseError, "mult table has wrong column count");
    for (const auto& v : row)
      if (v.size() != n) throw Error(ErrorCode::ParseError, "mult entry has wrong length");
  }
  std::vector<int> seen(n, 0);
  for (auto i : spec_.idempotents) {
    if (i >= n) throw Error(ErrorCode::ParseError, "idempotent index out of range");
    seen[i] += 1;
  }
  for (auto i : spec_.radical) {
    if (i >= n) throw Error(ErrorCode::ParseError, "radical index out of range");
    seen[i] += 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != 1 && seen[i] != 2)
      throw Error(ErrorCode::NotSplitBasic, "basis index " + std::to_string(i) +
                                                " must be exactly one of idempotent or radical");
  if (spec_.idempotents.empty()) throw Error(ErrorCode::NoUnit, "no idempotents declared");

  left_.assign(n, Mat(n, n, f_));
  right_.assign(n, Mat(n, n, f_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar c = f_.reduce(spec_.mult[i][j][k]);
        left_[i](k, j) = c;
        right_[j](k, i) = c;
      }

  // associativity on all basis triples: (b_i b_j) b_k = b_i (b_j b_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem ij = left_[i].col_vec(j);
      for (std::size_t k = 0; k < n; ++k) {
        Elem lhs = right_[k].apply(ij);
        Elem rhs = left_[i].apply(left_[j].col_vec(k));
        if (lhs != rhs) throw Error(ErrorCode::NotAssociative, "basis triple " + idx_list({i, j, k}));
      }
    }

  // idempotents: orthogonal, nonzero, summing to a two-sided unit
  for (std::size_t a = 0; a < rank(); ++a)
    for (std::size_t b = 0; b < rank(); ++b) {
      std::size_t ia = spec_.idempotents[a], ib = spec_.idempotents[b];
      Elem prod = left_[ia].col_vec(ib);
      Elem want = a == b ? basis_elem(ia) : zero();
      if (prod != want) throw Error(ErrorCode::NotSplitBasic, "idempotents " + idx_list({ia, ib}) + " are not orthogonal idempotents");
    }
  Elem u = one();
  Mat lu = left_mult(u), ru = right_mult(u);
  for (std::size_t j = 0; j < n; ++j) {
    if (lu.col_vec(j) != basis_elem(j) || ru.col_vec(j) != basis_elem(j))
      throw Error(ErrorCode::NoUnit, "sum of idempotents does not fix basis index " + std::to_string(j));
  }

  // radical is a two-sided ideal
  std::vector<bool> is_rad(n, false);
  for (auto r : spec_.radical) is_rad[r] = true;
  for (auto r : spec_.radical)
    for (std::size_t x = 0; x < n; ++x) {
      Elem a = left_[r].col_vec(x), b = left_[x].col_vec(r);
      for (std::size_t k = 0; k < n; ++k)
        if ((a[k] || b[k]) && !is_rad[k])
          throw Error(ErrorCode::RadicalNotIdeal, "product of indices " + idx_list({r, x}) + " leaves the radical");
    }
}

void Algebra::compute_radical_data() {
  const std::size_t n = dim();
  // powers Rad^k as row spaces; Loewy length is the first k with Rad^k = 0
  std::vector<Elem> cur;
  for (auto r : spec_.radical) cur.push_back(basis_elem(r));
  std::size_t k = 1;
  std::size_t prev_dim = n;
  Mat rad2_basis(0, n, f_);
  for (;;) {
    Mat span = row_space_basis(rows_of(cur, n, f_));
    if (span.rows() == 0) break;
    if (span.rows() >= prev_dim)
      throw Error(ErrorCode::RadicalNotNilpotent, "radical power " + std::to_string(k) + " does not shrink");
    prev_dim = span.rows();
    std::vector<Elem> next;
    for (std::size_t i = 0; i < span.rows(); ++i) {
      Elem v(span.row_span(i).begin(), span.row_span(i).end());
      for (auto r : spec_.radical) next.push_back(mul(v, basis_elem(r)));
    }
    if (k == 1) rad2_basis = row_space_basis(rows_of(next, n, f_));
    cur = std::move(next);
    ++k;
  }
  loewy_ = k;

  generators_ = spec_.idempotents;
  RowSpace rs(n, f_);
  for (std::size_t i = 0; i < rad2_basis.rows(); ++i)
    rs.add(std::vector<Scalar>(rad2_basis.row_span(i).begin(), rad2_basis.row_span(i).end()));
  for (auto r : spec_.radical)
    if (rs.add(basis_elem(r))) generators_.push_back(r);
}

void Algebra::compute_corners() {
  const std::size_t k = rank();
  corner_.assign(k * k, Mat());
  cartan_.assign(k, std::vector<std::size_t>(k, 0));
  proj_basis_.assign(k, Mat());
  for (std::size_t i = 0; i < k; ++i) {
    Mat li = left_[spec_.idempotents[i]];
    for (std::size_t j = 0; j < k; ++j) {
      Mat rj = right_[spec_.idempotents[j]];
      corner_[i * k + j] = column_space_basis(li * rj).transpose();
      cartan_[i][j] = corner_[i * k + j].rows();
    }
    proj_basis_[i] = column_space_basis(right_[spec_.idempotents[i]]).transpose();
    if (proj_basis_[i].rows() == 1) semisimple_summand_ = true;
  }
}

void Algebra::compute_socles() {
  const std::size_t k = rank();
  socle_.assign(k, Elem());
  socle_dim_.assign(k, 0);
  socle_type_.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& pb = proj_basis_[i];
    // x = c . pb lies in the socle iff r x = 0 for every radical basis element r
    Mat eqs(0, pb.rows(), f_);
    for (auto r : spec_.radical) eqs = vstack(eqs, left_[r] * pb.transpose());
    Mat ker = kernel_basis(eqs);
    socle_dim_[i] = ker.rows();
    if (ker.rows() != 1) continue;
    Mat sm = ker * pb;
    Elem s(sm.row_span(0).begin(), sm.row_span(0).end());
    socle_[i] = s;
    for (std::size_t j = 0; j < k; ++j)
      if (mul(idempotent(j), s) == s) socle_type_[i] = j;
  }
}

void Algebra::compute_nakayama() {
  const std::size_t k = rank();
  self_injective_ = std::all_of(socle_dim_.begin(), socle_dim_.end(), [](std::size_t d) { return d == 1; });
  if (self_injective_) {
    std::set<std::size_t> types(socle_type_.begin(), socle_type_.end());
    self_injective_ = types.size() == k;
  }
  if (!self_injective_) return;
  pi_.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) pi_[socle_type_[i]] = i;

  // Frobenius form: on the corner e_j A e_i holding soc(A e_i) (j its type),
  // a functional that is 1 on the socle vector; zero on all other corners.
  const std::size_t n = dim();
  Elem lambda(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = socle_type_[i];
    Coordinates cc(n, f_);
    cc.push(socle_[i]);
    const Mat& cb = corner(j, i);
    for (std::size_t r = 0; r < cb.rows(); ++r) cc.push(cb.row_span(r));
    Elem ej = idempotent(j), ei = idempotent(i);
    for (std::size_t b = 0; b < n; ++b) {
      Elem x = mul(mul(ej, basis_elem(b)), ei);
      auto c = cc.of(x);
      lambda[b] = f_.add(lambda[b], (*c)[0]);
    }
  }
  Mat g(n, n, f_);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem ab = left_[a].col_vec(b);
      Scalar s = 0;
      for (std::size_t c = 0; c < n; ++c) s = f_.add(s, f_.mul(lambda[c], ab[c]));
      g(a, b) = s;
    }
  auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorCode::NotSelfInjective, "Frobenius form is degenerate");
  sigma_ = *ginv * g.transpose();
  sigma_inv_ = *inverse(sigma_);
  for (std::size_t j = 0; j < k; ++j)
    if (sigma_.apply(idempotent(j)) != idempotent(pi_[j]))
      throw Error(ErrorCode::NotSelfInjective, "Nakayama automorphism does not permute the idempotents");
}

void Algebra::compute_symmetrizing_form() {
  const std::size_t n = dim();
  // functionals with lambda(b_a b_b) = lambda(b_b b_a)
  Mat eqs(n * n, n, f_);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem ab = left_[a].col_vec(b), ba = left_[b].col_vec(a);
      for (std::size_t c = 0; c < n; ++c) eqs(a * n + b, c) = f_.sub(ab[c], ba[c]);
    }
  Mat sol = kernel_basis(eqs);
  if (sol.rows() == 0) return;
  auto gram = [&](const std::vector<Scalar>& lam) {
    Mat g(n, n, f_);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Elem ab = left_[a].col_vec(b);
        Scalar s = 0;
        for (std::size_t c = 0; c < n; ++c) s = f_.add(s, f_.mul(lam[c], ab[c]));
        g(a, b) = s;
      }
    return g;
  };
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::uint64_t> dist(0, f_.p() - 1);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Scalar> lam(n, 0);
    for (std::size_t r = 0; r < sol.rows(); ++r) {
      Scalar c = trial < static_cast<int>(sol.rows()) ? (static_cast<int>(r) == trial ? 1 : 0)
                                                       : static_cast<Scalar>(dist(rng));
      for (std::size_t j = 0; j < n; ++j) lam[j] = f_.add(lam[j], f_.mul(c, sol(r, j)));
    }
    Mat g = gram(lam);
    if (artri::rank(g) == n) {
      sym_form_ = g;
      return;
    }
  }
}

}  // namespace artri
