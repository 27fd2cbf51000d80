#include "artri/linalg.hpp"

#include <utility>

namespace artri {

namespace {

// row_a -= c * row_b over columns [from, n)
void axpy_row(std::span<Scalar> a, std::span<const Scalar> b, Scalar c, std::size_t from, const Fp& f) {
  if (!c) return;
  for (std::size_t j = from; j < a.size(); ++j)
    if (b[j]) a[j] = f.sub(a[j], f.mul(c, b[j]));
}

}  // namespace

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  Mat& r = res.reduced;
  const Fp& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && r(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(r(piv, j), r(row, j));
    Scalar inv = f.inv(r(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) r(row, j) = f.mul(r(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      axpy_row(r.row_span(i), r.row_span(row), r(i, col), col, f);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  const Fp& f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  Mat k(m.cols() - rr.rank, m.cols(), f);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) k(out, rr.pivots[i]) = f.neg(rr.reduced(i, free));
    ++out;
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: row counts differ");
  const Fp& f = a.field();
  RrefResult rr = rref(hstack(a, b));
  // inconsistent iff a pivot falls in the b block
  for (auto c : rr.pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols(), f);
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = rr.reduced(i, a.cols() + j);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.rows(), m.field()));
}

Mat row_space_basis(const Mat& m) {
  RrefResult rr = rref(m);
  return rr.reduced.row_range(0, rr.rank);
}

Mat column_space_basis(const Mat& m) { return row_space_basis(m.transpose()).transpose(); }

bool RowSpace::reduce(std::vector<Scalar>& v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "RowSpace: vector length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c) axpy_row(v, rows_[i], c, pivots_[i], f_);
  }
  for (Scalar x : v)
    if (x) return false;
  return true;
}

bool RowSpace::add(std::vector<Scalar> v) {
  if (reduce(v)) return false;
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  Scalar inv = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, inv);
  // keep fully reduced: clear the new pivot from existing rows
  for (auto& r : rows_)
    if (r[piv]) axpy_row(r, v, r[piv], 0, f_);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Mat RowSpace::basis() const {
  Mat b(rows_.size(), n_, f_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < n_; ++j) b(i, j) = rows_[i][j];
  return b;
}

Coordinates::Coordinates(const Mat& family) : n_(family.cols()), f_(family.field()) {
  for (std::size_t i = 0; i < family.rows(); ++i)
    if (push(family.row_span(i)))
      throw Error(ErrorCode::DimensionMismatch, "Coordinates: family is linearly dependent");
}

std::optional<std::vector<Scalar>> Coordinates::push(std::span<const Scalar> v0) {
  if (auto c = of(v0)) return c;
  std::vector<Scalar> v(v0.begin(), v0.end());
  for (auto& c : combos_) c.push_back(0);
  std::vector<Scalar> combo(k_ + 1, 0);
  combo[k_] = 1;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];
    if (!c) continue;
    axpy_row(v, rows_[r], c, 0, f_);
    axpy_row(combo, combos_[r], c, 0, f_);
  }
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  Scalar inv = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, inv);
  for (auto& x : combo) x = f_.mul(x, inv);
  rows_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  ++k_;
  return std::nullopt;
}

std::optional<std::vector<Scalar>> Coordinates::of(std::span<const Scalar> v0) const {
  if (v0.size() != n_) throw Error(ErrorCode::DimensionMismatch, "Coordinates: vector length");
  std::vector<Scalar> v(v0.begin(), v0.end());
  std::vector<Scalar> coords(k_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];
    if (!c) continue;
    axpy_row(v, rows_[r], c, 0, f_);
    // v = sum coords_r * rows_r, and rows_r = combos_r . family
    for (std::size_t j = 0; j < k_; ++j)
      if (combos_[r][j]) coords[j] = f_.add(coords[j], f_.mul(c, combos_[r][j]));
  }
  for (Scalar x : v)
    if (x) return std::nullopt;
  return coords;
}

}  // namespace artri
