#include "artri/matrix.hpp"

#include <ostream>
#include <string>

namespace artri {

void require_same_field(const Fp& a, const Fp& b) {
  if (!(a == b))
    throw Error(ErrorCode::CharacteristicMismatch,
                "F_" + std::to_string(a.p()) + " vs F_" + std::to_string(b.p()));
}

Mat Mat::identity(std::size_t n, const Fp& f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<std::int64_t>>& rows, const Fp& f) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Mat m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

Mat Mat::column(std::span<const Scalar> v, const Fp& f) {
  Mat m(v.size(), 1, f);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Mat Mat::row(std::span<const Scalar> v, const Fp& f) {
  Mat m(1, v.size(), f);
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

std::vector<Scalar> Mat::col_vec(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

bool Mat::is_zero() const noexcept {
  for (Scalar x : data_)
    if (x) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, f_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (cols_ != o.rows_)
    throw Error(ErrorCode::DimensionMismatch, "product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                                  " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Mat r(rows_, o.cols_, f_);
  const std::uint64_t p = f_.p();
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      const Scalar* orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        acc[j] += a * orow[j];
        if (acc[j] >= (std::uint64_t{1} << 62)) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = static_cast<Scalar>(acc[j] % p);
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "sum of unequal shapes");
  Mat r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.add(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "difference of unequal shapes");
  Mat r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.sub(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-() const {
  Mat r(*this);
  for (auto& x : r.data_) x = f_.neg(x);
  return r;
}

Mat Mat::scaled(Scalar s) const {
  Mat r(*this);
  for (auto& x : r.data_) x = f_.mul(x, s);
  return r;
}

std::vector<Scalar> Mat::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "apply: vector length");
  std::vector<Scalar> out(rows_, 0);
  const std::uint64_t p = f_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
      if (acc >= (std::uint64_t{1} << 62)) acc %= p;
    }
    out[i] = static_cast<Scalar>(acc % p);
  }
  return out;
}

Mat Mat::col_range(std::size_t c0, std::size_t n) const {
  Mat r(rows_, n, f_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = (*this)(i, c0 + j);
  return r;
}

Mat Mat::row_range(std::size_t r0, std::size_t n) const {
  Mat r(n, cols_, f_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(r0 + i, j);
  return r;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat r(rows_, idx.size(), f_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  require_same_field(f_, b.f_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack row counts");
  Mat r(a.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack column counts");
  Mat r(a.rows() + b.rows(), a.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace artri
