#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "artri/field.hpp"

namespace artri {

/// Dense row-major matrix over F_p. The field travels with the matrix so
/// that mixing characteristics is caught at the first operation.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const Fp& f)
      : rows_(rows), cols_(cols), f_(f), data_(rows * cols, 0) {}

  static Mat identity(std::size_t n, const Fp& f);
  static Mat from_rows(const std::vector<std::vector<std::int64_t>>& rows, const Fp& f);
  /// Column matrix from a vector.
  static Mat column(std::span<const Scalar> v, const Fp& f);
  static Mat row(std::span<const Scalar> v, const Fp& f);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Fp& field() const noexcept { return f_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> col_vec(std::size_t c) const;
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(Scalar s) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  /// Columns [c0, c0 + n).
  Mat col_range(std::size_t c0, std::size_t n) const;
  Mat row_range(std::size_t r0, std::size_t n) const;
  Mat select_cols(std::span<const std::size_t> idx) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.f_ == b.f_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Fp f_;
  std::vector<Scalar> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
/// Block-diagonal sum.
Mat direct_sum(const Mat& a, const Mat& b);

std::ostream& operator<<(std::ostream& os, const Mat& m);

void require_same_field(const Fp& a, const Fp& b);

}  // namespace artri
