#pragma once

#include <optional>
#include <vector>

#include "artri/matrix.hpp"

namespace artri {

struct RrefResult {
  std::size_t rank = 0;
  Mat reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Rows form a basis of the right null space {v : m v = 0}.
Mat kernel_basis(const Mat& m);

/// Some x with a x = b, or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

/// Rows form a basis of the row space of m (the nonzero rows of its rref).
Mat row_space_basis(const Mat& m);
/// Columns form a basis of the column space of m.
Mat column_space_basis(const Mat& m);

/// Incrementally grown subspace of F_p^n kept in reduced echelon form.
/// Used for rank tests against a fixed subspace and for extending bases.
class RowSpace {
 public:
  RowSpace(std::size_t n, const Fp& f) : n_(n), f_(f) {}

  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }

  /// Reduce v against the current basis (in place); returns true if v is now zero.
  bool reduce(std::vector<Scalar>& v) const;
  bool contains(std::vector<Scalar> v) const { return reduce(v); }
  /// Adds v if independent; returns whether the dimension grew.
  bool add(std::vector<Scalar> v);

  /// Basis rows in echelon form.
  Mat basis() const;

 private:
  std::size_t n_;
  Fp f_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates of vectors with respect to a fixed, linearly independent family.
class Coordinates {
 public:
  Coordinates(std::size_t n, const Fp& f) : n_(n), f_(f) {}
  /// Family given as rows of `family`; throws if they are dependent.
  explicit Coordinates(const Mat& family);

  std::size_t size() const noexcept { return k_; }
  /// Appends v to the family when independent (returns nullopt); otherwise
  /// leaves the family unchanged and returns the coordinates of v.
  std::optional<std::vector<Scalar>> push(std::span<const Scalar> v);
  /// Coordinates of v in the family, or nullopt when v is outside the span.
  std::optional<std::vector<Scalar>> of(std::span<const Scalar> v) const;

 private:
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  Fp f_;
  // Echelon rows augmented with the combination that produced them.
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::vector<Scalar>> combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace artri
