#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artri/matrix.hpp"

namespace artri {

/// An algebra element as a coefficient vector in the declared basis.
using Elem = std::vector<Scalar>;

struct AlgebraSpec {
  std::string name;
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<std::size_t> idempotents;
  std::vector<std::size_t> radical;
  // mult[i][j] = coefficients of b_i * b_j
  std::vector<std::vector<std::vector<std::int64_t>>> mult;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A validated split basic algebra. Everything derived from the
/// multiplication table is computed once in validate() and then read-only.
class Algebra {
 public:
  static AlgebraPtr validate(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const std::string& name() const noexcept { return spec_.name; }
  const Fp& field() const noexcept { return f_; }
  std::size_t dim() const noexcept { return spec_.dim; }
  /// Number of simple modules (= primitive idempotents).
  std::size_t rank() const noexcept { return spec_.idempotents.size(); }

  Elem zero() const { return Elem(dim(), 0); }
  Elem basis_elem(std::size_t b) const;
  Elem idempotent(std::size_t i) const { return basis_elem(spec_.idempotents[i]); }
  Elem one() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, Scalar s) const;
  bool is_zero(const Elem& a) const;

  /// Column c of left(b) is b * b_c; column c of right(b) is b_c * b.
  const Mat& left(std::size_t b) const { return left_[b]; }
  const Mat& right(std::size_t b) const { return right_[b]; }
  Mat left_mult(const Elem& a) const;
  Mat right_mult(const Elem& a) const;

  /// Idempotents together with radical elements spanning Rad / Rad^2.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  /// Rows: a basis of e_i Lambda e_j.
  const Mat& corner(std::size_t i, std::size_t j) const { return corner_[i * rank() + j]; }
  std::size_t corner_dim(std::size_t i, std::size_t j) const { return corner(i, j).rows(); }
  /// Coordinates of an element of e_i Lambda e_j in corner(i, j).
  std::vector<Scalar> corner_coords(std::size_t i, std::size_t j, const Elem& a) const;

  /// Rows: a basis of Lambda e_i.
  const Mat& projective_basis(std::size_t i) const { return proj_basis_[i]; }
  std::size_t projective_dim(std::size_t i) const { return proj_basis_[i].rows(); }
  std::vector<Scalar> projective_coords(std::size_t i, const Elem& a) const;

  /// Coefficient of e_i in a (meaningful for a in e_i Lambda e_i).
  Scalar idempotent_coeff(std::size_t i, const Elem& a) const { return a[spec_.idempotents[i]]; }
  bool in_radical(const Elem& a) const;
  /// Inverse of a unit u of e_i Lambda e_i inside that corner.
  Elem corner_inverse(std::size_t i, const Elem& u) const;

  std::size_t loewy_length() const noexcept { return loewy_; }
  /// cartan()(i, j) = dim e_i Lambda e_j.
  const std::vector<std::vector<std::size_t>>& cartan() const noexcept { return cartan_; }
  bool has_semisimple_summand() const noexcept { return semisimple_summand_; }
  bool is_self_injective() const noexcept { return self_injective_; }
  bool is_symmetric() const noexcept { return sym_form_.has_value(); }
  const std::optional<Mat>& symmetrizing_form() const noexcept { return sym_form_; }

  /// Spanning vector of the (simple) socle of Lambda e_i and its type.
  const Elem& socle_element(std::size_t i) const;
  std::size_t socle_type(std::size_t i) const;

  /// pi(j) = i where soc(Lambda e_i) is S_j; throws NotSelfInjective.
  const std::vector<std::size_t>& nakayama_permutation() const;
  std::vector<std::size_t> nakayama_inverse() const;
  /// Nakayama automorphism and its inverse; sigma(e_j) = e_{pi(j)}.
  Elem sigma(const Elem& a) const;
  Elem sigma_inv(const Elem& a) const;

  friend bool same_algebra(const Algebra& a, const Algebra& b) {
    return &a == &b || (a.spec_.name == b.spec_.name && a.f_ == b.f_ && a.spec_.dim == b.spec_.dim &&
                        a.spec_.mult == b.spec_.mult);
  }

 private:
  Algebra() = default;
  void check_structure();
  void compute_radical_data();
  void compute_corners();
  void compute_socles();
  void compute_nakayama();
  void compute_symmetrizing_form();

  AlgebraSpec spec_;
  Fp f_;
  std::vector<Mat> left_, right_;
  std::vector<std::size_t> generators_;
  std::vector<Mat> corner_;
  std::vector<Mat> proj_basis_;
  std::size_t loewy_ = 0;
  std::vector<std::vector<std::size_t>> cartan_;
  bool semisimple_summand_ = false;
  bool self_injective_ = false;
  std::vector<Elem> socle_;
  std::vector<std::size_t> socle_dim_, socle_type_;
  std::vector<std::size_t> pi_;
  Mat sigma_, sigma_inv_;
  std::optional<Mat> sym_form_;
};

void require_same_algebra(const Algebra& a, const Algebra& b);

}  // namespace artri
