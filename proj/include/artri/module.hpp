#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "artri/algebra.hpp"
#include "artri/splitting.hpp"

namespace artri {

/// Finite-dimensional left module: one action matrix per algebra basis
/// element, acting on column vectors.
class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(AlgebraPtr alg, std::size_t dim, std::vector<Mat> action);
  static ModuleRep zero(AlgebraPtr alg);

  const AlgebraPtr& alg() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return dim_; }
  const Mat& action(std::size_t b) const { return action_[b]; }
  const std::vector<Mat>& actions() const noexcept { return action_; }
  Mat act(const Elem& a) const;
  const Fp& field() const { return alg_->field(); }

  /// Throws InvalidModule if the action does not respect the multiplication table.
  void validate() const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Mat> action_;
};

struct ModHom {
  ModuleRep source, target;
  Mat matrix;  // target.dim x source.dim
};

/// Subquotient U / W of a module, with W inside U inside M (columns are bases).
struct Subquotient {
  ModuleRep module;
  Mat lift;  // columns: representatives in M of the basis of U / W
  Mat u_basis, w_basis;
  /// Coordinates in the subquotient of a vector of U.
  std::vector<Scalar> coords(std::span<const Scalar> v) const;
};

Subquotient subquotient(const ModuleRep& m, const Mat& u, const Mat& w);
ModuleRep submodule(const ModuleRep& m, const Mat& u);
ModuleRep quotient(const ModuleRep& m, const Mat& w);
/// Smallest submodule containing the given columns.
Mat submodule_closure(const ModuleRep& m, const Mat& gens);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep regular_module(AlgebraPtr alg);
/// Lambda e_i in the basis projective_basis(i).
ModuleRep projective_module(AlgebraPtr alg, std::size_t i);
/// Direct sum of Lambda e_t over the listed types.
ModuleRep projective_sum(AlgebraPtr alg, const std::vector<std::size_t>& types);
ModuleRep simple_module(AlgebraPtr alg, std::size_t i);

/// Element tuple (x_a in Lambda e_{t_a}) <-> coordinates in projective_sum.
std::vector<Scalar> proj_coords(const Algebra& alg, const std::vector<std::size_t>& types, const std::vector<Elem>& x);
std::vector<Elem> proj_elems(const Algebra& alg, const std::vector<std::size_t>& types, std::span<const Scalar> c);

Mat radical_of(const ModuleRep& m);
Mat socle_of(const ModuleRep& m);
/// dim e_i M for each i: composition multiplicities.
std::vector<std::size_t> composition_factors(const ModuleRep& m);

bool is_hom(const ModuleRep& m, const ModuleRep& n, const Mat& t);
std::vector<ModHom> hom_basis(const ModuleRep& m, const ModuleRep& n);
std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n);
std::size_t stable_hom_dim(const ModuleRep& m, const ModuleRep& n);

struct ProjectiveCover {
  ModuleRep p;
  std::vector<std::size_t> types;
  ModHom surj;
  /// Generator images in M, one column per summand.
  Mat gens;
};

ProjectiveCover projective_cover(const ModuleRep& m);
/// Kernel of the cover as a module; the columns of `incl` embed it in the cover.
ModuleRep syzygy(const ModuleRep& m, Mat* incl = nullptr);
ModuleRep cosyzygy(const ModuleRep& m, std::uint64_t seed = 0);
bool is_projective(const ModuleRep& m);

/// nu M = D Hom(M, Lambda).
ModuleRep nakayama_module(const ModuleRep& m);
/// nu of a module map, between nakayama_module(source) and nakayama_module(target).
Mat nakayama_map(const ModuleRep& source, const ModuleRep& target, const Mat& f);

/// Rad P_S / Soc P_S.
ModuleRep heart(AlgebraPtr alg, std::size_t s);

struct ModuleSummand {
  ModuleRep module;
  std::size_t multiplicity = 1;
  std::vector<Mat> inclusions;   // one per copy, columns in m
  std::vector<Mat> projections;  // one per copy, rows on m
  LocalityCert cert;
};

struct DecompositionCert {
  std::vector<ModuleSummand> summands;
  std::size_t total_count() const;
};

DecompositionCert decompose(const ModuleRep& m, std::uint64_t seed = 0);
EndoAlgebra module_endomorphisms(const ModuleRep& m);
bool is_indecomposable(const ModuleRep& m, std::uint64_t seed = 0);
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0);

}  // namespace artri
