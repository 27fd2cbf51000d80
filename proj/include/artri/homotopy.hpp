#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "artri/algebra.hpp"
#include "artri/linalg.hpp"
#include "artri/module.hpp"
#include "artri/splitting.hpp"

namespace artri {

using Types = std::vector<std::size_t>;

/// A map between sums of indecomposable projectives, written as a matrix of
/// algebra elements acting by right multiplication on row tuples:
/// x in (+)_a A e_{src[a]} goes to x * M in (+)_b A e_{dst[b]}, so entry
/// (a, b) lies in e_{src[a]} A e_{dst[b]} and "first M then N" is M * N.
struct ProjMat {
  Types src, dst;
  std::vector<Elem> entries;  // row-major, src.size() x dst.size()

  static ProjMat zero(const Algebra& alg, const Types& src, const Types& dst);
  static ProjMat identity(const Algebra& alg, const Types& t);

  Elem& at(std::size_t a, std::size_t b) { return entries[a * dst.size() + b]; }
  const Elem& at(std::size_t a, std::size_t b) const { return entries[a * dst.size() + b]; }
  bool empty() const noexcept { return src.empty() || dst.empty(); }
};

ProjMat pm_mul(const Algebra& alg, const ProjMat& a, const ProjMat& b);
ProjMat pm_add(const Algebra& alg, const ProjMat& a, const ProjMat& b);
ProjMat pm_sub(const Algebra& alg, const ProjMat& a, const ProjMat& b);
ProjMat pm_scale(const Algebra& alg, const ProjMat& a, Scalar s);
bool pm_is_zero(const Algebra& alg, const ProjMat& a);
bool pm_in_radical(const Algebra& alg, const ProjMat& a);
/// Block-diagonal sum.
ProjMat pm_direct_sum(const Algebra& alg, const ProjMat& a, const ProjMat& b);
/// The same map as an F_p matrix (column convention) in the bases of projective_sum.
Mat flatten(const Algebra& alg, const ProjMat& m);
/// Induced map on tops: entry (b, a) is the e-coefficient of m(a, b) when the types agree.
Mat top_matrix(const Algebra& alg, const ProjMat& m);

/// Bounded complex of finitely generated projectives, homological grading:
/// d_n : C_n -> C_{n-1}.
class PerfectComplex {
 public:
  PerfectComplex() = default;
  explicit PerfectComplex(AlgebraPtr alg) : alg_(std::move(alg)) {}
  PerfectComplex(AlgebraPtr alg, std::map<int, Types> terms, std::map<int, ProjMat> diffs);

  /// Single projective term in degree n.
  static PerfectComplex stalk(AlgebraPtr alg, const Types& t, int n = 0);

  const AlgebraPtr& alg() const noexcept { return alg_; }
  const Algebra& algebra() const noexcept { return *alg_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Lowest and highest degree with a nonzero term (0, -1 for the zero complex).
  int lo() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
  int hi() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  const Types& term(int n) const;
  ProjMat diff(int n) const;
  const std::map<int, Types>& terms() const noexcept { return terms_; }
  std::size_t term_dim(int n) const;
  /// Total number of indecomposable projective summands over all degrees.
  std::size_t rank() const;

  /// Checks entry corners and d_{n} d_{n-1} = 0; throws InvalidComplex.
  void validate() const;

 private:
  AlgebraPtr alg_;
  std::map<int, Types> terms_;
  std::map<int, ProjMat> diffs_;
};

bool operator==(const PerfectComplex& a, const PerfectComplex& b);

/// Degree-zero chain map; degrees missing from `maps` are zero.
struct ChainMap {
  PerfectComplex source, target;
  std::map<int, ProjMat> maps;

  ProjMat at(int n) const;
  void validate() const;
};

ChainMap identity_map(const PerfectComplex& c);
ChainMap compose(const ChainMap& f, const ChainMap& g);  // first f, then g
ChainMap cm_add(const ChainMap& f, const ChainMap& g);
ChainMap cm_scale(const ChainMap& f, Scalar s);

PerfectComplex shift(const PerfectComplex& c, int j);
ChainMap shift(const ChainMap& f, int j);
PerfectComplex direct_sum(const PerfectComplex& a, const PerfectComplex& b);
PerfectComplex nu(const PerfectComplex& c);
PerfectComplex nu_inv(const PerfectComplex& c);
PerfectComplex nu_power(const PerfectComplex& c, int j);
ChainMap nu(const ChainMap& f);
PerfectComplex cone(const ChainMap& f);

struct Minimized {
  PerfectComplex complex;
  ChainMap proj;  // original -> minimal
  ChainMap incl;  // minimal -> original
};

Minimized minimize_with_maps(const PerfectComplex& c);
PerfectComplex minimize(const PerfectComplex& c);
bool is_minimal(const PerfectComplex& c);
/// Number of nonzero terms of the minimal model.
std::size_t length(const PerfectComplex& c);

ModuleRep term_module(const PerfectComplex& c, int n);
Mat flat_diff(const PerfectComplex& c, int n);
ModuleRep homology(const PerfectComplex& c, int n);

/// Hom in the homotopy category, as the quotient of chain maps by null-homotopic maps.
class HomSpace {
 public:
  HomSpace(const PerfectComplex& c, const PerfectComplex& d);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t cycles_dim() const noexcept { return z_dim_; }
  std::size_t boundaries_dim() const noexcept { return b_dim_; }
  /// Chain maps representing a basis of the quotient.
  const std::vector<ChainMap>& basis() const noexcept { return basis_; }
  /// Chain maps spanning all (strict) chain maps.
  std::vector<ChainMap> cycle_basis() const;
  /// Coordinates of the class of f in basis(); throws InvalidChainMap when f is no chain map.
  std::vector<Scalar> coords(const ChainMap& f) const;
  bool is_null_homotopic(const ChainMap& f) const;
  ChainMap combination(const std::vector<Scalar>& c) const;

 private:
  std::vector<Scalar> encode(const ChainMap& f) const;
  ChainMap decode(std::span<const Scalar> v) const;

  PerfectComplex c_, d_;
  int lo_ = 0, hi_ = -1;
  std::size_t z_dim_ = 0, b_dim_ = 0, ambient_ = 0;
  Mat z_rows_;
  std::optional<Coordinates> quot_;
  std::vector<ChainMap> basis_;
};

std::size_t hom_dim(const PerfectComplex& c, const PerfectComplex& d);

/// Strict endomorphisms of a complex, acting on the flattened total space,
/// together with their action on the tops.
EndoAlgebra complex_endomorphisms(const PerfectComplex& c);

struct ComplexSummand {
  PerfectComplex complex;
  std::size_t multiplicity = 1;
  std::vector<ChainMap> inclusions;
  LocalityCert cert;
};

/// Decomposes the minimal model of c into indecomposables.
std::vector<ComplexSummand> decompose_complex(const PerfectComplex& c, std::uint64_t seed = 0);
bool is_indecomposable(const PerfectComplex& c, std::uint64_t seed = 0);
bool is_isomorphic(const PerfectComplex& c, const PerfectComplex& d, std::uint64_t seed = 0);

/// P_n -> ... -> P_0 in degrees n..0, the start of a minimal projective resolution.
PerfectComplex from_resolution(const ModuleRep& m, std::size_t n);

}  // namespace artri
