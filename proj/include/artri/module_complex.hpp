#pragma once

#include <map>
#include <optional>

#include "artri/homotopy.hpp"
#include "artri/module.hpp"

namespace artri {

/// Bounded complex of arbitrary modules; d_n : C_n -> C_{n-1} as an F_p
/// matrix in column convention. Used where terms need not be projective
/// (nu of a projective presentation over a non-self-injective algebra).
class ModuleComplex {
 public:
  ModuleComplex() = default;
  ModuleComplex(AlgebraPtr alg, std::map<int, ModuleRep> terms, std::map<int, Mat> diffs);

  const AlgebraPtr& alg() const noexcept { return alg_; }
  int lo() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
  int hi() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  ModuleRep term(int n) const;
  Mat diff(int n) const;
  const std::map<int, ModuleRep>& terms() const noexcept { return terms_; }
  void validate() const;

 private:
  AlgebraPtr alg_;
  std::map<int, ModuleRep> terms_;
  std::map<int, Mat> diffs_;
};

struct ModChainMap {
  ModuleComplex source, target;
  std::map<int, Mat> maps;
  Mat at(int n) const;
  void validate() const;
};

ModuleComplex to_module_complex(const PerfectComplex& c);
ModChainMap to_module_map(const ChainMap& f);
ModuleComplex shift(const ModuleComplex& c, int j);
/// Term-wise Nakayama functor D Hom(-, A).
ModuleComplex nakayama(const ModuleComplex& c);
ModChainMap compose(const ModChainMap& f, const ModChainMap& g);  // first f, then g

/// Y = cone(w)[-1] with Y_n = A_n (+) B_{n+1}, and the maps B[-1] -> Y -> A.
struct ConeTriangle {
  ModuleComplex y;
  ModChainMap from_x;  // B[-1] -> Y
  ModChainMap to_z;    // Y -> A
};
ConeTriangle cocone(const ModChainMap& w);

struct HomologyData {
  Subquotient sq;  // ker d_n / im d_{n+1} inside C_n
};
HomologyData homology_data(const ModuleComplex& c, int n);
/// Induced map H_n(source) -> H_n(target), matrix in the subquotient bases.
Mat homology_map(const ModChainMap& f, int n, const HomologyData& hs, const HomologyData& ht);

/// Hom in the homotopy category of module complexes.
class ModuleHomK {
 public:
  ModuleHomK(const ModuleComplex& c, const ModuleComplex& d);
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<ModChainMap>& basis() const noexcept { return basis_; }
  std::vector<ModChainMap> cycle_basis() const;
  std::vector<Scalar> coords(const ModChainMap& f) const;
  bool is_null_homotopic(const ModChainMap& f) const;

 private:
  std::vector<Scalar> encode(const ModChainMap& f) const;
  ModChainMap decode(std::span<const Scalar> v) const;

  ModuleComplex c_, d_;
  int lo_ = 0, hi_ = -1;
  std::size_t ambient_ = 0, b_dim_ = 0;
  Mat z_rows_;
  std::optional<Coordinates> quot_;
  std::vector<ModChainMap> basis_;
};

/// Strict endomorphisms, flattened over all degrees, with their action on the tops.
EndoAlgebra module_complex_endomorphisms(const ModuleComplex& c);

}  // namespace artri
