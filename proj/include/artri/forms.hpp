#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artri/artheory.hpp"

namespace artri {

/// Element of Z[t, t^-1]; zero coefficients are never stored.
class LaurentValue {
 public:
  LaurentValue() = default;
  LaurentValue(long long c);  // NOLINT: constants convert implicitly
  static LaurentValue monomial(int k, long long c = 1);

  const std::map<int, long long>& coeffs() const noexcept { return coeffs_; }
  long long coeff(int k) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// t -> t^-1
  LaurentValue bar() const;
  /// Multiplication by t^k.
  LaurentValue shifted(int k) const;
  std::string to_string() const;

  LaurentValue& operator+=(const LaurentValue& o);
  friend LaurentValue operator+(LaurentValue a, const LaurentValue& b) { return a += b; }
  friend LaurentValue operator-(const LaurentValue& a, const LaurentValue& b);
  friend LaurentValue operator*(const LaurentValue& a, const LaurentValue& b);
  friend bool operator==(const LaurentValue& a, const LaurentValue& b) = default;

 private:
  void add_term(int k, long long c);
  std::map<int, long long> coeffs_;
};

/// num / den in Q(t), kept unreduced; equality by cross-multiplication.
class RationalValue {
 public:
  RationalValue(LaurentValue num = {}, LaurentValue den = 1);
  const LaurentValue& num() const noexcept { return num_; }
  const LaurentValue& den() const noexcept { return den_; }
  RationalValue bar() const { return {num_.bar(), den_.bar()}; }
  std::string to_string() const;

  friend RationalValue operator+(const RationalValue& a, const RationalValue& b);
  friend RationalValue operator-(const RationalValue& a, const RationalValue& b);
  friend RationalValue operator*(const RationalValue& a, const RationalValue& b);
  friend bool operator==(const RationalValue& a, const RationalValue& b);

 private:
  LaurentValue num_, den_;
};

/// Integer combination of isomorphism classes of complexes.
class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(const PerfectComplex& c, long long k = 1) { add(c, k); }
  /// Merges with an existing isomorphic term; drops terms whose coefficient becomes 0.
  void add(const PerfectComplex& c, long long k = 1);
  const std::vector<std::pair<PerfectComplex, long long>>& terms() const noexcept { return terms_; }
  long long coefficient_sum() const;

 private:
  std::vector<std::pair<PerfectComplex, long long>> terms_;
};

long long pairing(const FormalSum& a, const FormalSum& b);
/// sum_i t^i dim Hom(c, d[i])
LaurentValue pairing_t(const PerfectComplex& c, const PerfectComplex& d);
LaurentValue pairing_t(const PerfectComplex& c, const FormalSum& d);

/// [Z] + [X] - [Y_1] - ... over the indecomposable summands of Y.
FormalSum hat_element(const ARTriangle& tri, std::uint64_t seed = 0);
bool hermitian_check(const PerfectComplex& c, const PerfectComplex& d);
/// <m, Z^>^t: (1 + t) for m = Z, 0 off the shift orbit of Z.
LaurentValue dual_check(const ARTriangle& tri, const PerfectComplex& m, std::uint64_t seed = 0);

/// sigma_r = 1 + t + ... + t^r
LaurentValue sigma_poly(std::size_t r);
RationalValue predicted_pairing(std::size_t m, std::size_t n, const RationalValue& base, bool same_component);

}  // namespace artri
