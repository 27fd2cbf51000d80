#include "artri/forms.hpp"

#include <algorithm>

namespace artri {

LaurentValue::LaurentValue(long long c) { add_term(0, c); }

LaurentValue LaurentValue::monomial(int k, long long c) {
  LaurentValue v;
  v.add_term(k, c);
  return v;
}

void LaurentValue::add_term(int k, long long c) {
  if (c == 0) return;
  long long& x = coeffs_[k];
  x += c;
  if (x == 0) coeffs_.erase(k);
}

long long LaurentValue::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? 0 : it->second;
}

LaurentValue LaurentValue::bar() const {
  LaurentValue v;
  for (auto [k, c] : coeffs_) v.add_term(-k, c);
  return v;
}

LaurentValue LaurentValue::shifted(int s) const {
  LaurentValue v;
  for (auto [k, c] : coeffs_) v.add_term(k + s, c);
  return v;
}

LaurentValue& LaurentValue::operator+=(const LaurentValue& o) {
  for (auto [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

LaurentValue operator-(const LaurentValue& a, const LaurentValue& b) {
  LaurentValue v = a;
  for (auto [k, c] : b.coeffs_) v.add_term(k, -c);
  return v;
}

LaurentValue operator*(const LaurentValue& a, const LaurentValue& b) {
  LaurentValue v;
  for (auto [i, x] : a.coeffs_)
    for (auto [j, y] : b.coeffs_) v.add_term(i + j, x * y);
  return v;
}

// Terms in increasing exponent: "2*t^-1 + 2", "-t + 3*t^2".
std::string LaurentValue::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto [k, c] : coeffs_) {
    long long mag = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (k == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return s;
}

RationalValue::RationalValue(LaurentValue num, LaurentValue den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational value with zero denominator");
}

std::string RationalValue::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

RationalValue operator+(const RationalValue& a, const RationalValue& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalValue operator-(const RationalValue& a, const RationalValue& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalValue operator*(const RationalValue& a, const RationalValue& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

bool operator==(const RationalValue& a, const RationalValue& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

void FormalSum::add(const PerfectComplex& c, long long k) {
  if (k == 0) return;
  PerfectComplex m = minimize(c);
  if (m.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (is_isomorphic(it->first, m)) {
      it->second += k;
      if (it->second == 0) terms_.erase(it);
      return;
    }
  terms_.emplace_back(m, k);
}

long long FormalSum::coefficient_sum() const {
  long long s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

long long pairing(const FormalSum& a, const FormalSum& b) {
  long long s = 0;
  for (const auto& [c, x] : a.terms())
    for (const auto& [d, y] : b.terms()) {
      require_same_algebra(c.algebra(), d.algebra());
      s += x * y * static_cast<long long>(hom_dim(c, d));
    }
  return s;
}

LaurentValue pairing_t(const PerfectComplex& c0, const PerfectComplex& d0) {
  if (c0.is_zero() || d0.is_zero()) return {};
  require_same_algebra(c0.algebra(), d0.algebra());
  PerfectComplex c = minimize(c0), d = minimize(d0);
  LaurentValue v;
  if (c.is_zero() || d.is_zero()) return v;
  // Hom(c, d[i]) needs the degree spans of c and d[i] to overlap
  for (int i = c.lo() - d.hi(); i <= c.hi() - d.lo(); ++i)
    v += LaurentValue::monomial(i, static_cast<long long>(hom_dim(c, shift(d, i))));
  return v;
}

LaurentValue pairing_t(const PerfectComplex& c, const FormalSum& d) {
  LaurentValue v;
  for (const auto& [x, k] : d.terms()) v += pairing_t(c, x) * LaurentValue(k);
  return v;
}

FormalSum hat_element(const ARTriangle& tri, std::uint64_t seed) {
  FormalSum s(tri.z);
  s.add(tri.x);
  for (const auto& part : decompose_complex(tri.y, seed))
    s.add(part.complex, -static_cast<long long>(part.multiplicity));
  return s;
}

bool hermitian_check(const PerfectComplex& c, const PerfectComplex& d) {
  if (!c.algebra().is_symmetric()) throw Error(ErrorCode::NotSymmetric, "'" + c.algebra().name() + "' is not symmetric");
  return pairing_t(c, d) == pairing_t(d, c).bar();
}

LaurentValue dual_check(const ARTriangle& tri, const PerfectComplex& m, std::uint64_t seed) {
  return pairing_t(m, hat_element(tri, seed));
}

LaurentValue sigma_poly(std::size_t r) {
  LaurentValue v;
  for (std::size_t k = 0; k <= r; ++k) v += LaurentValue::monomial(static_cast<int>(k));
  return v;
}

RationalValue predicted_pairing(std::size_t m, std::size_t n, const RationalValue& base, bool same_component) {
  RationalValue factor(sigma_poly(m) * sigma_poly(n).bar());
  if (!same_component) return factor * base;
  const int mu = static_cast<int>(std::max(m, n));
  LaurentValue one(1);
  RationalValue corr((one + LaurentValue::monomial(1)) * (one - LaurentValue::monomial(mu)),
                     one - LaurentValue::monomial(mu + 1));
  return factor * (base - corr);
}

}  // namespace artri
