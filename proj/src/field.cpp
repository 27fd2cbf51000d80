#include "artri/field.hpp"

#include <string>

namespace artri {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::uint32_t p) : p_(p) {
  if (p > 2147483647u || !is_prime(p))
    throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Scalar Fp::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar r = 1 % p_;
  Scalar b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Scalar Fp::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorCode::DimensionMismatch, "inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t);
}

}  // namespace artri
