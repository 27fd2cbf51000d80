#pragma once

#include <cstdint>

#include "artri/error.hpp"

namespace artri {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p, 2 <= p <= 2^31 - 1.
class Fp {
 public:
  Fp() = default;
  explicit Fp(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;
  /// Reduce an arbitrary signed integer into [0, p).
  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  /// Symmetric lift into (-p/2, p/2], used when printing.
  std::int64_t lift(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const Fp& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_ = 2;
};

}  // namespace artri
