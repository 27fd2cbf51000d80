#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "artri/matrix.hpp"

namespace artri {

/// Polynomial over F_p, coefficients from degree 0 upward, no trailing zeros.
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly a);
Poly poly_mul(const Poly& a, const Poly& b, const Fp& f);
Poly poly_sub(const Poly& a, const Poly& b, const Fp& f);
/// Remainder of a modulo b (b nonzero).
Poly poly_mod(const Poly& a, const Poly& b, const Fp& f);
Poly poly_div(const Poly& a, const Poly& b, const Fp& f);
Poly poly_gcd(Poly a, Poly b, const Fp& f);
Scalar poly_eval(const Poly& a, Scalar x, const Fp& f);

/// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const Mat& m);

/// Distinct roots in F_p (sorted). Brute force for small p, Cantor-Zassenhaus
/// splitting otherwise; the rng only drives the splitting and never changes the answer.
std::vector<Scalar> poly_roots(const Poly& a, const Fp& f, std::mt19937_64& rng);

/// Multiplicity of the root r in a.
std::size_t root_multiplicity(const Poly& a, Scalar r, const Fp& f);

}  // namespace artri
