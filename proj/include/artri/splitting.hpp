#pragma once

#include <optional>
#include <random>
#include <vector>

#include "artri/matrix.hpp"

namespace artri {

/// An endomorphism algebra presented by a basis acting on V, together with
/// the induced action of the same basis on top(V) = V / Rad V. Spectra are
/// read off the tops; Fitting splits are taken on V.
struct EndoAlgebra {
  std::vector<Mat> basis;
  std::vector<Mat> tops;
};

/// Evidence that an endomorphism algebra is local: every basis element psi_i
/// has the single eigenvalue lambdas[i], and N = span{psi_i - lambdas[i]} has
/// codimension one with N^k acting as zero on the top (hence N nilpotent).
struct LocalityCert {
  std::vector<Scalar> lambdas;
  std::size_t radical_dim = 0;
  std::size_t nilpotency_index = 0;
};

struct SplitResult {
  bool local = false;
  LocalityCert cert;
  /// When not local: (phi - lambda)^dim V for some phi in the algebra, whose
  /// kernel and image are complementary nonzero invariant subspaces.
  Mat fitting;
};

/// Throws SplitnessViolation after a bounded number of seeded trials when
/// neither a split nor a locality certificate is found.
SplitResult analyze_endomorphisms(const EndoAlgebra& e, std::mt19937_64& rng, int trials = 64);

/// Re-checks a certificate against the algebra.
bool verify_locality(const EndoAlgebra& e, const LocalityCert& cert);

Mat mat_pow(Mat m, std::size_t e);

}  // namespace artri
