#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "artri/homotopy.hpp"
#include "artri/module.hpp"

namespace artri {

/// Evidence for the choice of the connecting map w : z -> nu z.
struct SocleCertificate {
  std::size_t hom_dim = 0;      // dim Hom_K(z, nu z)
  std::size_t socle_dim = 0;    // dim of {w : Rad End(z) w = 0 mod homotopy}
  std::vector<Scalar> coords;   // w in the basis of Hom_K(z, nu z)
  bool right_annihilated = false;
  LocalityCert end_cert;        // End(z) is local
};

struct ARTriangle {
  PerfectComplex x, y, z;
  ChainMap f;  // x -> y
  ChainMap g;  // y -> z
  ChainMap w;  // z -> nu z, with x = nu z [-1]
  SocleCertificate cert;
};

/// z is replaced by its minimal model; y is minimal.
ARTriangle ar_triangle_ending_at(const PerfectComplex& z, std::uint64_t seed = 0);

struct ARSequence {
  ModuleRep tau_m, middle, m;
  ModHom inject, surject;
  bool exact = false;
  bool split = true;
};

ARSequence ar_sequence(const ModuleRep& m, std::uint64_t seed = 0);
PerfectComplex e_complex(const ModuleRep& m, std::uint64_t seed = 0);

bool is_on_rim(const PerfectComplex& c, std::uint64_t seed = 0);

struct RimWalk {
  std::size_t distance = 0;
  std::vector<PerfectComplex> path;  // c, ..., rim representative
};
RimWalk walk_to_rim(const PerfectComplex& c, std::uint64_t seed = 0);
std::size_t distance_from_rim(const PerfectComplex& c, std::uint64_t seed = 0);

/// nu^{-n} P_S -> ... -> nu^{-1} P_S -> P_S in degrees n..0, top to socle.
PerfectComplex projective_chain_complex(AlgebraPtr alg, std::size_t s, std::size_t n);
/// P_{Rad P_S} -> P_S -> nu P_S -> ... -> nu^r P_S in degrees 1..-r.
PerfectComplex big_homology_complex(AlgebraPtr alg, std::size_t s, std::size_t r);

/// C_0 = c on the rim, C_{n+1} the new summand in the middle of the triangle
/// ending at nu^{-1} C_n [1].
std::vector<PerfectComplex> rim_ray(const PerfectComplex& c, std::size_t depth, std::uint64_t seed = 0);

struct MeshCheck {
  int n = 0, j = 0;
  bool flagged = false;  // one of the two meshes at a projective
  bool exact = false;    // dims add
};

struct HomologyDiagram {
  std::size_t depth = 0;
  int jlo = 0, jhi = -1;
  std::vector<PerfectComplex> ray;
  /// rows[n][j - jlo] = H_0(nu^j C_n [-j]) = nu^j H_j(C_n).
  std::vector<std::vector<ModuleRep>> rows;
  std::vector<MeshCheck> meshes;
  std::optional<int> projective_degree;  // set when c = P[k]
  bool wing_checked = false;
  bool wing_ok = true;

  const ModuleRep& at(std::size_t n, int j) const { return rows[n][static_cast<std::size_t>(j - jlo)]; }
  bool meshes_ok() const;
};

/// window = 0 means 2 * depth + 1 columns centered on degree 0.
HomologyDiagram homology_diagram(const PerfectComplex& c, std::size_t depth, std::size_t window = 0,
                                 std::uint64_t seed = 0);
ModuleRep stabilization_module(const PerfectComplex& c, std::uint64_t seed = 0);
bool is_rigid(const PerfectComplex& c, std::uint64_t seed = 0);

}  // namespace artri
