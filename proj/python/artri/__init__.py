"""Auslander-Reiten computations for perfect complexes over finite-dimensional algebras."""

from ._core import (
    Algebra,
    ARSequence,
    ARTriangle,
    ArtriError,
    Complex,
    CriterionResult,
    Module,
    ar_sequence,
    ar_triangle_ending_at,
    big_homology_complex,
    default_fixture_dir,
    distance_from_rim,
    e_complex,
    from_resolution,
    hom_dim,
    is_isomorphic,
    is_on_rim,
    is_rigid,
    load_algebra,
    load_complex,
    load_module,
    pairing,
    pairing_t,
    parse_algebra,
    parse_complex,
    parse_module,
    projective_chain_complex,
    projective_module,
    run_acceptance,
    simple_module,
    stabilization_module,
)

__all__ = [name for name in dir() if not name.startswith("_")]
