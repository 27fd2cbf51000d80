import os
from pathlib import Path

import pytest

import artri

FIX = Path(os.environ.get("ARTRI_FIXTURES", artri.default_fixture_dir()))


@pytest.fixture(scope="module")
def a5():
    return artri.load_algebra(str(FIX / "a5.alg"))


def test_algebra_properties(a5):
    assert a5.name == "a5"
    assert a5.loewy_length == 5
    assert a5.is_symmetric


def test_ar_sequence_middle_term(a5):
    m = artri.load_module(str(FIX / "a5_V2.mod"), a5)
    s = artri.ar_sequence(m)
    assert s.exact and not s.split
    assert s.middle.summand_dims() == [1, 3]
    assert artri.is_isomorphic(s.tau_m, m)


def test_emitted_modules_round_trip(a5):
    s = artri.ar_sequence(artri.load_module(str(FIX / "a5_V3.mod"), a5))
    again = artri.parse_module(s.middle.dump(), a5)
    assert artri.is_isomorphic(again, s.middle)


def test_errors_carry_codes(a5):
    with pytest.raises(artri.ArtriError) as info:
        artri.ar_sequence(artri.projective_module(a5, 0))
    assert info.value.code == "ProjectiveInput"
    with pytest.raises(artri.ArtriError) as info:
        artri.load_algebra(str(FIX / "missing.alg"))
    assert info.value.code == "ParseError"


def test_rim_and_pairing():
    a3 = artri.load_algebra(str(FIX / "a3.alg"))
    c0 = artri.load_complex(str(FIX / "a3_C0.cx"), a3)
    c1 = artri.load_complex(str(FIX / "a3_C1.cx"), a3)
    hs = artri.load_complex(str(FIX / "a3_HS.cx"), a3)
    assert artri.is_on_rim(c0)
    assert artri.distance_from_rim(hs) == 2
    assert hs.homology_dims() == [2, 1, 2]
    assert artri.pairing_t(c0, c1) == "2*t^-1 + 2"
    assert artri.stabilization_module(c0).dim == 1


def test_big_homology_stabilization_grows():
    a3 = artri.load_algebra(str(FIX / "a3.alg"))
    dims = [artri.stabilization_module(artri.big_homology_complex(a3, 0, r)).dim for r in (1, 2, 3)]
    assert dims == [3, 4, 5]


def test_acceptance_all_pass():
    results = artri.run_acceptance(str(FIX))
    assert [r.id for r in results] == list(range(1, 10))
    assert all(r.passed for r in results), [(r.id, r.detail) for r in results if not r.passed]
