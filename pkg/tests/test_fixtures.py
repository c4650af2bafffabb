from __future__ import annotations

import pytest

from qcgoppa.fixtures import (
    EX3_10_POLYS,
    EX3_11_POLYS,
    EX3_12_A2_FROB_POLYS,
    EX3_12_A_FROB_POLYS,
    EX4_5_ORBITS,
    EX4_5_POLYS,
    EX4_6_ORBITS,
    EX4_6_POLYS,
    FIXTURES,
    run_fixture,
)


@pytest.mark.parametrize("fid", list(FIXTURES))
@pytest.mark.parametrize("strict", [False, True])
def test_fixture_passes(fid, strict):
    res = run_fixture(fid, strict)
    failed = [c for c in res.checks if c.status == "FAIL"]
    assert not failed, failed
    assert res.checks


def test_transcribed_data_shapes():
    assert len(EX3_10_POLYS) == 4
    assert len(EX3_11_POLYS) == 3
    assert len(EX3_12_A_FROB_POLYS) == len(EX3_12_A2_FROB_POLYS) == 5
    assert len(EX4_5_POLYS) == 21 and len(EX4_5_ORBITS) == 23
    assert len(EX4_6_POLYS) == 9 and len(EX4_6_ORBITS) == 11


def test_match_modes():
    assert {fid: mode for fid, (mode, _) in FIXTURES.items()} == {
        "ex3_10": "bit_exact", "ex3_11": "bit_exact", "ex3_12": "bit_exact",
        "ex4_5": "bit_exact", "ex4_6": "bit_exact", "ex4_8": "structural", "ex4_9": "structural",
    }
    assert run_fixture("ex4_8", strict=True).match_mode == "bit_exact"


def test_strict_unit_group_outcomes():
    r8 = run_fixture("ex4_8", strict=True)
    assert any(c.name == "strict: orbit pairs coefficient-exact" and c.status == "PASS" for c in r8.checks)
    r9 = run_fixture("ex4_9", strict=True)
    notes = [c for c in r9.checks if c.status == "NOTE"]
    assert len(notes) == 1 and "printed only" in notes[0].detail
    assert any(c.name.startswith("strict: x^2 + w^800*x + 1") and c.status == "PASS" for c in r9.checks)


def test_unknown_fixture():
    with pytest.raises(KeyError):
        run_fixture("ex5_1")
