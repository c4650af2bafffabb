from __future__ import annotations

import json

import pytest

from qcgoppa.cli import main
from qcgoppa.gf2e import default_field


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enum_quadratics(capsys):
    code, out, _ = run(capsys, "enum", "--field", "3:b", "--matrix", "[[1,0],[1,1]]", "--deg", "2")
    assert code == 0
    polys = [line.split("\t")[0] for line in out.splitlines()]
    assert len(polys) == 4 and "x^2 + x + 1" in polys


def test_enum_binary_degree_ten_json(capsys):
    code, out, _ = run(capsys, "--json", "enum", "--field", "1:2", "--matrix", "[[1,0],[1,1]]", "--deg", "10")
    assert code == 0
    data = json.loads(out)
    assert sorted(d["poly"] for d in data) == sorted([
        "x^10 + x^8 + x^7 + x^6 + x^2 + x + 1",
        "x^10 + x^9 + x^8 + x^7 + x^2 + x + 1",
        "x^10 + x^9 + x^5 + x^4 + x^2 + x + 1",
    ])
    assert {d["stratum"] for d in data} == {5}


def test_enum_without_matrix_is_precondition(capsys):
    code, _, err = run(capsys, "enum", "--deg", "7")
    assert code == 2 and "no closed-form" in err


def test_enum_order_five_via_factoring(capsys):
    from qcgoppa.projline import Mobius, format_matrix, mobius_order

    F = default_field(4)
    A = next(Mobius(a, b, d, True) for a in F.elements() for b in F.elements() for d in F.elements()
             if a * d + b and mobius_order(Mobius(a, b, d, True)) == 5)
    code, out, _ = run(capsys, "enum", "--field", "f16", "--matrix", format_matrix(A), "--deg", "5")
    assert code == 0 and out.strip()
    assert all("case=frobenius-factor" in line for line in out.splitlines())


def test_build_example_cubic_extended(capsys):
    code, out, _ = run(capsys, "build", "--field", "f64", "--matrix", "[[1,0],[1,g^21]]",
                       "--goppa", "x^3 + g^28*x^2 + g^7*x + g^49", "--support", "orbits:all",
                       "--no-min-distance")
    assert code == 0
    rep = json.loads(out)
    assert rep["length"] == 63 and rep["qc"] == {"l": 3, "tau": 21}
    assert rep["automorphism_verified"] and rep["variant"] == "extended"


def test_build_unit_group(capsys, tmp_path):
    K = default_field(10)
    w = K.power((K.size - 1) // 31)
    m = f"[[g^{w.log()},1],[1,g^{w.log()}]]"
    dump = tmp_path / "gen.txt"
    code, out, _ = run(capsys, "build", "--field", "f1024", "--matrix", m, "--goppa", "x^2 + g^459*x + g^321",
                       "--support", "unit-group:33", "--dump-generator", str(dump))
    assert code == 0
    rep = json.loads(out)
    assert rep["length"] == 32 and rep["qc"] == {"l": 2, "tau": 16} and rep["automorphism_verified"]
    rows = dump.read_text().split()
    assert len(rows) == rep["dimension"] and all(len(r) == 32 for r in rows)


def test_build_root_in_support_exit_3(capsys):
    code, _, err = run(capsys, "build", "--field", "f8", "--goppa", "x + g", "--support", "explicit:0,1,g")
    assert code == 3 and "g" in err


def test_build_explicit_goppa_variant(capsys):
    code, out, _ = run(capsys, "build", "--field", "f16", "--goppa", "x^2 + x + g^3",
                       "--support", "explicit:0,1,g,g^2,g^4,g^8", "--variant", "goppa")
    assert code == 0
    assert json.loads(out)["variant"] == "goppa"


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "ex3_10")
    assert code == 0 and "ex3_10: PASS" in out
    code, out, _ = run(capsys, "verify", "ex4_8")
    assert code == 0 and "structural" in out
    code, _, err = run(capsys, "verify", "ex9_9")
    assert code == 2


def test_verify_strict_json(capsys):
    code, out, _ = run(capsys, "--json", "--strict", "verify", "ex4_9")
    assert code == 0
    (res,) = json.loads(out)
    assert res["match_mode"] == "bit_exact" and res["passed"]
    assert any(c["status"] == "NOTE" for c in res["checks"])


def test_orbits_and_counts(capsys):
    code, out, _ = run(capsys, "orbits", "--field", "f64", "--matrix", "[[1,0],[1,g^21]]")
    assert code == 0 and out.startswith("order 3, 23 orbits")
    code, out, _ = run(capsys, "nl-count", "--field", "f32", "--order", "3")
    assert code == 0 and out.strip() == str(32 * 31)
    code, _, err = run(capsys, "nl-count", "--field", "f32", "--order", "3", "--family", "b_zero")
    assert code == 2 and "CubeRootAbsent" in err


def test_factor_h_outputs(capsys):
    code, out, _ = run(capsys, "--json", "factor-h", "--field", "f8", "--matrix", "[[1,0],[1,1]]")
    assert code == 0
    data = json.loads(out)
    assert data["h"] == "x^9 + x^8 + x" and data["degree_sum"] == 9 and data["product_verified"]
    code, out, _ = run(capsys, "factor-h", "--field", "f16", "--matrix", "[[1,0],[1,g^5]]", "--direction", "d_side")
    assert code == 0 and "product verified: True" in out


def test_modulus_override_is_scoped(capsys):
    code, out, _ = run(capsys, "--json", "nl-count", "--field", "f8", "--modulus", "3:d", "--order", "2")
    assert code == 0 and json.loads(out)["field"].endswith("d")
    assert default_field(3).modulus == 0b1011


def test_output_is_deterministic_across_threads(capsys):
    argv = ["enum", "--field", "f16", "--matrix", "[[1,0],[1,g^5]]", "--deg", "3"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, "--threads", "4", *argv)
    assert first == second and len(first.splitlines()) == 10


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["build"])
    capsys.readouterr()
    code, _, _ = run(capsys, "orbits", "--field", "f8", "--matrix", "[[1,1],[1,1]]")
    assert code == 2
    code, _, _ = run(capsys, "--field", "f9x", "nl-count", "--order", "2")
    assert code == 2
