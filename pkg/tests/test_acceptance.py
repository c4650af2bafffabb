"""Acceptance criteria, one test each, timed against its wall-clock budget.

Each test records a PASS/FAIL line that the conftest hook prints in the
terminal summary.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager

import pytest

from qcgoppa.codes import GoppaSpec, SupportSpec, build_code, same_row_space, support_transform
from qcgoppa.errors import RootInSupport
from qcgoppa.fixtures import (
    EX3_10_POLYS,
    EX3_11_POLYS,
    EX3_12_A2_FROB_K,
    EX3_12_A2_FROB_POLYS,
    EX3_12_A_FROB_K,
    EX3_12_A_FROB_POLYS,
    EX4_5_ORBITS,
    EX4_5_POLYS,
    EX4_6_POLYS,
    REGRESSION,
    fixture_code_specs,
    run_fixture,
)
from qcgoppa.gf2e import build_tower, default_field, solve_artin_schreier
from qcgoppa.invariant import (
    classify_cubic,
    enum_order2_degree_2s,
    enum_order3_degree_3s,
    factor_h,
    g_k_order2,
    g_k_order3,
    h_polynomial,
    stratum_counts_order2,
    t_set_order2,
    t_sets_order3,
    verify_product,
)
from qcgoppa.invariant import _frobenius_classes, _in_exact_stratum, _t_set_order2_ints
from qcgoppa.polyring import Poly, gcd, is_irreducible, parse_poly, roots_in_ctx
from qcgoppa.projline import INF, Mobius, enum_order_l, mobius_order, orbits, parse_point, projective_line

RESULTS: list[tuple[int, str, str, float, float]] = []


@contextmanager
def criterion(num: int, name: str, limit: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS.append((num, name, "FAIL", time.perf_counter() - start, limit))
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    RESULTS.append((num, name, "PASS" if ok else "FAIL", elapsed, limit))
    assert ok, f"criterion {num} took {elapsed:.2f} s, limit {limit} s"


def _polys(ctx, texts):
    return sorted((parse_poly(ctx, t) for t in texts), key=Poly.sort_key)


def _fixture_ok(fid, strict=False):
    res = run_fixture(fid, strict)
    failed = [c for c in res.checks if c.status == "FAIL"]
    assert not failed, failed
    return res


def test_criterion_01_quadratics():
    with criterion(1, "ex3_10: quadratics bit-exact", 1.0):
        F = default_field(3)
        assert F.modulus == 0b1011
        got = enum_order2_degree_2s(F, F.one, F.zero, 1)
        assert got == _polys(F, EX3_10_POLYS)
        _fixture_ok("ex3_10")


def test_criterion_02_degree_ten():
    with criterion(2, "ex3_11: degree-10 polynomials and k-set", 1.0):
        F = default_field(1)
        assert enum_order2_degree_2s(F, F.one, F.zero, 5) == _polys(F, EX3_11_POLYS)
        assert stratum_counts_order2(F, F.one, F.zero, 5)[5] == 15
        sup, _ = build_tower(F, 5)
        ks = {k for k in _t_set_order2_ints(sup, 1, 0, 5) if _in_exact_stratum(sup, k, 5, 1)}
        assert sorted(map(len, _frobenius_classes(sup, ks, 1))) == [5, 5, 5]
        _fixture_ok("ex3_11")


def test_criterion_03_cubics():
    with criterion(3, "ex3_12: T-sets, cubics and Frobenius split", 1.0):
        F = default_field(4)
        assert F.modulus == 0b10011
        a, d = F.one, F.power(5)
        T1, T2 = t_sets_order3(F, a, d)
        k_a = [parse_point(F, k) for k in EX3_12_A_FROB_K]
        k_a2 = [parse_point(F, k) for k in EX3_12_A2_FROB_K]
        assert set(T1.members) | set(T2.members) == set(k_a + k_a2)
        assert [g_k_order3(a, d, k) for k in k_a] == [parse_poly(F, t) for t in EX3_12_A_FROB_POLYS]
        assert [g_k_order3(a, d, k) for k in k_a2] == [parse_poly(F, t) for t in EX3_12_A2_FROB_POLYS]
        assert all(classify_cubic(a, d, k).frobenius_direction == "A_is_frobenius" for k in k_a)
        assert all(classify_cubic(a, d, k).frobenius_direction == "A2_is_frobenius" for k in k_a2)
        assert enum_order3_degree_3s(F, a, d, 1) == _polys(F, EX3_12_A_FROB_POLYS + EX3_12_A2_FROB_POLYS)
        _fixture_ok("ex3_12")


def test_criterion_04_cubic_codes():
    with criterion(4, "ex4_5: orbits, 21 cubics, codes 63/60", 10.0):
        F = default_field(6)
        assert F.modulus == 0b1011011
        A = Mobius(F.one, F.zero, F.gen**21)
        got = {frozenset(o) for o in orbits(A, projective_line(F))}
        assert got == {frozenset(parse_point(F, p) for p in o) for o in EX4_5_ORBITS}
        assert len(EX4_5_POLYS) == 21
        specs = fixture_code_specs()
        ext = build_code(specs["ex4_5/extended"], min_distance=False)
        assert (ext.length, ext.qc, ext.automorphism_verified) == (63, (3, 21), True)
        sub = build_code(specs["ex4_5/parity_check_subcode"], min_distance=False)
        assert (sub.length, sub.qc, sub.automorphism_verified) == (60, (3, 20), True)
        _fixture_ok("ex4_5")


def test_criterion_05_septic_codes():
    with criterion(5, "ex4_6: orbits, 9 septics, codes 63/56", 10.0):
        F = default_field(6)
        A = Mobius.from_entries(F.gen**9, F.zero, F.one, F.one)
        assert len(orbits(A, projective_line(F))) == 11
        assert len(EX4_6_POLYS) == 9
        specs = fixture_code_specs()
        ext = build_code(specs["ex4_6/extended"], min_distance=False)
        assert (ext.length, ext.qc, ext.automorphism_verified) == (63, (7, 9), True)
        sub = build_code(specs["ex4_6/parity_check_subcode"], min_distance=False)
        assert (sub.length, sub.qc, sub.automorphism_verified) == (56, (7, 8), True)
        _fixture_ok("ex4_6")


def test_criterion_06_unit_groups():
    with criterion(6, "ex4_8/ex4_9: unit-group codes, structural and strict", 20.0):
        for strict in (False, True):
            specs = fixture_code_specs(strict)
            r8 = build_code(specs["ex4_8/parity_check_subcode"], min_distance=False)
            assert (r8.length, r8.qc, r8.automorphism_verified) == (32, (2, 16), True)
            assert r8.variant == "parity_check_subcode"
            r9 = build_code(specs["ex4_9/parity_check_subcode"], min_distance=False)
            assert (r9.length, r9.qc, r9.automorphism_verified) == (30, (2, 15), True)
            _fixture_ok("ex4_8", strict)
            res9 = _fixture_ok("ex4_9", strict)
        # the strict outcome is recorded either way: a pass or a documented note
        assert any(c.status in ("PASS", "NOTE") and c.name.startswith("strict") for c in res9.checks)


def test_criterion_07_matrix_counts():
    with criterion(7, "order-2/3 matrix family counts", 5.0):
        for m in (2, 3, 4, 5):
            F = default_field(m)
            q = F.size
            for l in (2, 3):
                mats = enum_order_l(F, l)
                assert len(mats) == q * (q - 1)
                assert all(mobius_order(A) == l for A in mats)
            assert len(enum_order_l(F, 3, "a_zero")) == q - 1
            assert len(enum_order_l(F, 3, "d_zero")) == q - 1
            if (q - 1) % 3 == 0:
                assert len(enum_order_l(F, 3, "b_zero")) == 2 * (q - 1)


def test_criterion_08_completeness():
    with criterion(8, "T-set completeness oracles", 30.0):
        for m in (2, 3, 4):
            F = default_field(m)
            for A in enum_order_l(F, 2):
                T = t_set_order2(F, A.a, A.b)
                for k in F.elements():
                    g = g_k_order2(A.a, A.b, k)
                    assert is_irreducible(g) == (k in T) == (not roots_in_ctx(g))
        for m in (2, 4):
            F = default_field(m)
            for A in enum_order_l(F, 3):
                T1, T2 = t_sets_order3(F, A.a, A.d)
                for k in F.elements():
                    g = g_k_order3(A.a, A.d, k)
                    cls = classify_cubic(A.a, A.d, k)
                    roots = roots_in_ctx(g)
                    assert is_irreducible(g) == (k in T1 or k in T2)
                    expected = {"1_triple": 1, "3_in_field": 3, "0_in_field": 0}[cls.root_count]
                    assert len(roots) == expected


def test_criterion_09_factorizations():
    def check(F, A, s, direction="a_side"):
        fs = factor_h(F, A, s, direction)
        assert sum(f.degree for f in fs) == F.size**s + 1
        assert verify_product(h_polynomial(F, A, s, direction), fs)
        assert all(gcd(f, g).degree == 0 for f, g in itertools.combinations(fs, 2))

    with criterion(9, "h(x) factorization identities", 10.0):
        for m, s in ((3, 1), (4, 1), (1, 3), (1, 5)):
            F = default_field(m)
            for A in enum_order_l(F, 2):
                check(F, A, s)
        for m in (2, 4):
            F = default_field(m)
            for A in enum_order_l(F, 3):
                check(F, A, 1, "a_side")
                check(F, A, 1, "d_side")


def test_criterion_10_artin_schreier():
    with criterion(10, "y^2 + y = t solvable iff Tr(t) = 0, degrees 1..10", 5.0):
        for m in range(1, 11):
            F = default_field(m)
            images = {F.sqr(y) ^ y for y in range(F.size)}
            for t in range(F.size):
                solvable = solve_artin_schreier(F, F(t)) is not None
                assert solvable == (t in images) == (F.trace(t) == 0)


def test_criterion_11_support_transform():
    with criterion(11, "support transform preserves the code (20 random instances)", 10.0):
        rng = random.Random(11)
        done = 0
        while done < 20:
            F = default_field(rng.choice([3, 4]))
            a, b, d = (F(rng.randrange(F.size)) for _ in range(3))
            if a * d + b == F.zero:
                continue
            A = Mobius(a, b, d, True)
            r = rng.randint(1, 3)
            g = Poly(F, [rng.randrange(F.size) for _ in range(r)] + [1])
            if not g.eval(a):
                continue
            pool = [p for p in projective_line(F) if p is INF or g.eval(p)]
            rng.shuffle(pool)
            pts = pool[: rng.randint(r + 2, min(len(pool), 12))]
            spec = GoppaSpec(g, SupportSpec.flat(F, pts))
            try:
                spec2 = support_transform(spec, A)
            except RootInSupport:
                continue
            c1 = build_code(spec, min_distance=False)
            c2 = build_code(spec2, min_distance=False)
            assert same_row_space(c1.generator, c2.generator)
            done += 1


def test_criterion_12_code_invariants():
    # no budget is stated for this criterion; 60 s is the one used by `verify all`
    with criterion(12, "code-level invariants and regression values on every fixture code", 60.0):
        for key, spec in fixture_code_specs(strict=True).items():
            rep = build_code(spec)
            G, B = rep.generator, rep.parity
            assert all(v == 0 for v in G.mul_transpose(B).data), key
            # both A_{r+1} variants: every codeword has even weight over all coordinates
            assert all(row.bit_count() % 2 == 0 for row in G.data), key
            n, r = spec.support.ctx.degree, spec.g.degree
            assert rep.dimension >= rep.length - n * (r + 1), key
            assert (rep.dimension, rep.min_distance) == REGRESSION[key], key
            if rep.min_distance is not None:
                assert rep.dimension <= 20 and rep.min_distance % 2 == 0


@pytest.fixture(autouse=True, scope="module")
def _clear_results():
    RESULTS.clear()
    yield
