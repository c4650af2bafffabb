"""Worked examples with their expected values, and a runner that checks them.

Polynomials and orbit lists are stored in the package text format with
``xi`` (or ``g``) for the field generator.  Bit-exact fixtures compare
coefficients and point encodings; structural fixtures compare counts,
lengths, block shapes and verification flags.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .codes import GoppaSpec, SupportSpec, build_code, orbit_support, unit_group_support
from .gf2e import default_field, table_modulus
from .invariant import (
    classify_cubic,
    enum_order2_degree_2s,
    enum_order3_degree_3s,
    factor_h,
    frobenius_invariant_polys,
    frobenius_power,
    g_k_order3,
    h_polynomial,
    order3_matrix,
    stratum_counts_order2,
    t_set_order2,
    t_sets_order3,
    verify_product,
)
from .invariant import _frobenius_classes, _in_exact_stratum, _t_set_order2_ints
from .gf2e import build_tower
from .polyring import Poly, format_poly, parse_poly
from .projline import INF, Mobius, apply, format_point, orbits, parse_point, projective_line

EX3_10_POLYS = ["x^2 + xi*x + xi", "x^2 + xi^2*x + xi^2", "x^2 + xi^4*x + xi^4", "x^2 + x + 1"]
EX3_10_KSET = ["1", "xi", "xi^2", "xi^4"]

EX3_11_POLYS = [
    "x^10 + x^8 + x^7 + x^6 + x^2 + x + 1",
    "x^10 + x^9 + x^8 + x^7 + x^2 + x + 1",
    "x^10 + x^9 + x^5 + x^4 + x^2 + x + 1",
]
EX3_11_KSET_EXPONENTS = [5, 7, 9, 10, 11, 13, 14, 18, 19, 20, 21, 22, 25, 26, 28]

EX3_12_A_FROB_K = ["xi^9", "xi^6", "xi^5", "xi", "xi^4"]
EX3_12_A_FROB_POLYS = [
    "x^3 + xi^9*x^2 + xi^4*x + xi^14",
    "x^3 + xi^6*x^2 + xi*x + xi^11",
    "x^3 + xi^5*x^2 + x + xi^10",
    "x^3 + xi*x^2 + xi^11*x + xi^6",
    "x^3 + xi^4*x^2 + xi^14*x + xi^9",
]
EX3_12_A2_FROB_K = ["xi^8", "xi^7", "1", "xi^2", "xi^13"]
EX3_12_A2_FROB_POLYS = [
    "x^3 + xi^8*x^2 + xi^3*x + xi^13",
    "x^3 + xi^7*x^2 + xi^2*x + xi^12",
    "x^3 + x^2 + xi^10*x + xi^5",
    "x^3 + xi^2*x^2 + xi^12*x + xi^7",
    "x^3 + xi^13*x^2 + xi^8*x + xi^3",
]

EX4_5_POLYS = [
    "x^3 + xi^28*x^2 + xi^7*x + xi^49",
    "x^3 + xi^17*x^2 + xi^59*x + xi^38",
    "x^3 + xi^49*x^2 + xi^28*x + xi^7",
    "x^3 + xi^43*x^2 + xi^22*x + xi",
    "x^3 + xi^59*x^2 + xi^38*x + xi^17",
    "x^3 + xi^5*x^2 + xi^47*x + xi^26",
    "x^3 + xi^27*x^2 + xi^6*x + xi^48",
    "x^3 + xi^7*x^2 + xi^49*x + xi^28",
    "x^3 + xi^62*x^2 + xi^41*x + xi^20",
    "x^3 + xi^46*x^2 + xi^25*x + xi^4",
    "x^3 + xi^39*x^2 + xi^18*x + xi^60",
    "x^3 + xi^30*x^2 + xi^9*x + xi^51",
    "x^3 + xi^10*x^2 + xi^52*x + xi^31",
    "x^3 + xi^54*x^2 + xi^33*x + xi^12",
    "x^3 + xi^47*x^2 + xi^26*x + xi^5",
    "x^3 + xi^58*x^2 + xi^37*x + xi^16",
    "x^3 + xi^40*x^2 + xi^19*x + xi^61",
    "x^3 + xi^57*x^2 + xi^36*x + xi^15",
    "x^3 + xi^34*x^2 + xi^13*x + xi^55",
    "x^3 + xi^45*x^2 + xi^24*x + xi^3",
    "x^3 + xi^20*x^2 + xi^62*x + xi^41",
]
EX4_5_ORBITS = [
    ("0",),
    ("xi", "xi^6", "xi^29"),
    ("xi^2", "xi^15", "xi^37"),
    ("xi^3", "xi^9", "xi^11"),
    ("xi^4", "xi^24", "xi^53"),
    ("xi^5", "xi^49", "xi^59"),
    ("xi^7", "xi^47", "xi^20"),
    ("xi^8", "xi^60", "xi^22"),
    ("xi^10", "xi^40", "xi^34"),
    ("xi^12", "xi^36", "xi^44"),
    ("xi^13", "xi^56", "xi^31"),
    ("xi^14", "xi^55", "xi^19"),
    ("xi^16", "xi^33", "xi^23"),
    ("xi^17", "xi^28", "xi^62"),
    ("xi^18", "xi^50", "xi^48"),
    ("xi^25", "xi^32", "xi^51"),
    ("xi^26", "xi^38", "xi^41"),
    ("xi^27", "xi^43", "xi^39"),
    ("xi^30", "xi^45", "xi^46"),
    ("xi^35", "xi^61", "xi^52"),
    ("xi^54", "xi^58", "xi^57"),
    ("xi^21", "inf", "1"),
    ("xi^42",),
]

EX4_6_POLYS = [
    "x^7 + xi^35*x^6 + xi^62*x^5 + xi^26*x^4 + xi^53*x^3 + xi^17*x^2 + xi^44*x + xi^8",
    "x^7 + xi*x^6 + xi^28*x^5 + xi^55*x^4 + xi^19*x^3 + xi^46*x^2 + xi^10*x + xi^37",
    "x^7 + xi^28*x^6 + xi^55*x^5 + xi^19*x^4 + xi^46*x^3 + xi^10*x^2 + xi^37*x + xi",
    "x^7 + xi^18*x^6 + xi^45*x^5 + xi^9*x^4 + xi^36*x^3 + x^2 + xi^27*x + xi^54",
    "x^7 + xi^24*x^6 + xi^51*x^5 + xi^15*x^4 + xi^42*x^3 + xi^6*x^2 + xi^33*x + xi^60",
    "x^7 + xi^3*x^6 + xi^30*x^5 + xi^57*x^4 + xi^21*x^3 + xi^48*x^2 + xi^12*x + xi^39",
    "x^7 + xi^12*x^6 + xi^39*x^5 + xi^3*x^4 + xi^30*x^3 + xi^57*x^2 + xi^21*x + xi^48",
    "x^7 + xi^33*x^6 + xi^60*x^5 + xi^24*x^4 + xi^51*x^3 + xi^15*x^2 + xi^42*x + xi^6",
    "x^7 + xi^8*x^6 + xi^35*x^5 + xi^62*x^4 + xi^26*x^3 + xi^53*x^2 + xi^17*x + xi^44",
]
EX4_6_ORBITS = [
    ("0",),
    ("xi", "xi^17", "xi^50", "xi^6", "xi^52", "xi^49", "xi^56"),
    ("xi^2", "xi^25", "xi^39", "xi^31", "xi^44", "xi^24", "xi^55"),
    ("xi^3", "xi^62", "xi^16", "xi^11", "xi^60", "xi^59", "xi^37"),
    ("xi^4", "xi^41", "xi^26", "xi^29", "xi^57", "xi^46", "xi^33"),
    ("xi^5", "xi^47", "xi^58", "xi^42", "xi^30", "xi^34", "xi^28"),
    ("xi^7", "xi^8", "xi^10", "xi^22", "xi^48", "xi^38", "xi^14"),
    ("xi^12", "xi^32", "xi^13", "xi^19", "xi^43", "xi^15", "xi^53"),
    ("xi^20", "xi^35", "xi^40", "xi^61", "xi^23", "xi^21", "xi^51"),
    ("xi^9", "xi^54", "xi^45", "xi^18", "xi^36", "1", "inf"),
    ("xi^27",),
]

# omega is the generator of GF(1024); xi = omega^33 generates GF(32) inside it
EX4_8_GOPPA = "x^2 + w^459*x + w^321"
EX4_8_ORBITS = [
    ("w^31", "w^837"),
    ("w^62", "w^558"),
    ("w^93", "w^806"),
    ("w^124", "w^868"),
    ("w^155", "w^899"),
    ("w^186", "w^992"),
    ("w^217", "w^930"),
    ("w^248", "w^341"),
    ("w^279", "w^651"),
    ("w^310", "w^496"),
    ("w^372", "w^744"),
    ("w^403", "w^434"),
    ("w^465", "w^961"),
    ("w^527", "w^713"),
    ("w^589", "w^620"),
    ("w^682", "w^775"),
]
EX4_9_GOPPA = "x^2 + w^800*x + 1"
# as printed, including the repeated L6 and the shifted partners after it
EX4_9_ORBITS = [
    ("w^33", "w^990"),
    ("w^66", "w^957"),
    ("w^99", "w^924"),
    ("w^132", "w^891"),
    ("w^165", "w^858"),
    ("w^198", "w^825"),
    ("w^198", "w^792"),
    ("w^231", "w^759"),
    ("w^264", "w^726"),
    ("w^297", "w^693"),
    ("w^330", "w^660"),
    ("w^363", "w^627"),
    ("w^396", "w^594"),
    ("w^429", "w^594"),
    ("w^462", "w^561"),
    ("w^495", "w^528"),
]

# computed once and kept as regression values: (dimension, min_distance)
REGRESSION = {
    "ex4_5/extended": (44, None),
    "ex4_5/parity_check_subcode": (41, None),
    "ex4_6/extended": (20, 16),
    "ex4_6/parity_check_subcode": (13, 18),
    "ex4_8/parity_check_subcode": (11, 10),
    "ex4_9/parity_check_subcode": (9, 10),
}


@dataclass
class Check:
    name: str
    status: str  # PASS, FAIL or NOTE
    detail: str = ""


@dataclass
class FixtureResult:
    id: str
    match_mode: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "FAIL" for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, "PASS" if ok else "FAIL", detail))
        return ok

    def note(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, "NOTE", detail))


def _polys(ctx, texts):
    return [parse_poly(ctx, t) for t in texts]


def _show(item) -> str:
    if isinstance(item, Poly):
        return format_poly(item)
    if isinstance(item, frozenset):
        return "(" + ", ".join(format_point(p) for p in sorted(item, key=lambda p: 1 << 32 if p is INF else p.bits)) + ")"
    return str(item)


def _diff(expected, got) -> str:
    exp, g = set(expected), set(got)
    missing = sorted(_show(p) for p in exp - g)
    extra = sorted(_show(p) for p in g - exp)
    return f"missing {missing}; unexpected {extra}" if missing or extra else ""


def _same(res: FixtureResult, name: str, expected, got) -> bool:
    ok = len(expected) == len(got) and set(expected) == set(got)
    return res.add(name, ok, "" if ok else _diff(expected, got))


def _is_cycle(A, tup) -> bool:
    return all(apply(A, tup[i]) == tup[(i + 1) % len(tup)] for i in range(len(tup)))


def _check_orbits(res: FixtureResult, A, ctx, printed_orbits) -> None:
    printed = [tuple(parse_point(ctx, p) for p in o) for o in printed_orbits]
    got = orbits(A, projective_line(ctx))
    res.add("orbit count", len(got) == len(printed), f"{len(got)} vs {len(printed)}")
    _same(res, "orbit memberships", {frozenset(o) for o in printed}, {frozenset(o) for o in got})
    res.add("listed orbits follow the A-cycle order", all(_is_cycle(A, o) for o in printed))


def _check_code(res: FixtureResult, key: str, spec: GoppaSpec, length: int, qc, min_distance=True):
    rep = build_code(spec, min_distance=min_distance)
    res.add(f"{key}: length {length}", rep.length == length, str(rep.length))
    res.add(f"{key}: qc {qc}", rep.qc == qc, str(rep.qc))
    res.add(f"{key}: automorphism verified", rep.automorphism_verified)
    if key in REGRESSION and min_distance:
        dim, dist = REGRESSION[key]
        res.add(f"{key}: regression dimension/min distance", (rep.dimension, rep.min_distance) == (dim, dist),
                f"{rep.dimension}, {rep.min_distance}")
    return rep


def run_ex3_10(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex3_10", "bit_exact")
    F = default_field(3)
    one, zero = F.one, F.zero
    res.add("field modulus x^3+x+1", F.modulus == 0b1011)
    T = t_set_order2(F, one, zero)
    _same(res, "k-set", [parse_point(F, k) for k in EX3_10_KSET], T.sorted())
    got = enum_order2_degree_2s(F, one, zero, 1)
    _same(res, "quadratics", _polys(F, EX3_10_POLYS), got)
    A = Mobius(one, zero, one)
    fs = factor_h(F, A, 1)
    res.add("h = x^9 + x^8 + x factors back", verify_product(h_polynomial(F, A, 1), fs))
    return res


def run_ex3_11(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex3_11", "bit_exact")
    F = default_field(1)
    one, zero = F.one, F.zero
    got = enum_order2_degree_2s(F, one, zero, 5)
    _same(res, "degree-10 polynomials", _polys(F, EX3_11_POLYS), got)
    counts = stratum_counts_order2(F, one, zero, 5)
    res.add("stratum count 15", counts[5] == 15, str(counts))
    sup, tower = build_tower(F, 5)
    ks = {k for k in _t_set_order2_ints(sup, 1, 0, 5) if _in_exact_stratum(sup, k, 5, 1)}
    classes = _frobenius_classes(sup, ks, 1)
    res.add("3 classes of size 5", sorted(map(len, classes)) == [5, 5, 5])
    exps = sorted(sup.log(k) for k in ks)
    res.add("k-set exponents", exps == EX3_11_KSET_EXPONENTS, str(exps))
    return res


def run_ex3_12(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex3_12", "bit_exact")
    F = default_field(4)
    res.add("field modulus x^4+x+1", F.modulus == 0b10011)
    a, d = F.one, F.power(5)
    A = order3_matrix(a, d)
    T1, T2 = t_sets_order3(F, a, d)
    k_a = [parse_point(F, k) for k in EX3_12_A_FROB_K]
    k_a2 = [parse_point(F, k) for k in EX3_12_A2_FROB_K]
    _same(res, "T1 u T2", k_a + k_a2, list(T1.members | T2.members))
    for ks, texts, direction, u in (
        (k_a, EX3_12_A_FROB_POLYS, "A_is_frobenius", 1),
        (k_a2, EX3_12_A2_FROB_POLYS, "A2_is_frobenius", 2),
    ):
        polys = _polys(F, texts)
        res.add(f"{direction}: cubics", [g_k_order3(a, d, k) for k in ks] == polys)
        res.add(f"{direction}: classify_cubic", all(classify_cubic(a, d, k).frobenius_direction == direction for k in ks))
        res.add(f"{direction}: Frobenius test", all(frobenius_power(g, A) == u for g in polys))
    got = enum_order3_degree_3s(F, a, d, 1)
    _same(res, "ten cubics", _polys(F, EX3_12_A_FROB_POLYS + EX3_12_A2_FROB_POLYS), got)
    return res


def run_ex4_5(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex4_5", "bit_exact")
    F = default_field(6)
    res.add("field modulus x^6+x^4+x^3+x+1", F.modulus == 0b1011011)
    xi = F.gen
    A = Mobius(F.one, F.zero, xi**21)
    _check_orbits(res, A, F, EX4_5_ORBITS)
    expected = _polys(F, EX4_5_POLYS)
    _same(res, "21 cubics (factoring route)", expected, frobenius_invariant_polys(A, 1))
    T1, T2 = t_sets_order3(F, F.one, xi**21)
    _same(res, "21 cubics (coset route)", expected, [g_k_order3(F.one, xi**21, k) for k in T2.sorted()])
    sup = orbit_support(A, projective_line(F))
    finite = SupportSpec(F, tuple(b for b in sup.blocks if INF not in b), "parity_check_subcode")
    for i, g in enumerate(expected):
        first = i == 0
        tag = "" if first else f" g{i + 1}"
        _check_code(res, "ex4_5/extended" + tag, GoppaSpec(g, sup, A), 63, (3, 21), first)
        _check_code(res, "ex4_5/parity_check_subcode" + tag, GoppaSpec(g, finite, A), 60, (3, 20), first)
    return res


def run_ex4_6(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex4_6", "bit_exact")
    F = default_field(6)
    xi = F.gen
    A = Mobius.from_entries(xi**9, F.zero, F.one, F.one)
    _check_orbits(res, A, F, EX4_6_ORBITS)
    expected = _polys(F, EX4_6_POLYS)
    _same(res, "9 septics", expected, frobenius_invariant_polys(A, 1))
    sup = orbit_support(A, projective_line(F))
    finite = SupportSpec(F, tuple(b for b in sup.blocks if INF not in b), "parity_check_subcode")
    for i, g in enumerate(expected):
        first = i == 0
        tag = "" if first else f" g{i + 1}"
        _check_code(res, "ex4_6/extended" + tag, GoppaSpec(g, sup, A), 63, (7, 9), first)
        _check_code(res, "ex4_6/parity_check_subcode" + tag, GoppaSpec(g, finite, A), 56, (7, 8), first)
    return res


def _unit_group_example(res, n, A, printed_goppa, printed_orbits, blocks, length, strict):
    K = A.ctx
    sup = unit_group_support(K, n, A)
    res.add(f"U_{n}: {blocks} blocks of size 2", len(sup.blocks) == blocks and {len(b) for b in sup.blocks} == {2})
    res.add(f"U_{n}: fixed point 1 dropped", K.one not in sup.points and len(sup) == length)
    g = enum_order2_degree_2s(K, A.a, A.b, 1)[0]
    _check_code(res, f"structural g = {format_poly(g)}", GoppaSpec(g, sup, A), length, (2, blocks), False)
    if not strict:
        return
    if K.modulus != table_modulus(K.degree):
        res.note("strict", f"modulus {K.modulus:#x} is not the Conway polynomial; generator comparison skipped")
        return
    gp = parse_poly(K, printed_goppa)
    from .invariant import check_invariance
    from .polyring import is_irreducible

    ok = res.add(f"strict: {printed_goppa} invariant and irreducible",
                 check_invariance(gp, A) is not None and is_irreducible(gp))
    printed = {frozenset(parse_point(K, p) for p in o) for o in printed_orbits}
    got = {frozenset(b) for b in sup.blocks}
    if printed == got and len(printed_orbits) == len(sup.blocks):
        res.add("strict: orbit pairs coefficient-exact", True)
    else:
        res.note("strict: orbit pairs", "printed list differs from the computed orbits: " + _diff(got, printed).replace("missing", "computed only").replace("unexpected", "printed only"))
    if ok:
        key = f"{res.id}/parity_check_subcode"
        _check_code(res, key, GoppaSpec(gp, sup, A), length, (2, blocks), True)


def run_ex4_8(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex4_8", "bit_exact" if strict else "structural")
    K = default_field(10)
    xi = K.power((K.size - 1) // 31)
    A = Mobius(xi, K.one, xi)
    _unit_group_example(res, 33, A, EX4_8_GOPPA, EX4_8_ORBITS, 16, 32, strict)
    return res


def run_ex4_9(strict: bool = False) -> FixtureResult:
    res = FixtureResult("ex4_9", "bit_exact" if strict else "structural")
    K = default_field(10)
    A = Mobius(K.zero, K.one, K.zero)
    _unit_group_example(res, 31, A, EX4_9_GOPPA, EX4_9_ORBITS, 15, 30, strict)
    return res


def fixture_code_specs(strict: bool = False) -> dict[str, GoppaSpec]:
    """The Goppa specs behind every code built by the examples (first polynomial only)."""
    F = default_field(6)
    xi = F.gen
    out: dict[str, GoppaSpec] = {}
    for key, A, texts in (
        ("ex4_5", Mobius(F.one, F.zero, xi**21), EX4_5_POLYS),
        ("ex4_6", Mobius.from_entries(xi**9, F.zero, F.one, F.one), EX4_6_POLYS),
    ):
        g = parse_poly(F, texts[0])
        sup = orbit_support(A, projective_line(F))
        finite = SupportSpec(F, tuple(b for b in sup.blocks if INF not in b), "parity_check_subcode")
        out[f"{key}/extended"] = GoppaSpec(g, sup, A)
        out[f"{key}/parity_check_subcode"] = GoppaSpec(g, finite, A)
    K = default_field(10)
    w31 = K.power((K.size - 1) // 31)
    for key, n, A, printed in (
        ("ex4_8", 33, Mobius(w31, K.one, w31), EX4_8_GOPPA),
        ("ex4_9", 31, Mobius(K.zero, K.one, K.zero), EX4_9_GOPPA),
    ):
        g = parse_poly(K, printed) if strict else enum_order2_degree_2s(K, A.a, A.b, 1)[0]
        out[f"{key}/parity_check_subcode"] = GoppaSpec(g, unit_group_support(K, n, A), A)
    return out


FIXTURES: dict[str, tuple[str, Callable[..., FixtureResult]]] = {
    "ex3_10": ("bit_exact", run_ex3_10),
    "ex3_11": ("bit_exact", run_ex3_11),
    "ex3_12": ("bit_exact", run_ex3_12),
    "ex4_5": ("bit_exact", run_ex4_5),
    "ex4_6": ("bit_exact", run_ex4_6),
    "ex4_8": ("structural", run_ex4_8),
    "ex4_9": ("structural", run_ex4_9),
}


def run_fixture(fid: str, strict: bool = False) -> FixtureResult:
    if fid not in FIXTURES:
        raise KeyError(f"unknown example {fid!r}; choose from {', '.join(FIXTURES)}")
    return FIXTURES[fid][1](strict)
