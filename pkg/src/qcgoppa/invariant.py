"""Irreducible polynomials invariant under a Mobius map of prime order.

A monic g of degree r is invariant under A = [[a, b], [1, d]] when
(x + d)^r g(A(x)) is a nonzero multiple of g.  The constructions here
produce every irreducible invariant g of degree 2s (A of order 2) or 3s
(A of order 3), either from trace-set / cube-coset parametrizations of
the quadratic or cubic coefficient k, or by factoring
x^(q^s+1) + d x^(q^s) + a x + b, whose roots are the elements with
A(alpha) = alpha^(q^s).

Frobenius relations are always checked with polynomial arithmetic modulo
g, i.e. a x + b == x^(q^e) (x + d) mod g, never by building the splitting
field of g.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AffineMatrix,
    CoefficientsNotRational,
    DegenerateMatrix,
    FixedBeta,
    NoCubeRootOfUnity,
    RootAtA,
    ScaleExceeded,
    UnsupportedOrder,
    UnsupportedS,
)
from .gf2e import (
    Fe,
    FieldCtx,
    TowerEmbedding,
    build_tower,
    divisors,
    prime_factors,
    subfield_generator,
)
from .polyring import (
    Poly,
    _add,
    _divmod,
    _frob_mod,
    _mul,
    _strip,
    factor,
    is_irreducible,
)
from .projline import INF, Mobius, mobius_order, orbit_of

# q^s above which factor_h skips the full multiply-back identity
PRODUCT_CHECK_CAP = 1 << 14
MAX_TOWER_ORDER2 = 20
MAX_TOWER_ORDER3 = 24


@dataclass(frozen=True)
class InvariantWitness:
    gamma: Fe
    shifted: Poly


@dataclass(frozen=True)
class TSet:
    ctx: FieldCtx
    members: frozenset
    label: str

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, k) -> bool:
        return k in self.members

    def sorted(self) -> list[Fe]:
        return sorted(self.members)


@dataclass(frozen=True)
class CubicClass:
    root_count: str  # "1_triple", "3_in_field" or "0_in_field"
    frobenius_direction: str | None = None  # "A_is_frobenius" / "A2_is_frobenius"
    roots: tuple = ()

    def __post_init__(self):
        if (self.frobenius_direction is None) != (self.root_count != "0_in_field"):
            raise ValueError("direction is present exactly for irreducible cubics")


@dataclass(frozen=True)
class InvariantPoly:
    """An emitted polynomial together with where it came from."""

    poly: Poly
    k: Fe | None  # class representative, in the tower field
    stratum: int  # exact degree of k over the base field
    case: str
    frobenius_power: int | None = None  # u with A^u(alpha) = alpha^(q^stratum)


@dataclass(frozen=True)
class OrbitPolynomial:
    poly: Poly
    s: int
    u: int  # 0 when the Frobenius orbit closes before meeting another A-image
    irreducible: bool


@dataclass
class Diagnostics:
    skipped: list = field(default_factory=list)


# --- invariance -------------------------------------------------------------


def mobius_transform(g: Poly, A: Mobius) -> Poly:
    """(c x + d)^r g(A(x)) with denominators cleared."""
    ctx = g.ctx
    r = g.degree
    num = [A.b.bits, A.a.bits]
    den = [A.d.bits, A.c.bits]
    num_pows = [[1]]
    den_pows = [[1]]
    for _ in range(r):
        num_pows.append(_mul(ctx, num_pows[-1], num))
        den_pows.append(_mul(ctx, den_pows[-1], den))
    acc: list[int] = []
    for i, gi in enumerate(g.c):
        if gi:
            term = _mul(ctx, num_pows[i], den_pows[r - i])
            acc = _add(acc, [ctx.mul(gi, v) for v in term])
    return Poly._raw(ctx, acc)


def check_invariance(g: Poly, A: Mobius) -> InvariantWitness | None:
    """Witness gamma with gamma g = (x + d)^r g(A(x)), or None."""
    if g.degree < 0:
        raise ValueError("zero polynomial")
    if not A.c_is_one:
        if not A.is_scalar():
            raise AffineMatrix("the (x + d)^r form needs a matrix with c = 1")
        return InvariantWitness(g.ctx.one, g)
    if not g.eval(A.a):
        raise RootAtA(f"g(a) = 0 for a = {A.a!r}")
    shifted = mobius_transform(g, A)
    gamma = shifted.lead / g.lead
    if shifted == g.scale(gamma.bits):
        return InvariantWitness(gamma, shifted)
    return None


def frobenius_power(g: Poly, A: Mobius, e: int = 1, l: int | None = None) -> int | None:
    """Least u in 1..l-1 with A^u(alpha) = alpha^(q^e) for a root alpha of g.

    The test is a_u x + b_u == x^(q^e) (c_u x + d_u) modulo g.
    """
    ctx = g.ctx
    if l is None:
        l = mobius_order(A)
    gm = list(g.monic().c)
    xq = _frob_mod(ctx, [0, 1], gm, e)
    P = A
    for u in range(1, l):
        lhs = [P.b.bits, P.a.bits]
        rhs = _mul(ctx, xq, [P.d.bits, P.c.bits])
        if not _strip(_divmod(ctx, _add(lhs, rhs), gm)[1]):
            return u
        P = P @ A
    return None


def least_frobenius_degree(g: Poly, A: Mobius, max_s: int | None = None) -> tuple[int, int] | None:
    """Least s (and its u) with A^u(alpha) = alpha^(q^s), 1 <= u < ord(A)."""
    l = mobius_order(A)
    if max_s is None:
        max_s = g.degree
    for s in range(1, max_s + 1):
        u = frobenius_power(g, A, s, l)
        if u is not None:
            return s, u
    return None


# --- orbit polynomials ---------------------------------------------------------


def orbit_polynomial(A: Mobius, beta: Fe, tower: TowerEmbedding) -> OrbitPolynomial:
    """Product of (x - A^i(beta^(q^j))) over the A- and Frobenius-closure of beta."""
    sup, base = tower.sup, tower.sub
    if beta.ctx != sup:
        raise ValueError("beta must live in the tower field")
    B = A.embed(tower)
    orb = orbit_of(B, beta)
    if len(orb) == 1:
        raise FixedBeta(f"{beta!r} is fixed by A")
    if INF in orb:
        raise ValueError("the orbit of beta passes through infinity")
    l = len(orb)
    members = set(orb)
    s, u = 1, None
    y = beta.frob(base.degree)
    while True:
        if y == beta:
            u = 0
            break
        if y in members:
            u = orb.index(y)
            break
        s += 1
        y = y.frob(base.degree)
    roots = []
    conj = beta
    for _ in range(s):
        roots.extend(orbit_of(B, conj))
        conj = conj.frob(base.degree)
    big = Poly.from_roots(sup, roots)
    coeffs = []
    for v in big.c:
        w = tower.pullback_int(v)
        if w is None:
            raise CoefficientsNotRational("orbit product does not descend to the base field")
        coeffs.append(w)
    g = Poly._raw(base, coeffs)
    assert g.degree == s * l
    return OrbitPolynomial(g, s, u, u != 0)


# --- order two ---------------------------------------------------------------


def g_k_order2(a: Fe, b: Fe, k: Fe) -> Poly:
    """x^2 + k x + a k + b."""
    return Poly(a.ctx, [a * k + b, k, a.ctx.one])


def _subfield_ints(sup: FieldCtx, degree: int) -> list[int]:
    if degree == sup.degree:
        return list(range(sup.size))
    z = subfield_generator(sup, degree)
    out, x = [0], 1
    for _ in range((1 << degree) - 1):
        out.append(x)
        x = sup.mul(x, z)
    return out


def _t_set_order2_ints(sup: FieldCtx, a: int, b: int, level_degree: int) -> set[int]:
    num = a ^ sup.sqrt(b)
    return {
        sup.div(num, c)
        for c in _subfield_ints(sup, level_degree)
        if c and sup.trace(c) == 1
    }


def t_set_order2(ctx_q: FieldCtx, a: Fe, b: Fe, level_ctx: FieldCtx | None = None) -> TSet:
    """{(a + sqrt b) / c : Tr(c) = 1} with c ranging over ``level_ctx``.

    ``level_ctx`` defaults to ctx_q; otherwise it must be an extension of
    ctx_q (a and b are carried over by the canonical embedding).
    """
    if a * a == b:
        raise DegenerateMatrix("a^2 = b: the matrix does not have order 2")
    if level_ctx is None or level_ctx == ctx_q:
        members = _t_set_order2_ints(ctx_q, a.bits, b.bits, ctx_q.degree)
        return TSet(ctx_q, frozenset(Fe(ctx_q, v) for v in members), "T")
    if level_ctx.degree % ctx_q.degree:
        raise ValueError(f"{level_ctx} is not an extension of {ctx_q}")
    from .gf2e import embedding_into

    emb = embedding_into(ctx_q, level_ctx)
    members = _t_set_order2_ints(level_ctx, emb.embed_int(a.bits), emb.embed_int(b.bits), level_ctx.degree)
    return TSet(level_ctx, frozenset(Fe(level_ctx, v) for v in members), "T_i_level")


def _check_s_shape(s: int, order: int) -> str:
    """Classify s as 'one', 'prime-power' or 'two-primes'; reject others."""
    if s == 1:
        return "one"
    ps = prime_factors(s)
    if len(ps) == 1 and ps[0] >= 3:
        return "prime-power"
    if len(ps) == 2 and ps[0] * ps[1] == s:
        lo = 3 if order == 2 else 5
        if min(ps) >= lo:
            return "two-primes"
    raise UnsupportedS(f"s = {s} is not an odd prime power or a product of two distinct admissible primes")


def _strata(s: int) -> list[int]:
    return divisors(s)


def _in_exact_stratum(sup: FieldCtx, k: int, e: int, base_degree: int) -> bool:
    """k lies in GF(q^e) but in no proper subfield GF(q^e') containing GF(q)."""
    if not sup.in_subfield(k, e * base_degree):
        return False
    return all(not sup.in_subfield(k, base_degree * (e // p)) for p in prime_factors(e))


def _frobenius_classes(sup: FieldCtx, ks: set[int], q_degree: int) -> list[list[int]]:
    """Partition ``ks`` into classes k ~ k^(q^j); each class starts at its minimum."""
    seen: set[int] = set()
    out = []
    for k in sorted(ks):
        if k in seen:
            continue
        cls = [k]
        y = sup.frob(k, q_degree)
        while y != k:
            cls.append(y)
            y = sup.frob(y, q_degree)
        seen.update(cls)
        out.append(cls)
    return out


def _descend(tower: TowerEmbedding, coeffs: list[int]) -> Poly:
    vals = []
    for v in coeffs:
        w = tower.pullback_int(v)
        if w is None:
            raise CoefficientsNotRational("product does not descend to the base field")
        vals.append(w)
    return Poly._raw(tower.sub, vals)


def _class_product(sup: FieldCtx, cls: list[int], quad) -> list[int]:
    acc = [1]
    for k in cls:
        acc = _mul(sup, acc, quad(k))
    return acc


def _order2_quadratic(sup: FieldCtx, a: int, b: int):
    return lambda k: [sup.mul(a, k) ^ b, k, 1]


def order2_strata(ctx_q: FieldCtx, a: Fe, b: Fe, s: int) -> dict[int, list[InvariantPoly]]:
    """All irreducible invariant polynomials of degree 2e, e | s, for A = [[a,b],[1,a]].

    Keyed by the stratum e (the exact degree of k over GF(q)).
    """
    if a * a == b:
        raise DegenerateMatrix("a^2 = b: the matrix does not have order 2")
    shape = _check_s_shape(s, 2)
    if ctx_q.degree * s > MAX_TOWER_ORDER2:
        raise ScaleExceeded(f"tower GF(q^{s}) over {ctx_q} exceeds 2^{MAX_TOWER_ORDER2}")
    sup, tower = build_tower(ctx_q, s)
    ai, bi = tower.embed_int(a.bits), tower.embed_int(b.bits)
    quad = _order2_quadratic(sup, ai, bi)
    out: dict[int, list[InvariantPoly]] = {}
    for e in _strata(s):
        ks = {
            k
            for k in _t_set_order2_ints(sup, ai, bi, e * ctx_q.degree)
            if _in_exact_stratum(sup, k, e, ctx_q.degree)
        }
        case = "order2" if e == 1 else f"order2-{shape}"
        recs = []
        for cls in _frobenius_classes(sup, ks, ctx_q.degree):
            g = _descend(tower, _class_product(sup, cls, quad))
            recs.append(InvariantPoly(g, Fe(sup, cls[0]), e, case, 1))
        out[e] = sorted(recs, key=lambda r: r.poly.sort_key())
    return out


def enum_order2_degree_2s(ctx_q: FieldCtx, a: Fe, b: Fe, s: int, with_provenance: bool = False):
    """Irreducible A-invariant polynomials of degree exactly 2s, A = [[a,b],[1,a]]."""
    recs = order2_strata(ctx_q, a, b, s)[s]
    return recs if with_provenance else [r.poly for r in recs]


def stratum_counts_order2(ctx_q: FieldCtx, a: Fe, b: Fe, s: int) -> dict[int, int]:
    """|T^(e) restricted to the exact stratum e| for every stratum e | s."""
    _check_s_shape(s, 2)
    sup, tower = build_tower(ctx_q, s)
    ai, bi = tower.embed_int(a.bits), tower.embed_int(b.bits)
    return {
        e: sum(
            1
            for k in _t_set_order2_ints(sup, ai, bi, e * ctx_q.degree)
            if _in_exact_stratum(sup, k, e, ctx_q.degree)
        )
        for e in _strata(s)
    }


# --- order three ----------------------------------------------------------------


def g_k_order3(a: Fe, d: Fe, k: Fe) -> Poly:
    """x^3 + k x^2 + (a^2 + k(a + d) + ad + d^2) x + a^3 + kad + d^3."""
    ctx = a.ctx
    c1 = a * a + k * (a + d) + a * d + d * d
    c0 = a * a * a + k * a * d + d * d * d
    return Poly(ctx, [c0, c1, k, ctx.one])


def order3_matrix(a: Fe, d: Fe) -> Mobius:
    return Mobius(a, a * a + a * d + d * d, d, True)


def _omega(ctx: FieldCtx, xi: int) -> int:
    if (ctx.size - 1) % 3:
        raise NoCubeRootOfUnity(f"3 does not divide {ctx.size - 1}")
    return ctx.pow(xi, (ctx.size - 1) // 3)


def _t_sets_order3_ints(sup: FieldCtx, a: int, d: int, level_degree: int, omega: int) -> tuple[set[int], set[int]]:
    """(T1, T2) at the level GF(2^level_degree) of ``sup``."""
    xi_level = subfield_generator(sup, level_degree)
    order = (1 << level_degree) - 1
    shift = sup.mul(a, omega) ^ sup.mul(d, sup.mul(omega, omega))
    apd = a ^ d
    sets: tuple[set[int], set[int]] = (set(), set())
    c = 1
    for i in range(order):
        j = i % 3
        if j:
            sets[j - 1].add(sup.div(apd, c ^ 1) ^ shift)
        c = sup.mul(c, xi_level)
    return sets


def t_sets_order3(ctx_q: FieldCtx, a: Fe, d: Fe) -> tuple[TSet, TSet]:
    """T1 and T2 from the two nontrivial cube cosets of GF(q)*."""
    if (ctx_q.size - 1) % 3:
        raise NoCubeRootOfUnity(f"3 does not divide {ctx_q.size - 1}")
    if a == d:
        raise DegenerateMatrix("a = d: the matrix does not have order 3")
    omega = _omega(ctx_q, ctx_q.gen_int)
    t1, t2 = _t_sets_order3_ints(ctx_q, a.bits, d.bits, ctx_q.degree, omega)
    return (
        TSet(ctx_q, frozenset(Fe(ctx_q, v) for v in t1), "T1"),
        TSet(ctx_q, frozenset(Fe(ctx_q, v) for v in t2), "T2"),
    )


def _cube_root(ctx: FieldCtx, c: int) -> int:
    e = ctx.log(c)
    assert e % 3 == 0
    return ctx.pow(ctx.gen_int, e // 3)


def classify_cubic(a: Fe, d: Fe, k: Fe, with_roots: bool = False) -> CubicClass:
    """Root count of g_k (order-3 family) from the cube coset of
    c = (a + d)/(k + a w + d w^2) + 1.
    """
    ctx = a.ctx
    if a == d:
        raise DegenerateMatrix("a = d: the matrix does not have order 3")
    omega = Fe(ctx, _omega(ctx, ctx.gen_int))
    disc = k * k + (a + d) * k + a * a + a * d + d * d
    if not disc:
        return CubicClass("1_triple", None, (k,) if with_roots else ())
    shift = a * omega + d * omega * omega
    c = (a + d) / (k + shift) + 1
    coset = ctx.log(c.bits) % 3
    if coset == 0:
        roots: tuple = ()
        if with_roots:
            mu2 = Fe(ctx, _cube_root(ctx, c.bits))
            w2 = omega * omega
            roots = (
                (a + d) / (mu2 + 1) + shift,
                (a + d) / (w2 * mu2 + 1) + shift,
                (a + d) / (omega * mu2 + 1) + shift,
            )
        return CubicClass("3_in_field", None, roots)
    return CubicClass("0_in_field", "A2_is_frobenius" if coset == 1 else "A_is_frobenius")


def _order3_cubic(sup: FieldCtx, a: int, d: int):
    e1 = sup.mul(a, a) ^ sup.mul(a, d) ^ sup.mul(d, d)
    apd, ad = a ^ d, sup.mul(a, d)
    e0 = sup.mul(a, sup.mul(a, a)) ^ sup.mul(d, sup.mul(d, d))
    return lambda k: [e0 ^ sup.mul(k, ad), e1 ^ sup.mul(k, apd), k, 1]


def order3_strata(ctx_q: FieldCtx, a: Fe, d: Fe, s: int) -> dict[int, list[InvariantPoly]]:
    """All irreducible invariant polynomials of degree 3e, e | s, for the
    order-3 matrix [[a, a^2+ad+d^2], [1, d]].

    Each record carries the Frobenius power u (1: A, 2: A^2) measured
    directly at its own stratum; the coset labels are only used to
    generate candidates.
    """
    if (ctx_q.size - 1) % 3:
        raise NoCubeRootOfUnity(f"3 does not divide {ctx_q.size - 1}")
    if a == d:
        raise DegenerateMatrix("a = d: the matrix does not have order 3")
    shape = _check_s_shape(s, 3)
    # roots are never materialized, so only GF(q^s) has to fit
    if ctx_q.degree * s > MAX_TOWER_ORDER3:
        raise ScaleExceeded(f"tower GF(q^{s}) over {ctx_q} exceeds 2^{MAX_TOWER_ORDER3}")
    sup, tower = build_tower(ctx_q, s)
    A = order3_matrix(a, d)
    ai, di = tower.embed_int(a.bits), tower.embed_int(d.bits)
    omega = _omega(sup, sup.gen_int)
    cubic = _order3_cubic(sup, ai, di)
    out: dict[int, list[InvariantPoly]] = {}
    for e in _strata(s):
        t1, t2 = _t_sets_order3_ints(sup, ai, di, e * ctx_q.degree, omega)
        case = "order3" if e == 1 else f"order3-{shape}"
        recs = []
        ks = {k for k in t1 | t2 if _in_exact_stratum(sup, k, e, ctx_q.degree)}
        for cls in _frobenius_classes(sup, ks, ctx_q.degree):
            g = _descend(tower, _class_product(sup, cls, cubic))
            u = frobenius_power(g, A, e, 3)
            recs.append(InvariantPoly(g, Fe(sup, cls[0]), e, case, u))
        out[e] = sorted(recs, key=lambda r: r.poly.sort_key())
    return out


def enum_order3_degree_3s(ctx_q: FieldCtx, a: Fe, d: Fe, s: int, with_provenance: bool = False):
    """Irreducible invariant polynomials of degree exactly 3s for the order-3 matrix."""
    recs = order3_strata(ctx_q, a, d, s)[s]
    return recs if with_provenance else [r.poly for r in recs]


# --- h(x) factorizations -------------------------------------------------------


def h_polynomial(ctx_q: FieldCtx, A: Mobius, s: int, direction: str = "a_side") -> Poly:
    """x^(q^s+1) + a x^(q^s) + d x + b (a_side) or with a and d swapped (d_side).

    For order 2 the two coincide: x^(q^s+1) + a x^(q^s) + a x + b.
    """
    if not A.c_is_one:
        raise AffineMatrix("h(x) is defined for matrices with c = 1")
    Q = ctx_q.size**s
    lead, lin = (A.a, A.d) if direction == "a_side" else (A.d, A.a)
    c = [0] * (Q + 2)
    c[Q + 1] = 1
    c[Q] = lead.bits
    c[1] = lin.bits
    c[0] = A.b.bits
    return Poly._raw(ctx_q, c)


def factor_h(ctx_q: FieldCtx, A: Mobius, s: int, direction: str = "a_side") -> list[Poly]:
    """Irreducible factorization of h(x) assembled from the invariant families.

    Order 2: (x + sqrt b) times every stratum polynomial.  Order 3: the
    two linear factors x + a w + d w^2, x + a w^2 + d w times the stratum
    polynomials whose roots satisfy alpha^(q^s) = A^2(alpha) (a_side) or
    alpha^(q^s) = A(alpha) (d_side).
    """
    l = mobius_order(A)
    if l not in (2, 3):
        raise UnsupportedOrder(f"h(x) factorization needs order 2 or 3, got {l}")
    if direction not in ("a_side", "d_side"):
        raise ValueError(f"unknown direction {direction!r}")
    if l == 2:
        strata = order2_strata(ctx_q, A.a, A.b, s)
        out = [Poly(ctx_q, [A.b.sqrt(), ctx_q.one])]
        for recs in strata.values():
            out.extend(r.poly for r in recs)
        return sorted(out, key=Poly.sort_key)
    a, d = A.a, A.d
    strata = order3_strata(ctx_q, a, d, s)
    omega = Fe(ctx_q, _omega(ctx_q, ctx_q.gen_int))
    w2 = omega * omega
    out = [
        Poly(ctx_q, [a * omega + d * w2, ctx_q.one]),
        Poly(ctx_q, [a * w2 + d * omega, ctx_q.one]),
    ]
    target = 2 if direction == "a_side" else 1
    for e, recs in strata.items():
        for r in recs:
            # alpha^(q^s) = A^(u * s/e)(alpha)
            if r.frobenius_power is not None and (r.frobenius_power * (s // e)) % 3 == target:
                out.append(r.poly)
    return sorted(out, key=Poly.sort_key)


def factor_h_coset_labels(ctx_q: FieldCtx, A: Mobius, s: int, direction: str = "a_side") -> list[Poly]:
    """Order-3 factor list selected by coset label alone (T1 for a_side, T2 for d_side).

    Kept to compare the label-based selection with the Frobenius-verified
    one in :func:`factor_h`.
    """
    a, d = A.a, A.d
    sup, tower = build_tower(ctx_q, s)
    ai, di = tower.embed_int(a.bits), tower.embed_int(d.bits)
    omega_top = _omega(sup, sup.gen_int)
    omega = Fe(ctx_q, _omega(ctx_q, ctx_q.gen_int))
    w2 = omega * omega
    out = [
        Poly(ctx_q, [a * omega + d * w2, ctx_q.one]),
        Poly(ctx_q, [a * w2 + d * omega, ctx_q.one]),
    ]
    idx = 0 if direction == "a_side" else 1
    cubic = _order3_cubic(sup, ai, di)

    for e in _strata(s):
        ks = _t_sets_order3_ints(sup, ai, di, e * ctx_q.degree, omega_top)[idx]
        ks = {k for k in ks if _in_exact_stratum(sup, k, e, ctx_q.degree)}
        for cls in _frobenius_classes(sup, ks, ctx_q.degree):
            out.append(_descend(tower, _class_product(sup, cls, cubic)))
    return sorted(out, key=Poly.sort_key)


def frobenius_invariant_polys(A: Mobius, u: int = 1, s: int = 1) -> list[Poly]:
    """Irreducible g of degree s*ord(A) whose roots satisfy A^u(alpha) = alpha^(q^s).

    These are the degree-s*l factors of x^(q^s+1) + d_u x^(q^s) + a_u x + b_u,
    where A^u = [[a_u, b_u], [1, d_u]].  Works for any prime order l.
    """
    ctx = A.ctx
    l = mobius_order(A)
    if ctx.size**s > PRODUCT_CHECK_CAP:
        raise ScaleExceeded(f"q^s = {ctx.size ** s} is beyond the factoring cap")
    P = A**u
    if not P.c_is_one:
        raise AffineMatrix("A^u must have a nonzero lower-left entry")
    h = h_polynomial(ctx, P, s, "d_side")
    return [f for f in factor(h) if f.degree == s * l and frobenius_power(f, A, s, l) == u]


def verify_product(h: Poly, factors: list[Poly]) -> bool:
    acc = Poly.const(h.ctx, 1)
    for f in factors:
        acc = acc * f
    return acc == h


def is_invariant_irreducible(g: Poly, A: Mobius) -> bool:
    return is_irreducible(g) and check_invariance(g, A) is not None


__all__ = [
    "CubicClass",
    "InvariantPoly",
    "InvariantWitness",
    "OrbitPolynomial",
    "TSet",
    "check_invariance",
    "classify_cubic",
    "enum_order2_degree_2s",
    "enum_order3_degree_3s",
    "factor_h",
    "frobenius_invariant_polys",
    "frobenius_power",
    "g_k_order2",
    "g_k_order3",
    "h_polynomial",
    "orbit_polynomial",
    "order2_strata",
    "order3_matrix",
    "order3_strata",
    "stratum_counts_order2",
    "t_set_order2",
    "t_sets_order3",
    "verify_product",
]
