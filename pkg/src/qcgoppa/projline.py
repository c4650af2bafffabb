"""The projective line over GF(q) and the action of PGL_2 on it.

Points are :class:`~qcgoppa.gf2e.Fe` values or the sentinel :data:`INF`.
Matrices are kept normalized: lower-left entry 1 when it is nonzero,
otherwise lower-right entry 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    CubeRootAbsent,
    DomainNotClosed,
    OrderNotFound,
    ParseError,
    UnsupportedOrder,
)
from .gf2e import Fe, FieldCtx, format_element, solve_artin_schreier
from .polyring import parse_element


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ProjPoint = Union[Fe, _Infinity]


def point_key(p: ProjPoint, ctx: FieldCtx | None = None) -> int:
    """Sort key: finite points by encoding, infinity after all of them."""
    if p is INF:
        return 1 << 32
    return p.bits


def format_point(p: ProjPoint) -> str:
    return "inf" if p is INF else format_element(p)


def parse_point(ctx: FieldCtx, text: str) -> ProjPoint:
    t = text.strip().lower()
    if t in ("inf", "infinity", "∞"):
        return INF
    return parse_element(ctx, t)


def projective_line(ctx: FieldCtx) -> list[ProjPoint]:
    return [*ctx.elements(), INF]


@dataclass(frozen=True)
class Mobius:
    """x -> (a x + b) / (c x + d) with c in {0, 1}; d = 1 whenever c = 0."""

    a: Fe
    b: Fe
    d: Fe
    c_is_one: bool = True

    def __post_init__(self):
        ctx = self.a.ctx
        if not (self.b.ctx == ctx and self.d.ctx == ctx):
            raise ValueError("matrix entries from different fields")
        if not self.c_is_one and self.d.bits != 1:
            raise ValueError("affine representatives must have d = 1")
        if not self.det():
            raise ValueError("singular matrix")

    @classmethod
    def from_entries(cls, a: Fe, b: Fe, c: Fe, d: Fe) -> Mobius:
        """Normalize an arbitrary invertible 2x2 matrix."""
        if c:
            s = c.inverse()
            return cls(a * s, b * s, d * s, True)
        if not d:
            raise ValueError("singular matrix")
        s = d.inverse()
        return cls(a * s, b * s, d * s, False)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> Mobius:
        return cls(ctx.one, ctx.zero, ctx.one, False)

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    @property
    def c(self) -> Fe:
        return self.ctx.one if self.c_is_one else self.ctx.zero

    def entries(self) -> tuple[Fe, Fe, Fe, Fe]:
        return self.a, self.b, self.c, self.d

    def det(self) -> Fe:
        return self.a * self.d + self.b * self.c

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply(self, p)

    def __matmul__(self, other: Mobius) -> Mobius:
        a1, b1, c1, d1 = self.entries()
        a2, b2, c2, d2 = other.entries()
        return Mobius.from_entries(
            a1 * a2 + b1 * c2, a1 * b2 + b1 * d2, c1 * a2 + d1 * c2, c1 * b2 + d1 * d2
        )

    def __pow__(self, k: int) -> Mobius:
        if k < 0:
            return self.inverse() ** (-k)
        r, base = Mobius.identity(self.ctx), self
        while k:
            if k & 1:
                r = r @ base
            k >>= 1
            if k:
                base = base @ base
        return r

    def inverse(self) -> Mobius:
        # char 2: adj([[a,b],[c,d]]) = [[d,b],[c,a]]
        return Mobius.from_entries(self.d, self.b, self.c, self.a)

    def is_scalar(self) -> bool:
        return not self.c_is_one and not self.b and self.a.bits == 1

    def embed(self, emb) -> Mobius:
        """The same map with entries pushed through a tower embedding."""
        return Mobius(emb.embed(self.a), emb.embed(self.b), emb.embed(self.d), self.c_is_one)

    def __repr__(self) -> str:
        return format_matrix(self)


def apply(A: Mobius, p: ProjPoint) -> ProjPoint:
    a, b, d = A.a, A.b, A.d
    if not A.c_is_one:
        return INF if p is INF else a * p + b
    if p is INF:
        return a
    den = p + d
    if not den:
        return INF
    return (a * p + b) / den


def mobius_order(A: Mobius) -> int:
    """Least l >= 1 with A^l scalar, searched up to q + 1."""
    cap = A.ctx.size + 1
    P = A
    for l in range(1, cap + 1):
        if P.is_scalar():
            return l
        P = P @ A
    raise OrderNotFound(f"{A!r} has no order <= {cap}")


def orbit_of(A: Mobius, p: ProjPoint) -> list[ProjPoint]:
    out = [p]
    nxt = apply(A, p)
    while nxt != p:
        out.append(nxt)
        nxt = apply(A, nxt)
    return out


def orbits(A: Mobius, domain: Sequence[ProjPoint]) -> list[list[ProjPoint]]:
    """Partition a closed domain into A-cycles.

    Each cycle starts at its smallest member; cycles are listed by that
    member, infinity sorting last.
    """
    members = set(domain)
    if len(members) != len(domain):
        raise ValueError("domain contains duplicate points")
    for p in domain:
        if apply(A, p) not in members:
            raise DomainNotClosed(f"A({format_point(p)}) leaves the domain", witness=p)
    seen: set = set()
    out = []
    for p in sorted(domain, key=point_key):
        if p in seen:
            continue
        orb = orbit_of(A, p)
        seen.update(orb)
        out.append(orb)
    return out


def induced_permutation(A: Mobius, support: Sequence[ProjPoint]) -> list[int]:
    """psi with support[psi[i]] = A^-1(support[i])."""
    index = {p: i for i, p in enumerate(support)}
    if len(index) != len(support):
        raise ValueError("support contains duplicate points")
    Ainv = A.inverse()
    psi = []
    for p in support:
        img = apply(Ainv, p)
        if img not in index:
            raise DomainNotClosed(f"A^-1({format_point(p)}) leaves the support", witness=p)
        psi.append(index[img])
    return psi


def fixed_points(A: Mobius) -> list[ProjPoint]:
    """Fixed points of A on GF(q) and infinity."""
    ctx = A.ctx
    a, b, d = A.a, A.b, A.d
    if not A.c_is_one:
        if a.bits == 1:
            return [INF] if b else projective_line(ctx)
        return [b / (a + 1), INF]
    # zeta^2 + (a + d) zeta + b = 0
    if a == d:
        return [b.sqrt()]
    s = a + d
    sol = solve_artin_schreier(ctx, b / (s * s))
    if sol is None:
        return []
    return sorted((z * s for z in sol), key=point_key)


def enum_order_l(ctx: FieldCtx, l: int, filter: str = "all") -> list[Mobius]:
    """Closed-form families of normalized matrices of order 2 or 3."""
    if l not in (2, 3):
        raise UnsupportedOrder(f"no closed-form family for order {l}")
    if filter not in ("all", "a_zero", "d_zero", "b_zero"):
        raise ValueError(f"unknown filter {filter!r}")
    if l == 3 and filter == "b_zero" and (ctx.size - 1) % 3:
        raise CubeRootAbsent(f"3 does not divide {ctx.size - 1}")
    out = []
    for a in ctx.elements():
        for t in ctx.elements():
            if l == 2:
                d, b = a, t
                if a * a == b:
                    continue
            else:
                d = t
                if a == d:
                    continue
                b = a * a + a * d + d * d
            if filter == "a_zero" and a or filter == "d_zero" and d or filter == "b_zero" and b:
                continue
            out.append(Mobius(a, b, d, True))
    return out


def format_matrix(A: Mobius) -> str:
    a, b, c, d = (format_element(v) for v in A.entries())
    return f"[[{a},{b}],[{c},{d}]]"


def parse_matrix(ctx: FieldCtx, text: str) -> Mobius:
    """Parse ``[[a,b],[c,d]]`` with entries in generator-power notation."""
    t = text.replace(" ", "")
    m = re.fullmatch(r"\[\[([^,\]]+),([^,\]]+)\],\[([^,\]]+),([^,\]]+)\]\]", t)
    if not m:
        raise ParseError(f"cannot parse matrix {text!r}")
    a, b, c, d = (parse_element(ctx, g) for g in m.groups())
    try:
        return Mobius.from_entries(a, b, c, d)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
