"""Binary Goppa, parity-check subcodes and extended Goppa codes.

All three are alternant codes: the binary kernel of a generalized
Vandermonde matrix H_R(v, L) over GF(2^n) with v_i = g(alpha_i)^-1.
R = r for the Goppa code, R = r + 1 for the parity-check subcode and for
the extended code, where the infinity column is (0, ..., 0, g_r^-1).

Binary matrices store each row as a Python int whose bit j is column j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    NonDivisor,
    NotClosed,
    OrbitNotUniform,
    RootAtA,
    RootInSupport,
    ScaleExceeded,
)
from .gf2e import Fe, FieldCtx
from .invariant import check_invariance, mobius_transform
from .polyring import Poly, format_poly
from .projline import (
    INF,
    Mobius,
    ProjPoint,
    apply,
    format_point,
    induced_permutation,
    mobius_order,
    orbits,
)

VARIANTS = ("goppa", "parity_check_subcode", "extended")
MAX_KERNEL_COLS = 128
MAX_MIN_DISTANCE_DIM = 20


@dataclass(frozen=True)
class SupportSpec:
    ctx: FieldCtx
    blocks: tuple  # tuple of tuples of points
    variant: str = "parity_check_subcode"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        pts = self.points
        if len(set(pts)) != len(pts):
            raise ValueError("support points are not distinct")
        for p in pts:
            if p is not INF and p.ctx != self.ctx:
                raise ValueError(f"support point {p!r} is not in {self.ctx}")
        if INF in pts and self.variant != "extended":
            raise ValueError("infinity is only allowed in the extended variant")

    @property
    def points(self) -> list[ProjPoint]:
        return [p for b in self.blocks for p in b]

    @property
    def includes_infinity(self) -> bool:
        return INF in self.points

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    @classmethod
    def flat(cls, ctx: FieldCtx, points: Iterable[ProjPoint], variant: str | None = None) -> SupportSpec:
        pts = list(points)
        if variant is None:
            variant = "extended" if INF in pts else "parity_check_subcode"
        return cls(ctx, tuple((p,) for p in pts), variant)


@dataclass(frozen=True)
class GoppaSpec:
    g: Poly
    support: SupportSpec
    A: Mobius | None = None

    def __post_init__(self):
        if self.g.ctx != self.support.ctx:
            raise ValueError("Goppa polynomial and support live in different fields")
        if not self.g.is_monic() or self.g.degree < 1:
            raise ValueError("Goppa polynomial must be monic of positive degree")
        if self.A is not None:
            if check_invariance(self.g, self.A) is None:
                raise ValueError(f"g is not invariant under {self.A!r}")
            for blk in self.support.blocks:
                for i, p in enumerate(blk):
                    if apply(self.A, p) != blk[(i + 1) % len(blk)]:
                        raise ValueError(f"block starting at {format_point(blk[0])} is not an A-cycle")

    @property
    def r(self) -> int:
        return self.g.degree


class BinMatrix:
    """Dense GF(2) matrix; row i is an int with bit j = entry (i, j)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, cols: int, data: Sequence[int] = ()):
        self.cols = cols
        self.data = list(data)
        self.rows = len(self.data)
        mask = (1 << cols) - 1
        if any(r & ~mask for r in self.data):
            raise ValueError("row wider than the matrix")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BinMatrix:
        cols = len(rows[0]) if rows else 0
        return cls(cols, [sum(1 << j for j, v in enumerate(r) if v & 1) for r in rows])

    @property
    def bits(self) -> int:
        """Row-major bit vector: bit i*cols + j is entry (i, j)."""
        out = 0
        for i, r in enumerate(self.data):
            out |= r << (i * self.cols)
        return out

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def dump(self) -> str:
        return "\n".join("".join("1" if (r >> j) & 1 else "0" for j in range(self.cols)) for r in self.data)

    @classmethod
    def parse(cls, text: str) -> BinMatrix:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            return cls(0, [])
        cols = len(lines[0])
        if any(len(ln) != cols or set(ln) - {"0", "1"} for ln in lines):
            raise ValueError("ragged or non-binary matrix dump")
        return cls(cols, [int(ln[::-1], 2) for ln in lines])

    def mul_transpose(self, other: BinMatrix) -> BinMatrix:
        """self * other^T over GF(2)."""
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return BinMatrix(
            other.rows,
            [sum((((r & s).bit_count()) & 1) << j for j, s in enumerate(other.data)) for r in self.data],
        )

    def syndrome_zero(self, v: int) -> bool:
        return all(not ((r & v).bit_count() & 1) for r in self.data)

    def rank(self) -> int:
        return len(_rref(self.data))

    def __eq__(self, other) -> bool:
        return isinstance(other, BinMatrix) and self.cols == other.cols and self.data == other.data

    def __repr__(self) -> str:
        return f"BinMatrix({self.rows}x{self.cols})"


def _rref(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon form; pivots are lowest set bits, rows sorted by pivot."""
    piv: dict[int, int] = {}
    for r in rows:
        for p, pr in piv.items():
            if (r >> p) & 1:
                r ^= pr
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for q in list(piv):
            if (piv[q] >> p) & 1:
                piv[q] ^= r
        piv[p] = r
    return [piv[p] for p in sorted(piv)]


def row_space(M: BinMatrix) -> BinMatrix:
    return BinMatrix(M.cols, _rref(M.data))


def same_row_space(M: BinMatrix, N: BinMatrix) -> bool:
    return M.cols == N.cols and _rref(M.data) == _rref(N.data)


def contains_row_space(big: BinMatrix, small: BinMatrix) -> bool:
    basis = _rref(big.data)
    return len(_rref(basis + small.data)) == len(basis)


@dataclass
class CodeReport:
    variant: str
    length: int
    dimension: int
    qc: tuple[int, int] | None
    automorphism_verified: bool
    min_distance: int | None
    field_degree: int
    field_modulus: int
    goppa_poly: str
    support: list[str]
    generator: BinMatrix | None = field(default=None, repr=False, compare=False)
    parity: BinMatrix | None = field(default=None, repr=False, compare=False)

    @property
    def quasi_cyclic_index(self) -> int | None:
        """tau, as in "tau-quasi-cyclic"."""
        return self.qc[1] if self.qc else None

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "length": self.length,
            "dimension": self.dimension,
            "qc": {"l": self.qc[0], "tau": self.qc[1]} if self.qc else None,
            "automorphism_verified": self.automorphism_verified,
            "min_distance": self.min_distance,
            "field": {"degree": self.field_degree, "modulus_hex": f"{self.field_modulus:x}"},
            "goppa_poly": self.goppa_poly,
            "support": self.support,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


# --- matrices -----------------------------------------------------------------


def parity_check_matrix(spec: GoppaSpec) -> list[list[Fe]]:
    """H_R(v, L) over GF(2^n), R = r (goppa) or r + 1 (other variants)."""
    ctx, g = spec.support.ctx, spec.g
    R = g.degree if spec.support.variant == "goppa" else g.degree + 1
    cols = []
    for p in spec.support.points:
        if p is INF:
            col = [0] * R
            col[-1] = ctx.inv(g.c[-1])
        else:
            gv = g.eval(p).bits
            if not gv:
                raise RootInSupport(f"g vanishes at support point {format_point(p)}", point=p)
            v, x = ctx.inv(gv), p.bits
            col = []
            for _ in range(R):
                col.append(v)
                v = ctx.mul(v, x)
        cols.append(col)
    return [[Fe(ctx, c[i]) for c in cols] for i in range(R)]


def binary_expand(H: Sequence[Sequence[Fe]], ctx: FieldCtx | None = None) -> BinMatrix:
    """Replace each entry by its n polynomial-basis coordinates (row i*n + b is bit b)."""
    if ctx is None:
        ctx = H[0][0].ctx
    n = ctx.degree
    cols = len(H[0]) if H else 0
    out = []
    for row in H:
        ints = [int(e) for e in row]
        for b in range(n):
            out.append(sum(((v >> b) & 1) << j for j, v in enumerate(ints)))
    return BinMatrix(cols, out)


def kernel_basis(B: BinMatrix) -> BinMatrix:
    """Reduced row-echelon basis of {x : B x^T = 0} over GF(2)."""
    if B.cols > MAX_KERNEL_COLS:
        raise ScaleExceeded(f"{B.cols} columns exceed the desk-scale limit {MAX_KERNEL_COLS}")
    red = _rref(B.data)
    pivots = [(r & -r).bit_length() - 1 for r in red]
    pivot_set = set(pivots)
    basis = []
    for f in range(B.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, red):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    G = BinMatrix(B.cols, _rref(basis))
    assert all(B.syndrome_zero(v) for v in G.data)
    return G


def min_distance_exhaustive(G: BinMatrix) -> int:
    """Minimum weight over all nonzero codewords (Gray-code walk)."""
    k = G.rows
    if k > MAX_MIN_DISTANCE_DIM:
        raise ScaleExceeded(f"dimension {k} exceeds {MAX_MIN_DISTANCE_DIM}")
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    rows = G.data
    best = G.cols + 1
    c = 0
    for i in range(1, 1 << k):
        c ^= rows[(i & -i).bit_length() - 1]
        w = c.bit_count()
        if w < best:
            best = w
    return best


def permute(v: int, psi: Sequence[int]) -> int:
    """c^psi with (c^psi)_i = c_psi(i)."""
    return sum(((v >> p) & 1) << i for i, p in enumerate(psi))


def cycle_type(psi: Sequence[int]) -> list[int]:
    seen = [False] * len(psi)
    out = []
    for i in range(len(psi)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = psi[j]
            n += 1
        out.append(n)
    return out


def build_code(spec: GoppaSpec, min_distance: bool = True) -> CodeReport:
    """Kernel, automorphism check and (for small dimension) minimum distance."""
    sup = spec.support
    qc = None
    l = None
    if spec.A is not None:
        l = mobius_order(spec.A)
        sizes = {len(b) for b in sup.blocks}
        if sizes != {l}:
            raise OrbitNotUniform(f"block sizes {sorted(sizes)} differ from the order {l} of A")
    H = parity_check_matrix(spec)
    B = binary_expand(H, sup.ctx)
    G = kernel_basis(B)
    verified = False
    if spec.A is not None:
        psi = induced_permutation(spec.A, sup.points)
        cycles = cycle_type(psi)
        verified = all(c == l for c in cycles) and all(B.syndrome_zero(permute(v, psi)) for v in G.data)
        qc = (l, len(cycles))
    dist = None
    if min_distance and 0 < G.rows <= MAX_MIN_DISTANCE_DIM:
        dist = min_distance_exhaustive(G)
    return CodeReport(
        variant=sup.variant,
        length=len(sup),
        dimension=G.rows,
        qc=qc,
        automorphism_verified=verified,
        min_distance=dist,
        field_degree=sup.ctx.degree,
        field_modulus=sup.ctx.modulus,
        goppa_poly=format_poly(spec.g),
        support=[format_point(p) for p in sup.points],
        generator=G,
        parity=B,
    )


# --- support constructions -------------------------------------------------------


def support_transform(spec: GoppaSpec, A: Mobius) -> GoppaSpec:
    """(g', L') with g' = (x + d)^r g(A(x)) (made monic) and L' = A^-1(L).

    Both specs define the same A_{r+1} code coordinate by coordinate.
    """
    if spec.support.variant == "goppa":
        raise ValueError("the transform applies to the A_{r+1} variants")
    if not A.c_is_one:
        raise ValueError("the transform needs a matrix with c = 1")
    g = spec.g
    if not g.eval(A.a):
        raise RootAtA(f"g(a) = 0 for a = {A.a!r}")
    g2 = mobius_transform(g, A).monic()
    Ainv = A.inverse()
    new_pts = [apply(Ainv, p) for p in spec.support.points]
    for p in new_pts:
        if p is not INF and not g2.eval(p):
            raise RootInSupport(f"g' vanishes at {format_point(p)}", point=p)
    variant = "extended" if INF in new_pts else "parity_check_subcode"
    sizes = [len(b) for b in spec.support.blocks]
    blocks, i = [], 0
    for n in sizes:
        blocks.append(tuple(new_pts[i : i + n]))
        i += n
    # the symmetry claim is not carried over: A^-1 conjugates it
    return GoppaSpec(g2, SupportSpec(spec.support.ctx, tuple(blocks), variant), None)


def orbit_support(A: Mobius, domain: Sequence[ProjPoint], variant: str | None = None) -> SupportSpec:
    """Blocks = the non-fixed A-orbits of a closed domain."""
    blocks = [tuple(o) for o in orbits(A, domain) if len(o) > 1]
    has_inf = any(INF in b for b in blocks)
    if variant is None:
        variant = "extended" if has_inf else "parity_check_subcode"
    return SupportSpec(A.ctx, tuple(blocks), variant)


def unit_group(ctx: FieldCtx, n: int) -> list[Fe]:
    """U_n = {x : x^n = 1} in increasing encoding order."""
    if n <= 0 or (ctx.size - 1) % n:
        raise NonDivisor(f"{n} does not divide {ctx.size - 1}")
    z = ctx.power((ctx.size - 1) // n)
    out, x = [], ctx.one
    for _ in range(n):
        out.append(x)
        x = x * z
    return sorted(out)


def unit_group_support(ctx_q2: FieldCtx, n: int, A: Mobius) -> SupportSpec:
    """Orbit-blocked support on U_n with the fixed points of A dropped."""
    U = unit_group(ctx_q2, n)
    members = set(U)
    for x in U:
        if apply(A, x) not in members:
            raise NotClosed(f"A maps {format_point(x)} outside U_{n}")
    return orbit_support(A, U, "parity_check_subcode")


__all__ = [
    "BinMatrix",
    "CodeReport",
    "GoppaSpec",
    "SupportSpec",
    "binary_expand",
    "build_code",
    "contains_row_space",
    "cycle_type",
    "kernel_basis",
    "min_distance_exhaustive",
    "orbit_support",
    "parity_check_matrix",
    "permute",
    "row_space",
    "same_row_space",
    "support_transform",
    "unit_group",
    "unit_group_support",
]
