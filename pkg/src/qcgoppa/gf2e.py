"""Binary fields GF(2^m) in a polynomial basis.

Elements are bit-packed integers: bit i is the coefficient of xi^i where
xi is a root of the context modulus.  A :class:`FieldCtx` does all the
arithmetic on raw ints; :class:`Fe` wraps an int together with its
context for the public API and refuses to mix contexts.

Addition is XOR.  Multiplication is carry-less multiply followed by
reduction; there are no log/antilog tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources

from .errors import (
    ContextMismatch,
    DegreeMismatch,
    DivisionByZero,
    NonDivisorDegree,
    ReducibleModulus,
    ScaleExceeded,
    TableMiss,
)

MAX_DEGREE = 24
# fields larger than this are never enumerated element by element
MAX_ENUM = 1 << 20


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n < 2**48 here)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# --- GF(2)[x] helpers on bit-packed ints -------------------------------


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _bmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _bgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _bmod(a, b)
    return a


def _bmulmod(a: int, b: int, m: int) -> int:
    return _bmod(_clmul(a, b), m)


def gf2_poly_is_irreducible(f: int) -> bool:
    """Rabin's test for a polynomial over GF(2) given as a bit mask."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    # x^(2^k) mod f, for k = 1..n
    powers = {}
    t = 2
    for k in range(1, n + 1):
        t = _bmulmod(t, t, f)
        powers[k] = t
    if powers[n] != _bmod(2, f):
        return False
    for p in prime_factors(n):
        if _bgcd(f, powers[n // p] ^ 2) != 1:
            return False
    return True


def format_gf2_poly(f: int) -> str:
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms) if terms else "0"


# --- modulus table ------------------------------------------------------


@lru_cache(maxsize=None)
def _load_table() -> dict[int, int]:
    text = resources.files("qcgoppa.data").joinpath("moduli.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        deg, hexmod = line.split()
        table[int(deg)] = int(hexmod, 16)
    return table


_OVERRIDES: dict[int, int] = {}


def register_modulus(degree: int, modulus: int) -> None:
    """Override the table entry for ``degree`` (used by ``--modulus``)."""
    make_field(degree, modulus)  # validates
    _OVERRIDES[degree] = modulus
    default_field.cache_clear()


def clear_overrides() -> None:
    _OVERRIDES.clear()
    default_field.cache_clear()


def table_modulus(degree: int) -> int:
    if degree in _OVERRIDES:
        return _OVERRIDES[degree]
    table = _load_table()
    if degree in table:
        return table[degree]
    found = search_primitive_modulus(degree)
    if found is None:
        raise TableMiss(f"no modulus of degree {degree}")
    return found


def search_primitive_modulus(degree: int) -> int | None:
    """Smallest-encoding primitive polynomial of the given degree."""
    if not 1 <= degree <= MAX_DEGREE:
        return None
    order = (1 << degree) - 1
    ps = prime_factors(order)
    for f in range((1 << degree) | 1, 1 << (degree + 1), 2):
        if not gf2_poly_is_irreducible(f):
            continue
        if degree == 1 or all(_bpowmod(2, order // p, f) != 1 for p in ps):
            return f
    return None


def _bpowmod(a: int, e: int, m: int) -> int:
    r = 1
    a = _bmod(a, m)
    while e:
        if e & 1:
            r = _bmulmod(r, a, m)
        a = _bmulmod(a, a, m)
        e >>= 1
    return _bmod(r, m)


# --- fields ---------------------------------------------------------------


class FieldCtx:
    """The field GF(2^degree) defined by ``modulus`` (bit mask, degree+1 bits)."""

    __slots__ = ("degree", "modulus", "size", "__dict__")

    def __init__(self, degree: int, modulus: int):
        if not 1 <= degree <= MAX_DEGREE:
            raise DegreeMismatch(f"degree {degree} outside 1..{MAX_DEGREE}")
        if modulus.bit_length() - 1 != degree:
            raise DegreeMismatch(
                f"modulus {format_gf2_poly(modulus)} does not have degree {degree}"
            )
        # degree 1 also admits the modulus x
        if degree > 1 and not modulus & 1 or not gf2_poly_is_irreducible(modulus):
            raise ReducibleModulus(f"{format_gf2_poly(modulus)} is reducible over GF(2)")
        self.degree = degree
        self.modulus = modulus
        self.size = 1 << degree

    def __repr__(self) -> str:
        return f"FieldCtx({self.degree}, {format_gf2_poly(self.modulus)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.modulus))

    @property
    def spec(self) -> str:
        """``<degree>:<hex>`` as accepted by the CLI."""
        return f"{self.degree}:{self.modulus:x}"

    # raw int arithmetic

    def mul(self, a: int, b: int) -> int:
        m, top, mod = self.degree, self.size, self.modulus
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        for _ in range(self.degree - 1):
            a = self.mul(a, a)
        return a

    def frob(self, a: int, k: int = 1) -> int:
        """a^(2^k)."""
        for _ in range(k % self.degree if self.degree > 1 else 0):
            a = self.mul(a, a)
        return a

    def trace(self, a: int, sub_degree: int = 1) -> int:
        if self.degree % sub_degree:
            raise NonDivisorDegree(f"{sub_degree} does not divide {self.degree}")
        acc = 0
        for _ in range(self.degree // sub_degree):
            acc ^= a
            for _ in range(sub_degree):
                a = self.mul(a, a)
        return acc

    def order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.size - 1
        for p in prime_factors(n):
            while n % p == 0 and self.pow(a, n // p) == 1:
                n //= p
        return n

    def in_subfield(self, a: int, sub_degree: int) -> bool:
        return self.frob(a, sub_degree) == a

    # element construction

    def __call__(self, value: int) -> Fe:
        if not 0 <= value < self.size:
            raise ValueError(f"{value} is not an element encoding of {self}")
        return Fe(self, value)

    @property
    def zero(self) -> Fe:
        return Fe(self, 0)

    @property
    def one(self) -> Fe:
        return Fe(self, 1)

    @cached_property
    def gen_int(self) -> int:
        """Canonical primitive element: smallest encoding of full order."""
        n = self.size - 1
        ps = prime_factors(n)
        for a in range(1, self.size):
            if all(self.pow(a, n // p) != 1 for p in ps):
                return a
        raise AssertionError("no primitive element")  # impossible

    @property
    def gen(self) -> Fe:
        return Fe(self, self.gen_int)

    def power(self, k: int) -> Fe:
        """gen^k."""
        return Fe(self, self.pow(self.gen_int, k % (self.size - 1)))

    def elements(self):
        if self.size > MAX_ENUM:
            raise ScaleExceeded(f"refusing to enumerate {self}")
        return (Fe(self, i) for i in range(self.size))

    def log(self, a: int) -> int:
        """Discrete log of nonzero ``a`` to the canonical generator."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return _dlog(self, a)

    @cached_property
    def trace_one_int(self) -> int:
        """Smallest-encoding element of absolute trace 1."""
        for a in range(1, self.size):
            if self.trace(a) == 1:
                return a
        raise AssertionError("trace is surjective")  # impossible


@lru_cache(maxsize=32)
def _baby_steps(ctx: FieldCtx) -> tuple[dict[int, int], int, int]:
    n = ctx.size - 1
    step = math.isqrt(n) + 1
    table = {}
    x = 1
    g = ctx.gen_int
    for j in range(step):
        table.setdefault(x, j)
        x = ctx.mul(x, g)
    giant = ctx.inv(ctx.pow(g, step))
    return table, step, giant


def _dlog(ctx: FieldCtx, a: int) -> int:
    table, step, giant = _baby_steps(ctx)
    y = a
    for i in range(step + 1):
        if y in table:
            return (i * step + table[y]) % (ctx.size - 1)
        y = ctx.mul(y, giant)
    raise AssertionError("discrete log not found")  # impossible for a != 0


class Fe:
    """An element of a :class:`FieldCtx`."""

    __slots__ = ("ctx", "bits")

    def __init__(self, ctx: FieldCtx, bits: int):
        self.ctx = ctx
        self.bits = bits

    def _other(self, other) -> int:
        if isinstance(other, Fe):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other.bits
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fe(self.ctx, self.bits ^ o)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fe(self.ctx, self.ctx.mul(self.bits, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fe(self.ctx, self.ctx.div(self.bits, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fe(self.ctx, self.ctx.div(o, self.bits))

    def __pow__(self, e: int):
        return Fe(self.ctx, self.ctx.pow(self.bits, e))

    def inverse(self) -> Fe:
        return Fe(self.ctx, self.ctx.inv(self.bits))

    def sqrt(self) -> Fe:
        return Fe(self.ctx, self.ctx.sqrt(self.bits))

    def order(self) -> int:
        return self.ctx.order(self.bits)

    def trace(self, sub_degree: int = 1) -> Fe:
        return Fe(self.ctx, self.ctx.trace(self.bits, sub_degree))

    def frob(self, k: int = 1) -> Fe:
        return Fe(self.ctx, self.ctx.frob(self.bits, k))

    def log(self) -> int:
        return self.ctx.log(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    def __index__(self) -> int:
        return self.bits

    def __eq__(self, other) -> bool:
        if isinstance(other, Fe):
            return self.bits == other.bits and self.ctx == other.ctx
        if isinstance(other, int):
            return other in (0, 1) and self.bits == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.modulus, self.bits))

    def __lt__(self, other: Fe) -> bool:
        return self.bits < other.bits

    def __repr__(self) -> str:
        return format_element(self)


def format_element(x: Fe) -> str:
    """``0``, ``1`` or ``g^k`` in powers of the canonical generator."""
    if x.bits in (0, 1):
        return str(x.bits)
    return f"g^{x.ctx.log(x.bits)}"


def make_field(m: int, modulus: int) -> FieldCtx:
    return FieldCtx(m, modulus)


SHORTHANDS = {"f2": 1, "f4": 2, "f8": 3, "f16": 4, "f32": 5, "f64": 6, "f1024": 10}


@lru_cache(maxsize=None)
def default_field(m: int) -> FieldCtx:
    """GF(2^m) with the registered modulus."""
    return FieldCtx(m, table_modulus(m))


def parse_field(text: str) -> FieldCtx:
    """``f64`` style shorthand, ``<degree>`` or ``<degree>:<modulus-hex>``."""
    text = text.strip().lower()
    if text in SHORTHANDS:
        return default_field(SHORTHANDS[text])
    if ":" in text:
        deg, hexmod = text.split(":", 1)
        return FieldCtx(int(deg), int(hexmod, 16))
    return default_field(int(text))


def arith(ctx: FieldCtx, op: str, *operands):
    """Dispatch one of add/mul/inv/pow/sqrt/order on elements of ``ctx``."""
    for x in operands:
        if isinstance(x, Fe) and x.ctx != ctx:
            raise ContextMismatch(f"operand from {x.ctx}, expected {ctx}")
    if op == "add":
        return operands[0] + operands[1]
    if op == "mul":
        return operands[0] * operands[1]
    if op == "inv":
        return operands[0].inverse()
    if op == "pow":
        return operands[0] ** operands[1]
    if op == "sqrt":
        return operands[0].sqrt()
    if op == "order":
        return operands[0].order()
    raise ValueError(f"unknown op {op!r}")


def trace(sup: FieldCtx, sub_degree: int, x: Fe) -> Fe:
    """Relative trace from GF(2^sup.degree) down to GF(2^sub_degree)."""
    if x.ctx != sup:
        raise ContextMismatch(f"{x!r} is not in {sup}")
    return x.trace(sub_degree)


def solve_artin_schreier(ctx: FieldCtx, t: Fe) -> tuple[Fe, Fe] | None:
    """Both roots of y^2 + y = t, or None when Tr(t) = 1."""
    if t.ctx != ctx:
        raise ContextMismatch(f"{t!r} is not in {ctx}")
    if ctx.trace(t.bits) != 0:
        return None
    y = _as_root(ctx, t.bits)
    lo, hi = sorted((y, y ^ 1))
    return Fe(ctx, lo), Fe(ctx, hi)


def _as_root(ctx: FieldCtx, t: int) -> int:
    m = ctx.degree
    if m % 2:
        # half-trace
        acc, x = 0, t
        for _ in range((m + 1) // 2):
            acc ^= x
            x = ctx.mul(ctx.mul(x, x), ctx.mul(x, x))
        return acc
    # y = sum_{i<m-1} (sum_{j>i} delta^(2^j)) t^(2^i), with Tr(delta) = 1
    delta = ctx.trace_one_int
    dpows = [delta]
    for _ in range(m - 1):
        dpows.append(ctx.mul(dpows[-1], dpows[-1]))
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] ^ dpows[j]
    acc, x = 0, t
    for i in range(m - 1):
        acc ^= ctx.mul(suffix[i + 1], x)
        x = ctx.mul(x, x)
    return acc


def solve_artin_schreier_exhaustive(ctx: FieldCtx, t: Fe) -> tuple[Fe, Fe] | None:
    """Brute-force reference for :func:`solve_artin_schreier`."""
    sols = [y for y in ctx.elements() if y * y + y == t]
    return (sols[0], sols[1]) if sols else None


# --- towers -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TowerEmbedding:
    """An explicit field embedding ``sub -> sup`` fixed by the image of xi."""

    sub: FieldCtx
    sup: FieldCtx
    image_of_sub_generator: Fe

    @cached_property
    def _powers(self) -> list[int]:
        out, x = [], 1
        for _ in range(self.sub.degree):
            out.append(x)
            x = self.sup.mul(x, self.image_of_sub_generator.bits)
        return out

    @cached_property
    def _echelon(self) -> list[tuple[int, int, int]]:
        # (pivot bit, reduced vector, combination of sub basis bits)
        rows: list[tuple[int, int, int]] = []
        for i, v in enumerate(self._powers):
            combo = 1 << i
            for piv, rv, rc in rows:
                if v >> piv & 1:
                    v ^= rv
                    combo ^= rc
            assert v, "embedding powers are linearly independent"
            piv = v.bit_length() - 1
            rows.append((piv, v, combo))
        return rows

    @property
    def degree(self) -> int:
        return self.sup.degree // self.sub.degree

    def embed_int(self, x: int) -> int:
        acc, i = 0, 0
        while x:
            if x & 1:
                acc ^= self._powers[i]
            x >>= 1
            i += 1
        return acc

    def embed(self, x: Fe) -> Fe:
        if x.ctx != self.sub:
            raise ContextMismatch(f"{x!r} is not in {self.sub}")
        return Fe(self.sup, self.embed_int(x.bits))

    def contains(self, y: Fe) -> bool:
        return self.sup.in_subfield(y.bits, self.sub.degree)

    def pullback_int(self, y: int) -> int | None:
        combo = 0
        for piv, rv, rc in sorted(self._echelon, key=lambda r: -r[0]):
            if y >> piv & 1:
                y ^= rv
                combo ^= rc
        return None if y else combo

    def pullback(self, y: Fe) -> Fe:
        if y.ctx != self.sup:
            raise ContextMismatch(f"{y!r} is not in {self.sup}")
        x = self.pullback_int(y.bits)
        if x is None:
            raise ValueError(f"{y!r} does not lie in the image of {self.sub}")
        return Fe(self.sub, x)


def subfield_generator(sup: FieldCtx, sub_degree: int) -> int:
    """gen^((2^M - 1)/(2^d - 1)): a primitive element of the degree-d subfield."""
    if sup.degree % sub_degree:
        raise NonDivisorDegree(f"{sub_degree} does not divide {sup.degree}")
    return sup.pow(sup.gen_int, (sup.size - 1) // ((1 << sub_degree) - 1))


def roots_of_gf2_poly(sup: FieldCtx, f: int) -> list[int]:
    """Roots in ``sup`` of an irreducible GF(2)-polynomial whose degree divides sup.degree."""
    d = f.bit_length() - 1
    if d == 1:
        return [f & 1]
    z = subfield_generator(sup, d)
    x = 1
    for _ in range((1 << d) - 1):
        if _eval_gf2(sup, f, x) == 0:
            break
        x = sup.mul(x, z)
    else:
        return []
    roots = [x]
    for _ in range(d - 1):
        roots.append(sup.mul(roots[-1], roots[-1]))
    return sorted(set(roots))


def _eval_gf2(ctx: FieldCtx, f: int, x: int) -> int:
    acc = 0
    for i in range(f.bit_length() - 1, -1, -1):
        acc = ctx.mul(acc, x) ^ (f >> i & 1)
    return acc


def embedding_into(sub: FieldCtx, sup: FieldCtx, root: int | None = None) -> TowerEmbedding:
    """Embed ``sub`` into ``sup`` sending xi to ``root`` (default: smallest root)."""
    if sup.degree % sub.degree:
        raise NonDivisorDegree(f"{sub.degree} does not divide {sup.degree}")
    roots = roots_of_gf2_poly(sup, sub.modulus)
    if root is None:
        root = roots[0]
    elif root not in roots:
        raise ValueError("requested image is not a root of the sub-field modulus")
    return TowerEmbedding(sub, sup, Fe(sup, root))


def build_tower(sub: FieldCtx, s: int) -> tuple[FieldCtx, TowerEmbedding]:
    """GF(q^s) from the modulus table together with the canonical embedding of GF(q)."""
    if s < 1 or sub.degree * s > MAX_DEGREE:
        raise ScaleExceeded(f"tower of degree {sub.degree}*{s} exceeds the cap")
    if s == 1:
        return sub, TowerEmbedding(sub, sub, Fe(sub, sub.modulus & 1 if sub.degree == 1 else 2))
    sup = default_field(sub.degree * s)
    return sup, embedding_into(sub, sup)
