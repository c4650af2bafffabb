"""Dense univariate polynomials over a :class:`FieldCtx`.

Coefficients are stored lowest degree first as raw field ints; the
public ``coeffs`` view hands out :class:`Fe` values.  Two irreducibility
engines are provided (Rabin's Frobenius test and trial division) along
with a brute-force factorization oracle and a Cantor-Zassenhaus style
factorization used where the oracle cannot reach.
"""

from __future__ import annotations

import random
import re
from functools import reduce
from typing import Iterable

from .errors import (
    ContextMismatch,
    DegreeZero,
    DivisionByZeroPoly,
    ParseError,
    ScaleExceeded,
)
from .gf2e import MAX_ENUM, Fe, FieldCtx, format_element, prime_factors

# trial-division candidates per degree allowed in the oracle engines
ORACLE_CAP = 1 << 16


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    __slots__ = ("ctx", "c")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        vals = []
        for v in coeffs:
            if isinstance(v, Fe):
                if v.ctx != ctx:
                    raise ContextMismatch(f"coefficient {v!r} not in {ctx}")
                vals.append(v.bits)
            else:
                if not 0 <= v < ctx.size:
                    raise ValueError(f"{v} is not an element of {ctx}")
                vals.append(int(v))
        self.ctx = ctx
        self.c = tuple(_strip(vals))

    @classmethod
    def _raw(cls, ctx: FieldCtx, c: list[int]) -> Poly:
        p = cls.__new__(cls)
        p.ctx = ctx
        p.c = tuple(_strip(c))
        return p

    @classmethod
    def x(cls, ctx: FieldCtx) -> Poly:
        return cls._raw(ctx, [0, 1])

    @classmethod
    def const(cls, ctx: FieldCtx, v) -> Poly:
        return cls._raw(ctx, [int(v)])

    @classmethod
    def from_roots(cls, ctx: FieldCtx, roots: Iterable) -> Poly:
        c = [1]
        for r in roots:
            c = _mul(ctx, c, [int(r), 1])
        return cls._raw(ctx, c)

    @classmethod
    def from_gf2_mask(cls, ctx: FieldCtx, mask: int) -> Poly:
        return cls._raw(ctx, [mask >> i & 1 for i in range(mask.bit_length())])

    # structure

    @property
    def coeffs(self) -> list[Fe]:
        return [Fe(self.ctx, v) for v in self.c]

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self) -> Fe:
        return Fe(self.ctx, self.c[-1] if self.c else 0)

    def coeff(self, i: int) -> Fe:
        return Fe(self.ctx, self.c[i] if 0 <= i < len(self.c) else 0)

    def is_zero(self) -> bool:
        return not self.c

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.c)

    def _check(self, other: Poly) -> None:
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, Fe):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{other!r} not in {self.ctx}")
            return Poly._raw(self.ctx, [other.bits])
        if isinstance(other, int) and other in (0, 1):
            return Poly._raw(self.ctx, [other])
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Poly._raw(self.ctx, _add(self.c, o.c))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Poly._raw(self.ctx, _mul(self.ctx, self.c, o.c))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        r, b = [1], list(self.c)
        while e:
            if e & 1:
                r = _mul(self.ctx, r, b)
            e >>= 1
            if e:
                b = _mul(self.ctx, b, b)
        return Poly._raw(self.ctx, r)

    def __divmod__(self, other):
        o = self._coerce(other)
        q, r = _divmod(self.ctx, list(self.c), o.c)
        return Poly._raw(self.ctx, q), Poly._raw(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x: Fe) -> Fe:
        if isinstance(x, Fe) and x.ctx != self.ctx:
            raise ContextMismatch(f"{x!r} not in {self.ctx}")
        return Fe(self.ctx, _eval(self.ctx, self.c, int(x)))

    def derivative(self) -> Poly:
        return Poly._raw(self.ctx, [v if i % 2 else 0 for i, v in enumerate(self.c)][1:])

    def monic(self) -> Poly:
        if not self.c:
            raise DivisionByZeroPoly("zero polynomial has no monic form")
        return self.scale(self.ctx.inv(self.c[-1]))

    def scale(self, s: int) -> Poly:
        return Poly._raw(self.ctx, [self.ctx.mul(s, v) for v in self.c])

    def map_coeffs(self, f) -> Poly:
        """Apply an int -> int map (e.g. an embedding) to every coefficient."""
        return Poly._raw(self.ctx, [f(v) for v in self.c])

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.c == other.c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.modulus, self.c))

    def sort_key(self) -> tuple:
        return (self.degree, tuple(reversed(self.c)))

    def __repr__(self) -> str:
        return format_poly(self)


# --- raw list kernels -------------------------------------------------------


def _add(a, b) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] ^= v
    return out


def _mul(ctx: FieldCtx, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    mul = ctx.mul
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= mul(x, y)
    return out


def _divmod(ctx: FieldCtx, a: list[int], b) -> tuple[list[int], list[int]]:
    b = list(b)
    _strip(b)
    if not b:
        raise DivisionByZeroPoly("polynomial division by zero")
    db = len(b) - 1
    a = _strip(list(a))
    if len(a) - 1 < db:
        return [], a
    inv_lead = ctx.inv(b[-1])
    mul = ctx.mul
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        coef = a[i]
        if coef == 0:
            continue
        t = mul(coef, inv_lead)
        q[i - db] = t
        base = i - db
        for j in range(db + 1):
            if b[j]:
                a[base + j] ^= mul(t, b[j])
    return q, _strip(a[:db])


def _mod(ctx, a, b) -> list[int]:
    return _divmod(ctx, a, b)[1]


def _sqr(ctx: FieldCtx, a) -> list[int]:
    out = [0] * (2 * len(a) - 1) if a else []
    for i, v in enumerate(a):
        out[2 * i] = ctx.mul(v, v)
    return out


def _eval(ctx: FieldCtx, c, x: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = ctx.mul(acc, x) ^ v
    return acc


def _monic(ctx, a) -> list[int]:
    inv = ctx.inv(a[-1])
    return [ctx.mul(inv, v) for v in a]


def _gcd(ctx, a, b) -> list[int]:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        a, b = b, _mod(ctx, a, b)
    return _monic(ctx, a) if a else []


def _frob_mod(ctx: FieldCtx, a, f, e: int) -> list[int]:
    """a^(q^e) mod f by e*n squarings."""
    a = _mod(ctx, a, f)
    for _ in range(e * ctx.degree):
        a = _mod(ctx, _sqr(ctx, a), f)
    return a


def _pow_mod(ctx, a, e: int, f) -> list[int]:
    r = [1]
    a = _mod(ctx, a, f)
    while e:
        if e & 1:
            r = _mod(ctx, _mul(ctx, r, a), f)
        e >>= 1
        if e:
            a = _mod(ctx, _sqr(ctx, a), f)
    return _mod(ctx, r, f)


# --- ring operations -----------------------------------------------------


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    a._check(b)
    return Poly._raw(a.ctx, _gcd(a.ctx, a.c, b.c))


def ring_ops(op: str, *operands):
    """Dispatch add/mul/divmod/gcd/eval/derivative/monic."""
    a = operands[0]
    if op == "add":
        return a + operands[1]
    if op == "mul":
        return a * operands[1]
    if op == "divmod":
        return divmod(a, operands[1])
    if op == "gcd":
        return gcd(a, operands[1])
    if op == "eval":
        return a.eval(operands[1])
    if op == "derivative":
        return a.derivative()
    if op == "monic":
        return a.monic()
    raise ValueError(f"unknown op {op!r}")


def frobenius_mod(f: Poly, e: int) -> Poly:
    """x^(q^e) mod f, never forming the degree q^e power."""
    if f.degree < 1:
        raise DegreeZero("modulus must have degree >= 1")
    return Poly._raw(f.ctx, _frob_mod(f.ctx, [0, 1], f.c, e))


def pow_mod(a: Poly, e: int, f: Poly) -> Poly:
    return Poly._raw(a.ctx, _pow_mod(a.ctx, a.c, e, f.c))


# --- irreducibility --------------------------------------------------------


def is_irreducible(f: Poly, engine: str = "fast") -> bool:
    if f.degree < 1:
        raise DegreeZero("irreducibility is defined for degree >= 1")
    if engine == "fast":
        return _irreducible_rabin(f)
    if engine == "oracle":
        return _irreducible_trial(f)
    raise ValueError(f"unknown engine {engine!r}")


def _irreducible_rabin(f: Poly) -> bool:
    ctx, d = f.ctx, f.degree
    if d == 1:
        return True
    fm = _monic(ctx, list(f.c))
    frobs = {0: [0, 1]}
    t = [0, 1]
    for i in range(1, d + 1):
        t = _frob_mod(ctx, t, fm, 1)
        frobs[i] = t
    if _strip(_add(frobs[d], [0, 1])):
        return False
    for p in prime_factors(d):
        g = _gcd(ctx, fm, _add(frobs[d // p], [0, 1]))
        if len(g) > 1:
            return False
    return True


def _monic_polys(ctx: FieldCtx, k: int):
    q = ctx.size
    for idx in range(q**k):
        c = []
        for _ in range(k):
            idx, r = divmod(idx, q)
            c.append(r)
        c.append(1)
        yield c


def _oracle_feasible(ctx: FieldCtx, d: int) -> bool:
    return all(ctx.size**k <= ORACLE_CAP for k in range(2, d // 2 + 1)) and (
        ctx.size <= MAX_ENUM
    )


def _irreducible_trial(f: Poly) -> bool:
    ctx, d = f.ctx, f.degree
    if not _oracle_feasible(ctx, d):
        raise ScaleExceeded(f"trial division for degree {d} over {ctx} is too large")
    for x in range(ctx.size):
        if _eval(ctx, f.c, x) == 0:
            return d == 1
    for k in range(2, d // 2 + 1):
        for cand in _monic_polys(ctx, k):
            if not _mod(ctx, f.c, cand):
                return False
    return True


# --- roots and factorization ----------------------------------------------


def roots_in_ctx(f: Poly) -> set[Fe]:
    """Distinct roots of f in its own field."""
    ctx = f.ctx
    if f.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    if ctx.size > MAX_ENUM and f.degree > 3:
        raise ScaleExceeded(f"root search over {ctx} limited to degree <= 3")
    if f.degree < 1:
        return set()
    if ctx.size <= 1 << 10:
        return {Fe(ctx, x) for x in range(ctx.size) if _eval(ctx, f.c, x) == 0}
    # gcd with x^q - x, then split into linear factors
    fm = _monic(ctx, list(f.c))
    xq = _frob_mod(ctx, [0, 1], fm, 1)
    lin = _gcd(ctx, fm, _add(xq, [0, 1]))
    return {Fe(ctx, g[0]) for g in _split_equal_degree(ctx, lin, 1, random.Random(0))}


def _trace_poly(ctx: FieldCtx, u, f, k: int) -> list[int]:
    """u + u^2 + ... + u^(2^(k-1)) mod f."""
    acc = list(u)
    t = list(u)
    for _ in range(k - 1):
        t = _mod(ctx, _sqr(ctx, t), f)
        acc = _add(acc, t)
    return _strip(acc)


def _split_equal_degree(ctx: FieldCtx, f, d: int, rng: random.Random) -> list[list[int]]:
    """Split a monic squarefree product of degree-d irreducibles."""
    f = _strip(list(f))
    n = len(f) - 1
    if n <= 0:
        return []
    if n == d:
        return [f]
    k = ctx.degree * d
    while True:
        u = [rng.randrange(ctx.size) for _ in range(n)]
        if not _strip(list(u)):
            continue
        t = _trace_poly(ctx, u, f, k)
        g = _gcd(ctx, f, t)
        if 0 < len(g) - 1 < n:
            h = _divmod(ctx, f, g)[0]
            h = _monic(ctx, h)
            return _split_equal_degree(ctx, g, d, rng) + _split_equal_degree(ctx, h, d, rng)


def _squarefree_parts(ctx: FieldCtx, f) -> list[tuple[list[int], int]]:
    """Squarefree decomposition in characteristic 2 as (factor, multiplicity)."""
    f = _monic(ctx, list(f))
    if len(f) == 1:
        return []
    df = _strip([v if i % 2 else 0 for i, v in enumerate(f)][1:])
    if not df:
        # f is a square; take square roots of the even coefficients
        root = [ctx.sqrt(f[i]) for i in range(0, len(f), 2)]
        return [(g, 2 * m) for g, m in _squarefree_parts(ctx, root)]
    out = []
    c = _gcd(ctx, f, df)
    w = _monic(ctx, _divmod(ctx, f, c)[0])
    i = 1
    while len(w) > 1:
        y = _gcd(ctx, w, c)
        z = _monic(ctx, _divmod(ctx, w, y)[0])
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = _monic(ctx, _divmod(ctx, c, y)[0])
    if len(c) > 1:
        # what is left is a square
        root = [ctx.sqrt(c[i]) for i in range(0, len(c), 2)]
        out.extend((g, 2 * m) for g, m in _squarefree_parts(ctx, root))
    return out


def _distinct_degree(ctx: FieldCtx, f) -> list[tuple[list[int], int]]:
    out = []
    t = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        t = _frob_mod(ctx, t, f, 1)
        g = _gcd(ctx, f, _add(t, [0, 1]))
        if len(g) > 1:
            out.append((g, d))
            f = _monic(ctx, _divmod(ctx, f, g)[0])
            t = _mod(ctx, t, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def factor(f: Poly, seed: int = 0) -> list[Poly]:
    """Monic irreducible factors with multiplicity, canonically sorted.

    Squarefree decomposition, distinct-degree and equal-degree splitting;
    the random choices are seeded so output is reproducible.
    """
    ctx = f.ctx
    if f.degree < 1:
        return []
    rng = random.Random(seed)
    out = []
    for part, mult in _squarefree_parts(ctx, f.c):
        for block, d in _distinct_degree(ctx, part):
            for g in _split_equal_degree(ctx, block, d, rng):
                out.extend([Poly._raw(ctx, g)] * mult)
    return sorted(out, key=Poly.sort_key)


def factor_oracle(f: Poly) -> list[Poly]:
    """Brute-force factorization by repeated trial division.

    Linear factors come from an exhaustive root scan, higher ones from
    dividing by every monic polynomial of degree 2..deg/2 in turn.
    """
    ctx = f.ctx
    if f.degree < 1:
        return []
    if not _oracle_feasible(ctx, f.degree):
        raise ScaleExceeded(f"oracle factorization of degree {f.degree} over {ctx}")
    rest = _monic(ctx, list(f.c))
    out: list[list[int]] = []
    for x in range(ctx.size):
        while len(rest) > 1:
            q, r = _divmod(ctx, rest, [x, 1])
            if r:
                break
            out.append([x, 1])
            rest = q
    k = 2
    while 2 * k <= len(rest) - 1:
        for cand in _monic_polys(ctx, k):
            while True:
                q, r = _divmod(ctx, rest, cand)
                if r:
                    break
                out.append(cand)
                rest = q
        k += 1
    if len(rest) > 1:
        out.append(rest)
    return sorted((Poly._raw(ctx, c) for c in out), key=Poly.sort_key)


def product(polys: Iterable[Poly], ctx: FieldCtx) -> Poly:
    return reduce(lambda a, b: a * b, polys, Poly.const(ctx, 1))


# --- text format -----------------------------------------------------------


def format_poly(f: Poly) -> str:
    """``g^a*x^3 + x + g^b`` style rendering, highest degree first."""
    if not f.c:
        return "0"
    terms = []
    for i in range(len(f.c) - 1, -1, -1):
        v = f.c[i]
        if v == 0:
            continue
        coef = format_element(Fe(f.ctx, v))
        mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
        if not mono:
            terms.append(coef)
        elif v == 1:
            terms.append(mono)
        else:
            terms.append(f"{coef}*{mono}")
    return " + ".join(terms)


_TERM = re.compile(r"^(?:(?P<coef>0|1|g(?:\^-?\d+)?)\s*\*?\s*)?(?P<mono>x(?:\^\d+)?)?$")


def parse_element(ctx: FieldCtx, text: str) -> Fe:
    """Inverse of :func:`format_element`; also accepts ``g`` and ``xi^k``."""
    t = text.strip().replace(" ", "")
    t = re.sub(r"^(xi|w|omega|ξ|ω)", "g", t)
    if t in ("0", "1"):
        return Fe(ctx, int(t))
    m = re.fullmatch(r"g(?:\^(-?\d+))?", t)
    if not m:
        raise ParseError(f"cannot parse field element {text!r}")
    return ctx.power(int(m.group(1) or 1))


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Inverse of :func:`format_poly`."""
    coeffs: dict[int, int] = {}
    body = text.strip()
    if body == "0":
        return Poly(ctx)
    for raw in body.split("+"):
        term = raw.strip().replace(" ", "")
        term = re.sub(r"^(xi|omega|ξ|ω|w)", "g", term)
        m = _TERM.match(term)
        if not term or not m or (m.group("coef") is None and m.group("mono") is None):
            raise ParseError(f"cannot parse term {raw!r} in {text!r}")
        coef = parse_element(ctx, m.group("coef")) if m.group("coef") else ctx.one
        mono = m.group("mono")
        deg = 0 if mono is None else 1 if mono == "x" else int(mono[2:])
        coeffs[deg] = coeffs.get(deg, 0) ^ coef.bits
    top = max(coeffs)
    return Poly._raw(ctx, [coeffs.get(i, 0) for i in range(top + 1)])
