"""Command line front end: ``qcgoppa <command> [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 precondition failure,
3 a support point is a root of the Goppa polynomial, 4 the claimed
quasi-cyclic automorphism did not verify.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import GoppaSpec, SupportSpec, build_code, orbit_support, unit_group_support
from .errors import ParseError, QCGoppaError, RootInSupport
from .fixtures import FIXTURES, run_fixture
from .gf2e import FieldCtx, clear_overrides, default_field, parse_field, register_modulus
from .invariant import (
    enum_order2_degree_2s,
    enum_order3_degree_3s,
    factor_h,
    frobenius_invariant_polys,
    h_polynomial,
    PRODUCT_CHECK_CAP,
    verify_product,
)
from .polyring import format_poly, parse_poly
from .projline import (
    INF,
    Mobius,
    enum_order_l,
    format_matrix,
    format_point,
    mobius_order,
    orbits,
    parse_matrix,
    parse_point,
    projective_line,
)

EXIT_MISMATCH = 1
EXIT_PRECONDITION = 2
EXIT_ROOT_IN_SUPPORT = 3
EXIT_QC_FAILED = 4


class Precondition(Exception):
    """A command-level hypothesis failed; reported with exit code 2."""


def _common(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default=d if suppress else "f8",
                   help="f8, f64, ..., <degree> or <degree>:<modulus-hex> (default f8)")
    p.add_argument("--matrix", default=d, help="Mobius matrix [[a,b],[c,d]] with entries 0, 1, g^k")
    p.add_argument("--modulus", action="append", default=d if suppress else [],
                   help="override the table modulus, <degree>:<hex> (repeatable)")
    p.add_argument("--json", action="store_true", default=d if suppress else False,
                   help="machine-readable output")
    p.add_argument("--strict", action="store_true", default=d if suppress else False,
                   help="coefficient-exact comparison for the unit-group examples")
    p.add_argument("--threads", type=int, default=d if suppress else 1,
                   help="accepted for interface compatibility; results do not depend on it")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcgoppa", description=__doc__.splitlines()[0], parents=[_common(False)])
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("enum", parents=[common], help="list invariant irreducible polynomials")
    p.add_argument("--deg", type=int, required=True, help="degree of the polynomials")

    p = sub.add_parser("build", parents=[common], help="build a code and print its report")
    p.add_argument("--goppa", required=True, help="Goppa polynomial, e.g. 'x^3 + g^28*x^2 + g^7*x + g^49'")
    p.add_argument("--support", required=True,
                   help="orbits:all | orbits:finite | orbits:<i>-<j> | unit-group:<n> | explicit:<p1>,<p2>,...")
    p.add_argument("--variant", choices=["goppa", "parity_check_subcode", "extended"],
                   help="override the variant (explicit supports only)")
    p.add_argument("--no-min-distance", action="store_true", help="skip the exhaustive minimum distance")
    p.add_argument("--dump-generator", metavar="PATH", help="write the generator matrix as 0/1 rows")

    p = sub.add_parser("verify", parents=[common], help="check a worked example")
    p.add_argument("example", help=f"one of {', '.join(FIXTURES)} or 'all'")

    p = sub.add_parser("orbits", parents=[common], help="orbits of the matrix on the projective line")
    p.add_argument("--domain", default="line", help="line | unit-group:<n>")

    p = sub.add_parser("factor-h", parents=[common], help="factor x^(q^s+1) + ... for an order-2/3 matrix")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--direction", choices=["a_side", "d_side"], default="a_side")

    p = sub.add_parser("nl-count", parents=[common], help="count the order-2/3 matrix families")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--family", choices=["all", "a_zero", "d_zero", "b_zero"], default="all")
    return parser


# --- helpers ------------------------------------------------------------------


def _field(args) -> FieldCtx:
    for spec in args.modulus:
        deg, hexmod = spec.split(":", 1)
        register_modulus(int(deg), int(hexmod, 16))
    try:
        return parse_field(args.field)
    except ValueError as exc:
        raise Precondition(f"bad --field {args.field!r}: {exc}") from None


def _matrix(args, ctx: FieldCtx, required: bool = True) -> Mobius | None:
    if args.matrix is None:
        if required:
            raise Precondition("--matrix is required for this command")
        return None
    return parse_matrix(ctx, args.matrix)


def _emit(args, obj, text_lines) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# --- commands -------------------------------------------------------------------


def cmd_enum(args) -> int:
    ctx = _field(args)
    if args.matrix is None:
        raise Precondition(f"no closed-form family for degree {args.deg} without --matrix")
    A = _matrix(args, ctx)
    if not A.c_is_one:
        raise Precondition("the invariant families need a matrix with c != 0")
    l = mobius_order(A)
    if l < 2 or args.deg % l:
        raise Precondition(f"degree {args.deg} is not a multiple of the order {l} of A")
    s = args.deg // l
    if l == 2:
        recs = enum_order2_degree_2s(ctx, A.a, A.b, s, with_provenance=True)
        rows = [(r.poly, r.k, r.stratum, r.case, r.frobenius_power) for r in recs]
    elif l == 3:
        recs = enum_order3_degree_3s(ctx, A.a, A.d, s, with_provenance=True)
        rows = [(r.poly, r.k, r.stratum, r.case, r.frobenius_power) for r in recs]
    else:
        rows = []
        for u in range(1, l):
            rows += [(g, None, s, "frobenius-factor", u) for g in frobenius_invariant_polys(A, u, s)]
        rows.sort(key=lambda r: r[0].sort_key())
    out = [
        {
            "poly": format_poly(g),
            "matrix": format_matrix(A),
            "k": None if k is None else format_point(k),
            "stratum": e,
            "case": case,
            "frobenius_power": u,
        }
        for g, k, e, case, u in rows
    ]
    lines = [
        f"{o['poly']}\tA={o['matrix']}\tk={o['k'] or '-'}\tstratum={o['stratum']}\tcase={o['case']}"
        f"\tfrobenius=A^{o['frobenius_power']}"
        for o in out
    ]
    _emit(args, out, lines)
    return 0


def _select_support(args, ctx: FieldCtx, A: Mobius | None) -> SupportSpec:
    kind, _, arg = args.support.partition(":")
    if kind == "explicit":
        pts = [parse_point(ctx, t) for t in arg.split(",") if t.strip()]
        variant = args.variant or ("extended" if INF in pts else "goppa" if A is None else "parity_check_subcode")
        if A is None:
            return SupportSpec.flat(ctx, pts, variant)
        spec = orbit_support(A, pts, variant)
        if len(spec) != len(pts):
            raise Precondition("explicit support contains fixed points of A")
        return spec
    if A is None:
        raise Precondition(f"support selector {kind!r} needs --matrix")
    if kind == "unit-group":
        return unit_group_support(ctx, int(arg), A)
    if kind == "orbits":
        full = orbit_support(A, projective_line(ctx))
        blocks = list(full.blocks)
        if arg == "finite":
            blocks = [b for b in blocks if INF not in b]
        elif arg != "all":
            lo, _, hi = arg.partition("-")
            i, j = int(lo), int(hi or lo)
            if not 1 <= i <= j <= len(blocks):
                raise Precondition(f"orbit range {arg} outside 1..{len(blocks)}")
            blocks = blocks[i - 1 : j]
        has_inf = any(INF in b for b in blocks)
        return SupportSpec(ctx, tuple(blocks), "extended" if has_inf else "parity_check_subcode")
    raise ParseError(f"unknown support selector {args.support!r}")


def cmd_build(args) -> int:
    ctx = _field(args)
    A = _matrix(args, ctx, required=False)
    g = parse_poly(ctx, args.goppa)
    support = _select_support(args, ctx, A)
    try:
        spec = GoppaSpec(g, support, A)
    except ValueError as exc:
        raise Precondition(str(exc)) from None
    rep = build_code(spec, min_distance=not args.no_min_distance)
    print(rep.to_json())
    if args.dump_generator:
        with open(args.dump_generator, "w") as fh:
            fh.write(rep.generator.dump() + "\n")
    if A is not None and not rep.automorphism_verified:
        print("quasi-cyclic automorphism check failed", file=sys.stderr)
        return EXIT_QC_FAILED
    return 0


def cmd_verify(args) -> int:
    _field(args)
    ids = list(FIXTURES) if args.example == "all" else [args.example]
    if any(i not in FIXTURES for i in ids):
        raise Precondition(f"unknown example {args.example!r}; choose from {', '.join(FIXTURES)} or all")
    results = [run_fixture(i, args.strict) for i in ids]
    if args.json:
        print(json.dumps([
            {
                "id": r.id,
                "match_mode": r.match_mode,
                "passed": r.passed,
                "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in r.checks],
            }
            for r in results
        ], indent=2))
    else:
        for r in results:
            for c in r.checks:
                tail = f"  [{c.detail}]" if c.detail and c.status != "PASS" else ""
                print(f"{r.id}\t{c.status}\t{c.name}{tail}")
            n_ok = sum(c.status == "PASS" for c in r.checks)
            print(f"{r.id}: {'PASS' if r.passed else 'FAIL'} ({n_ok}/{len(r.checks)} checks, {r.match_mode})")
    return 0 if all(r.passed for r in results) else EXIT_MISMATCH


def cmd_orbits(args) -> int:
    ctx = _field(args)
    A = _matrix(args, ctx)
    if args.domain == "line":
        dom = projective_line(ctx)
    elif args.domain.startswith("unit-group:"):
        from .codes import unit_group

        dom = unit_group(ctx, int(args.domain.split(":", 1)[1]))
    else:
        raise ParseError(f"unknown domain {args.domain!r}")
    orbs = orbits(A, dom)
    out = [[format_point(p) for p in o] for o in orbs]
    _emit(args, {"order": mobius_order(A), "orbits": out},
          [f"order {mobius_order(A)}, {len(out)} orbits"] + [f"L{i + 1} = ({', '.join(o)})" for i, o in enumerate(out)])
    return 0


def cmd_factor_h(args) -> int:
    ctx = _field(args)
    A = _matrix(args, ctx)
    fs = factor_h(ctx, A, args.s, args.direction)
    total = sum(f.degree for f in fs)
    product_ok = None
    if ctx.size**args.s <= PRODUCT_CHECK_CAP:
        product_ok = verify_product(h_polynomial(ctx, A, args.s, args.direction), fs)
    h_text = format_poly(h_polynomial(ctx, A, args.s, args.direction)) if ctx.size**args.s <= 4096 else None
    obj = {"h": h_text, "factors": [format_poly(f) for f in fs], "degree_sum": total, "product_verified": product_ok}
    _emit(args, obj, [f"h = {h_text or '(large)'}", *obj["factors"],
                      f"degree sum {total}, product verified: {product_ok}"])
    if product_ok is False:
        return EXIT_MISMATCH
    return 0


def cmd_nl_count(args) -> int:
    ctx = _field(args)
    mats = enum_order_l(ctx, args.order, args.family)
    _emit(args, {"field": ctx.spec, "order": args.order, "family": args.family, "count": len(mats)},
          [str(len(mats))])
    return 0


COMMANDS = {
    "enum": cmd_enum,
    "build": cmd_build,
    "verify": cmd_verify,
    "orbits": cmd_orbits,
    "factor-h": cmd_factor_h,
    "nl-count": cmd_nl_count,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except RootInSupport as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ROOT_IN_SUPPORT
    except (Precondition, QCGoppaError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    finally:
        # overrides are per invocation
        clear_overrides()


if __name__ == "__main__":
    sys.exit(main())
