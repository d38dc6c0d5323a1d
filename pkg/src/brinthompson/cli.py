"""Command-line interface.

Exit codes: 0 success, 1 domain error (validation, budget, enumeration cap),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .docformat import parse_element, serialize_element
from .dynamics import apply, parse_point, point_text
from .element import compose, equals, invert, power, reduce
from .errors import BrinThompsonError, ParseError
from .generate import random_element
from .growth import bs_relation_check, power_profile, root_search
from .svg import render_svg
from .torsion import closure, order_up_to, torsion_certificate


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_element(text)
    except ParseError as exc:
        raise ParseError(exc.line, f"{path}: {exc.reason}") from None


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _maybe_reduce(f, args):
    return f if args.no_reduce else reduce(f)


def cmd_validate(args):
    f = _load(args.file)
    return f"valid: arity {f.arity}, {len(f)} blocks\n"


def cmd_mul(args):
    f = compose(_load(args.a), _load(args.b))
    _emit(serialize_element(_maybe_reduce(f, args)), args.output)


def cmd_inv(args):
    _emit(serialize_element(invert(_load(args.a))), args.output)


def cmd_pow(args):
    if args.k < 0:
        raise UsageError("power must be non-negative")
    f = power(_load(args.a), args.k, auto_reduce=not args.no_reduce)
    _emit(serialize_element(f), args.output)


def cmd_eq(args):
    return "equal\n" if equals(_load(args.a), _load(args.b)) else "not equal\n"


def cmd_order(args):
    d = order_up_to(_load(args.a), args.max)
    return f"order {d}\n" if d is not None else f"order unknown up to {args.max}\n"


def cmd_certify(args):
    cert = torsion_certificate(_load(args.a), args.max)
    if cert is None:
        return f"no torsion certificate up to power {args.max} (not a proof of infinite order)\n"
    return (
        f"torsion certificate at power {cert.power}\n"
        f"order bound {cert.order_bound}\n"
        f"identical pattern with {len(cert.pattern)} blocks\n"
    )


def cmd_closure(args):
    g = closure([_load(p) for p in args.files], args.budget)
    return f"finite group of order {g.order}\n"


def cmd_profile(args):
    _emit(power_profile(_load(args.a), args.powers).to_csv(), args.output)


def cmd_roots(args):
    hits = root_search(_load(args.a), args.max_blocks, args.max)
    out = [f"{len(hits)} roots with t in 2..{args.max} and at most {args.max_blocks} blocks\n"]
    for h, t in hits:
        out.append(f"# t = {t}\n" + serialize_element(h))
    return "".join(out)


def cmd_bs(args):
    ok = bs_relation_check(_load(args.a), _load(args.b), args.m, args.n)
    verdict = "relation holds" if ok else "relation fails"
    return f"{verdict}\n# convention: apply a^-1, then b^{args.m}, then a; compare with b^{args.n}\n"


def cmd_eval(args):
    if args.point is None:
        raise UsageError("eval needs --point")
    f = _load(args.a)
    x = parse_point(args.point)
    if len(x) != f.arity:
        raise UsageError(f"point has {len(x)} axes, element has arity {f.arity}")
    return point_text(apply(f, x)) + "\n"


def cmd_render(args):
    text = render_svg(_load(args.a))
    _emit(text, args.output)


def cmd_rand(args):
    gens = None
    if args.twists:
        n = args.arity
        gens = [tuple(range(k)) + (k + 1, k) + tuple(range(k + 2, n)) for k in range(n - 1)]
    f = random_element(args.seed, args.arity, args.depth, gens)
    _emit(serialize_element(f), args.output)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nvtool", description="Exact arithmetic in Brin-Thompson groups nV and SV_G.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, *files, help):
        p = sub.add_parser(name, help=help)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "file", help="parse and validate an element file")
    p = add("mul", cmd_mul, "a", "b", help="product: a then b")
    p.add_argument("--no-reduce", action="store_true")
    p.add_argument("-o", "--output")
    p = add("inv", cmd_inv, "a", help="inverse")
    p.add_argument("-o", "--output")
    p = add("pow", cmd_pow, "a", help="k-th power")
    p.add_argument("k", type=int)
    p.add_argument("--no-reduce", action="store_true")
    p.add_argument("-o", "--output")
    add("eq", cmd_eq, "a", "b", help="exact equality")
    p = add("order", cmd_order, "a", help="exact order up to a bound")
    p.add_argument("--max", type=int, default=64)
    p = add("certify-torsion", cmd_certify, "a", help="search for an identical power pair")
    p.add_argument("--max", type=int, default=64)
    p = sub.add_parser("closure", help="finite closure of generators")
    p.add_argument("files", nargs="+")
    p.add_argument("--budget", type=int, default=1000)
    p.set_defaults(func=cmd_closure)
    p = add("profile", cmd_profile, "a", help="partition-growth profile as CSV")
    p.add_argument("--powers", type=int, default=8)
    p.add_argument("-o", "--output")
    p = add("roots", cmd_roots, "a", help="bounded exhaustive root search")
    p.add_argument("--max-blocks", type=int, default=3)
    p.add_argument("--max", type=int, default=8)
    p = add("bs-check", cmd_bs, "a", "b", help="Baumslag-Solitar relation a b^m a^-1 = b^n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p = add("eval", cmd_eval, "a", help="apply to an eventually periodic point")
    p.add_argument("--point")
    p = add("render", cmd_render, "a", help="SVG drawing (arity 2)")
    p.add_argument("-o", "--output")
    p = sub.add_parser("rand", help="seeded random element")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--twists", action="store_true", help="draw twists from adjacent axis transpositions")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_rand)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrinThompsonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if out:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
