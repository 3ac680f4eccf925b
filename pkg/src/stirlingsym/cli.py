"""Command-line interface.

Verbs: expand, enumerate, eulerian, verify, invert, wp, mobius, tables.
Exit status: 0 on success (and on passing verifications), 1 when a
verification fails, 2 on usage errors.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from pathlib import Path

from .identities import invert_egf_numeric, registry
from .moduli import wp_volume
from .partitions import check_partition, parse_rational, rational_str
from .posets import interval
from .stirling import enumerate_stirling, eulerian_polynomial, stirling_symfunc
from .symfunc import convert, render_symfunc
from .trees import enumerate_normalized, render_tree, tree_to_json


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirlingsym",
        description="exact combinatorics of nested multiset permutations "
        "and their symmetric functions",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="type-sum symmetric function in a basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--basis", choices=("m", "e", "h", "p", "s"), default="e")
    p.add_argument("--kind", choices=("AA", "DA", "TN", "IN"), default="AA")
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("enumerate", help="list permutations or trees")
    p.add_argument("--what", choices=("stirling", "trees"), default="stirling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eulerian", help="descent generating polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run a named identity check (or all)")
    p.add_argument("--identity", required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("invert", help="invert an EGF through the h-expansions")
    p.add_argument("--kind", choices=("mult", "comp"), required=True)
    p.add_argument(
        "--coeffs",
        required=True,
        help="comma-separated semantic coefficients f_0,f_1,... of y^n/n!",
    )
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("wp", help="closed-formula volume of a partition")
    p.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mobius", help="Mobius invariant of a weighted interval")
    p.add_argument("--poset", choices=("pi", "b"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True, help="weak composition, e.g. 2,0,1")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("tables", help="dump the expansion tables (golden format)")
    p.add_argument("--out", default=None, help="directory for one file per family")
    p.add_argument("--nmax", type=int, default=6)

    return parser


def _cmd_expand(args) -> int:
    f = stirling_symfunc(args.n, args.r, args.kind, args.j)
    g = convert(f, args.basis)
    if args.format == "json":
        print(json.dumps(g.to_json()))
    elif args.format == "latex":
        print(render_symfunc(g, latex=True))
    else:
        print(render_symfunc(g))
    return 0


def _cmd_enumerate(args) -> int:
    if args.what == "stirling":
        for sp in enumerate_stirling(args.n, args.r):
            if args.format == "json":
                print(json.dumps(sp.to_json()))
            else:
                print(sp)
    else:
        for t in enumerate_normalized(args.n):
            if args.format == "json":
                print(json.dumps(tree_to_json(t)))
            else:
                print(render_tree(t))
                print()
    return 0


def _cmd_eulerian(args) -> int:
    poly = eulerian_polynomial(args.n, args.r)
    if args.format == "json":
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def _call_check(fn, args):
    accepted = inspect.signature(fn).parameters
    kwargs = {}
    for name in ("order", "n", "r"):
        value = getattr(args, name, None)
        if value is not None and name in accepted:
            kwargs[name] = value
    if getattr(args, "order", None) is not None and "order" not in accepted:
        if "n" in accepted and "n" not in kwargs:
            kwargs["n"] = args.order
    return fn(**kwargs)


def _cmd_verify(args) -> int:
    checks = registry()
    as_json = args.json or args.format == "json"
    if args.identity == "all":
        names = list(checks)
    elif args.identity in checks:
        names = [args.identity]
    else:
        known = ", ".join(checks)
        print(f"unknown identity {args.identity!r}; known: {known}, all", file=sys.stderr)
        return 2
    reports = [_call_check(checks[name], args) for name in names]
    if as_json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=None))
    else:
        for r in reports:
            print(r.render())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_invert(args) -> int:
    coeffs = [parse_rational(x) for x in args.coeffs.split(",")]
    order = args.order if args.order is not None else len(coeffs) - 1
    result = invert_egf_numeric(args.kind, coeffs, order)
    if args.format == "json":
        print(json.dumps([rational_str(c) for c in result]))
    else:
        for n, c in enumerate(result):
            print(f"{n}: {rational_str(c)}")
    return 0


def _cmd_wp(args) -> int:
    lam = check_partition(_parse_ints(args.lam))
    value = wp_volume(lam)
    if args.format == "json":
        print(json.dumps({"lambda": list(lam), "wp": rational_str(value)}))
    else:
        print(rational_str(value))
    return 0


def _cmd_mobius(args) -> int:
    mu = _parse_ints(args.mu)
    iv = interval(args.poset, args.n, mu)
    value = iv.mobius_invariant()
    if not args.verify:
        if args.format == "json":
            print(json.dumps({"poset": args.poset, "n": args.n,
                              "mu": list(mu), "mobius": value}))
        else:
            print(value)
        return 0
    from .posets import _signed_type_coefficient
    from .partitions import sort_to_partition

    predicted = _signed_type_coefficient(args.poset, args.n, sort_to_partition(mu))
    ok = predicted == value
    if args.format == "json":
        print(json.dumps({"poset": args.poset, "n": args.n, "mu": list(mu),
                          "mobius": value, "coefficient": rational_str(predicted),
                          "pass": ok}))
    else:
        print(f"mobius = {value}, signed type-sum coefficient = "
              f"{rational_str(predicted)}: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def expansion_table(r: int, nmax: int = 6) -> str:
    """Canonical text dump of the type-sum expansions in all five bases."""
    lines = [f"type-sum expansions for r={r}, n=0..{nmax}"]
    for n in range(nmax + 1):
        f = stirling_symfunc(n, r)
        lines.append(f"n={n}")
        for basis in ("m", "e", "h", "s", "p"):
            lines.append(f"  {basis}: {render_symfunc(convert(f, basis))}")
    return "\n".join(lines) + "\n"


def _cmd_tables(args) -> int:
    if args.out is None:
        for r in (1, 2):
            sys.stdout.write(expansion_table(r, args.nmax))
        return 0
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for r in (1, 2):
        path = outdir / f"expansions_r{r}.txt"
        path.write_text(expansion_table(r, args.nmax), encoding="utf-8")
        print(path)
    return 0


_COMMANDS = {
    "expand": _cmd_expand,
    "enumerate": _cmd_enumerate,
    "eulerian": _cmd_eulerian,
    "verify": _cmd_verify,
    "invert": _cmd_invert,
    "wp": _cmd_wp,
    "mobius": _cmd_mobius,
    "tables": _cmd_tables,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
