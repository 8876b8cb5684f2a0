"""Command-line front end.  Exit codes: 0 success, 1 internal error, 2 usage error."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .lattice import GoodPair, Region, load_region

FAMILIES = ("domino", "slab", "mixed")


class UsageError(Exception):
    pass


def _triple(text: str) -> tuple[int, int, int]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers like 4,4,2, got {text!r}")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three integers, got {text!r}")
    return vals


def _box(text: str) -> tuple[int, int, int]:
    vals = _triple(text)
    if min(vals) < 1:
        raise argparse.ArgumentTypeError("box sides must be positive")
    return vals


def _pair(text: str) -> GoodPair:
    try:
        return GoodPair.parse(text)
    except (ValueError, KeyError) as e:
        raise argparse.ArgumentTypeError(f"bad pair {text!r}: {e}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("SLABLAB_THREADS", "1")))
    except ValueError:
        return 1


def _num(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def build_parser() -> argparse.ArgumentParser:
    def global_flags(p, suppress):
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
        p.add_argument("--threads", type=_positive, default=d(_default_threads()), help="worker processes (default $SLABLAB_THREADS or 1)")
        p.add_argument("--seed", type=int, default=d(0), help="seed for any randomized step")

    # flags are accepted before or after the subcommand; the copies on the
    # subcommands must not overwrite values given before it
    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, suppress=True)
    parser = argparse.ArgumentParser(prog="slablab", description=__doc__)
    global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def region_args(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--box", type=_box, metavar="L,M,N")
        g.add_argument("--region", metavar="FILE")
        p.add_argument("--family", choices=FAMILIES, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list tilings")
    region_args(p)
    p.add_argument("--limit", type=_positive)

    p = sub.add_parser("count", parents=[common], help="count tilings")
    region_args(p)
    p.add_argument("--limit", type=_positive, help="accepted for symmetry with enumerate; counting is exact")

    p = sub.add_parser("twist", parents=[common], help="twist of a domino tiling or of a transformed slab/mixed tiling")
    p.add_argument("--tiling", required=True, metavar="FILE")
    p.add_argument("--pair", type=_pair, metavar="AXIS,PARITY")

    p = sub.add_parser("ttw", parents=[common], help="triple twist of a slab tiling of a box")
    p.add_argument("--tiling", required=True, metavar="FILE")

    p = sub.add_parser("components", parents=[common], help="flip-connected components")
    region_args(p)
    p.add_argument("--budget", type=_positive, default=10**7)
    p.add_argument("--dot", metavar="FILE", help="write the flip graph in GraphViz format (small graphs)")

    p = sub.add_parser("construct", parents=[common], help="generate an explicit tiling")
    p.add_argument("kind", choices=("rigid", "solenoid", "composed"))
    p.add_argument("--N", type=_positive, default=3, help="rigid: half side (box 2N x 2N x 5l)")
    p.add_argument("--l", type=_positive, default=1, help="rigid: number of stacked copies")
    p.add_argument("--n", type=_positive, default=1, help="solenoid/composed: scale")
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--v", type=int, default=0)
    p.add_argument("--t", type=_triple, default=(0, 0, 0), metavar="T1,T2,T3")
    p.add_argument("-o", "--output", required=True, metavar="FILE")

    p = sub.add_parser("verify", parents=[common], help="machine checks of the structural statements")
    p.add_argument("statement", nargs="?", default="all")
    p.add_argument("--budget", type=_positive, default=200_000)
    p.add_argument("--witness-dir", default="witnesses")
    p.add_argument("--region", action="append", default=[], metavar="FILE", help="extra region for the parity scan")

    p = sub.add_parser("render", parents=[common], help="floor diagram")
    p.add_argument("--tiling", required=True, metavar="FILE")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output", metavar="FILE", help="default: stdout")
    return parser


def _load_region(args) -> Region:
    if args.box:
        return Region.box(*args.box)
    try:
        return load_region(args.region)
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read region {args.region}: {e}")


def _load_tiling(path):
    from .tiling import Tiling

    try:
        t = Tiling.load(path)
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read tiling {path}: {e}")
    report = t.validate()
    if not report.ok:
        raise UsageError(f"{path} is not a valid tiling: {report.problems[0]}")
    return t


def cmd_enumerate(args, out):
    from .enumerator import placement_table

    table = placement_table(_load_region(args), args.family)
    n = 0
    for cover in table.covers(args.limit or -1):
        n += 1
        if args.json:
            out.write(json.dumps(table.tiling(cover).to_json(), sort_keys=True) + "\n")
        else:
            out.write(table.code(cover).hex() + "\n")
    if not args.json:
        out.write(f"# {n} tilings\n")


def cmd_count(args, out):
    from .enumerator import count

    n = count(_load_region(args), args.family)
    out.write((json.dumps({"count": n}) if args.json else str(n)) + "\n")


def cmd_twist(args, out):
    from .transform import CANONICAL_PAIRS, pair_twist
    from .twist import twist

    t = _load_tiling(args.tiling)
    if t.family == "domino":
        if args.pair is not None:
            raise UsageError("--pair applies to slab and mixed tilings")
        value = twist(t, check_integral=False)
    else:
        pair = args.pair or CANONICAL_PAIRS[2]
        if t.family == "mixed" and pair.axis != 2:
            raise UsageError("mixed tilings use a z pair")
        value = pair_twist(t, pair)
    out.write((json.dumps({"twist": _num(value)}) if args.json else str(_num(value))) + "\n")


def cmd_ttw(args, out):
    from .transform import triple_twist

    t = _load_tiling(args.tiling)
    if t.family != "slab" or not t.region.is_box():
        raise UsageError("ttw needs a slab tiling of a box")
    v = triple_twist(t)
    out.write((json.dumps({"ttw": list(v)}) if args.json else f"({v.x},{v.y},{v.z})") + "\n")


def cmd_components(args, out):
    from .flipgraph import DOT_MAX_NODES, components

    rep = components(_load_region(args), args.family, args.budget, shuffle_seed=args.seed)
    if args.dot:
        if rep.total > DOT_MAX_NODES:
            raise UsageError(f"--dot is limited to {DOT_MAX_NODES} tilings")
        with open(args.dot, "w") as fh:
            fh.write(rep.to_dot())
    if args.json:
        out.write(rep.dumps() + "\n")
        return
    flag = " (truncated)" if rep.truncated else ""
    out.write(f"{rep.total} tilings, {rep.count} components{flag}\n")
    for c in rep.components:
        inv = c.invariant
        if isinstance(inv, tuple):
            inv = "(" + ",".join("-" if v is None else str(v) for v in inv) + ")"
        rigid = " rigid" if c.rigid else ""
        out.write(f"  size {c.size:>8}  invariant {inv}{rigid}\n")


def cmd_construct(args, out):
    from .construct import composed, rigid_pattern, solenoid

    if args.kind == "rigid":
        t = rigid_pattern(args.N, args.l)
    elif args.kind == "solenoid":
        t = solenoid(args.n, (args.u, args.v))
    else:
        t = composed(args.n, args.t)
    t.dump(args.output)
    msg = {"output": args.output, "pieces": len(t.pieces), "cells": len(t.region.cells)}
    out.write((json.dumps(msg) if args.json else f"wrote {len(t.pieces)} pieces to {args.output}") + "\n")


def cmd_verify(args, out):
    from .verify import STATEMENTS, check_parity, dumps_lines, verify_all, verify_statement

    if args.statement != "all" and args.statement not in STATEMENTS:
        raise UsageError(f"unknown statement {args.statement!r}; known: {', '.join(STATEMENTS)}")
    extra = {}
    for path in args.region:
        try:
            extra[path] = load_region(path)
        except (OSError, ValueError, KeyError) as e:
            raise UsageError(f"cannot read region {path}: {e}")
    if args.statement == "all":
        outcomes = verify_all(args.budget, args.witness_dir, args.threads)
        if extra:
            outcomes = [o for o in outcomes if o["statement"] != "parity"]
            outcomes.append(verify_statement("parity", args.budget, args.witness_dir, extra_regions=extra).to_json())
    else:
        kw = {"extra_regions": extra} if args.statement == "parity" and extra else {}
        outcomes = [verify_statement(args.statement, args.budget, args.witness_dir, **kw).to_json()]
    if args.json:
        out.write(dumps_lines(outcomes))
    else:
        for o in outcomes:
            w = f"  witness: {o['witness']}" if o["witness"] else ""
            out.write(f"{o['statement']:<20} {o['status']}{w}\n")


def cmd_render(args, out):
    from .render import render

    doc = render(_load_tiling(args.tiling), args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(doc)
    else:
        out.write(doc)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "twist": cmd_twist,
    "ttw": cmd_ttw,
    "components": cmd_components,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "render": cmd_render,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"slablab: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001
        print(f"slablab: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
