"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input (parse error,
bad flags, unknown theorem), 3 incompatible graph, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .core import SignedGraph
from .distance import signed_distances
from .errors import (
    CapExceeded,
    IncompatibleGraph,
    NotAWheel,
    ParseError,
    SignedGraphError,
    SizeCapExceeded,
    UnknownTheorem,
)
from .families import FAMILIES, FamilySpec, family_edges, generate, wheel_compatible_predicate
from .fixtures import FIG1_NEGATIVES, FIG2_NEGATIVES, FIXTURES, wheel_with_negatives
from .io import format_graph, parse_graph, to_dot
from .resolve import DEFAULT_CAP, all_bases, metric_dimension
from .verify import REGISTRY, run_suite, write_reports

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCOMPATIBLE = 3
EXIT_CAP = 4

_WHEEL_PRESETS = {"fig1": FIG1_NEGATIVES, "fig2": FIG2_NEGATIVES}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str) -> SignedGraph:
    """Read a graph file; ``@name`` loads a bundled fixture."""
    if path.startswith("@"):
        name = path[1:]
        if name not in FIXTURES:
            raise ParseError(0, f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
        return FIXTURES[name].graph
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(0, f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _fmt(seq) -> str:
    return "{" + ",".join(str(v) for v in seq) + "}"


def cmd_dim(args) -> int:
    g = _load(args.path)
    res = metric_dimension(g, cap=args.cap)
    out = [
        f"dim={res.dimension} basis={_fmt(res.basis)} "
        f"dim_underlying={res.dim_underlying} mdd={res.mdd}"
    ]
    for rep in res.representations:
        out.append(f"r({rep.vertex})=({','.join(str(c) for c in rep.coords)})")
    if args.all_bases:
        bases = all_bases(g, res.dimension, cap=args.cap)
        out.append(f"bases={len(bases)}")
        out.extend(_fmt(b) for b in bases)
    print("\n".join(out))
    return EXIT_OK


def cmd_compat(args) -> int:
    g = _load(args.path)
    witness = signed_distances(g).first_incompatible()
    if witness is None:
        print("COMPATIBLE")
        return EXIT_OK
    line = f"INCOMPATIBLE ({witness[0]},{witness[1]})"
    try:
        ok, cycle = wheel_compatible_predicate(g)
        if not ok:
            line += f" C4-={_fmt(cycle)}"
    except NotAWheel:
        pass
    print(line)
    return EXIT_OK


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(0, f"bad edge {text!r}; expected 'u,v'") from None
    return (min(u, v), max(u, v))


def cmd_gen(args) -> int:
    edges = family_edges(args.family, args.n)
    if args.preset in _WHEEL_PRESETS:
        if args.family != "wheel" or args.n != 9:
            raise ParseError(0, f"preset {args.preset} is defined for 'wheel 9' only")
        g = wheel_with_negatives(9, _WHEEL_PRESETS[args.preset])
    elif args.negatives is not None:
        neg = {_parse_pair(t) for t in args.negatives}
        unknown = neg - set(edges)
        if unknown:
            raise ParseError(0, f"{sorted(unknown)} not edges of {args.family} {args.n}")
        g = generate(FamilySpec(args.family, args.n, [(-1 if e in neg else 1) for e in edges]))
    elif args.signs is not None:
        g = generate(FamilySpec(args.family, args.n, list(args.signs)))
    else:
        preset = args.preset or "all_positive"
        if preset == "random":
            preset = f"random:{args.seed}"
        g = generate(FamilySpec(args.family, args.n, preset))
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_fixture(args) -> int:
    sys.stdout.write(FIXTURES[args.name].text())
    return EXIT_OK


def cmd_dot(args) -> int:
    g = _load(args.path)
    basis = []
    if args.basis:
        basis = [int(x) for x in args.basis.split(",") if x]
        for v in basis:
            g._check_vertex(v)
    sys.stdout.write(to_dot(g, basis))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.all:
        ids = list(REGISTRY)
    elif args.theorems:
        ids = args.theorems
    else:
        raise UnknownTheorem("give theorem ids or --all")
    caps = args.max_n
    start = time.perf_counter()
    reports = run_suite(ids, size_limits=caps, seed=args.seed, family=args.family, n=args.n,
                        samples=args.samples)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_reports(reports, fh)
    else:
        write_reports(reports, sys.stdout)
    failed = 0
    for r in reports:
        failed += len(r.failures)
        print(f"{r.theorem_id}: {r.total - len(r.failures)}/{r.total} PASS ({r.sweep_mode})",
              file=sys.stderr)
    print(f"total failures: {failed} in {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="signed-metric", description="Metric dimension of signed graphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dim", help="exact metric dimension and canonical basis")
    d.add_argument("path", help="graph file, '-' for stdin, or @fixture")
    d.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum vertex count")
    d.add_argument("--all-bases", action="store_true", help="list every minimum basis")
    d.set_defaults(func=cmd_dim)

    c = sub.add_parser("compat", help="distance compatibility check")
    c.add_argument("path")
    c.set_defaults(func=cmd_compat)

    gen = sub.add_parser("gen", help="emit a family member as a graph file")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("n", type=int)
    sig = gen.add_mutually_exclusive_group()
    sig.add_argument("--preset", choices=["all_positive", "all_negative", "random", *_WHEEL_PRESETS])
    sig.add_argument("--negatives", nargs="+", metavar="U,V", help="edges to make negative")
    sig.add_argument("--signs", help="explicit signs in canonical edge order, e.g. +-+")
    gen.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=cmd_gen)

    fx = sub.add_parser("fixture", help="emit a bundled fixture as a graph file")
    fx.add_argument("name", choices=sorted(FIXTURES))
    fx.set_defaults(func=cmd_fixture)

    dot = sub.add_parser("dot", help="export Graphviz DOT")
    dot.add_argument("path")
    dot.add_argument("--basis", help="comma-separated vertices to fill black")
    dot.set_defaults(func=cmd_dot)

    v = sub.add_parser("verify", help="run theorem sweeps")
    v.add_argument("theorems", nargs="*", metavar="ID")
    v.add_argument("--all", action="store_true")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--family", default=None)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--out", default=None, help="report file (default: stdout)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except IncompatibleGraph as exc:
        u, v = exc.witness
        print(f"INCOMPATIBLE witness=({u},{v})")
        return EXIT_INCOMPATIBLE
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, UnknownTheorem, CapExceeded, SignedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
