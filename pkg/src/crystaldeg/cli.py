"""Command-line interface.

Exit status: 0 when everything checked passes (or output was written), 1
when an axiom or correspondence check fails, 2 on usage or schema errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

from .crystal import build_crystal, character, string_table
from .deg_axioms import check_deg
from .dualequiv import build_deg
from .errors import CrystalDegError, GeneralZeroWeightError
from .graphs import ColoredDigraph, SignedColoredGraph, signature_string
from .reports import all_passed
from .zeroweight import (
    GeneralZeroWeightWarning,
    ZeroWeightOptions,
    build_g_of_x,
    identify,
    verify_main,
    zero_weight,
)
from .serialize import DIGRAPH, SIGNED, deserialize, document_from_graph, export_dot, graph_from_document, serialize
from .stembridge import check_regular
from .sweep import format_sweep, run_sweep
from .tableaux import parse_shape

WITNESS_LIMIT = 20


class UsageError(Exception):
    pass


def _shape_arg(text: str):
    try:
        return parse_shape(text)
    except CrystalDegError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystal-deg",
        description="Crystal graphs, dual equivalence graphs and their zero-weight correspondence.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crystal", help="build the crystal graph on SSYT(shape) with entries <= n")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    _output_args(p)

    p = sub.add_parser("deg", help="build the standard dual equivalence graph on SYT(shape)")
    p.add_argument("--shape", type=_shape_arg, required=True)
    _output_args(p)

    p = sub.add_parser("zero-weight", help="list the zero-weight vertices of a crystal")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--general", action="store_true", help="allow strings longer than 3")

    p = sub.add_parser("verify", help="check an axiom system")
    vsub = p.add_subparsers(dest="system", required=True)
    for name, helptext in (("regular", "Stembridge axioms P1-P6"), ("deg", "dual equivalence axioms ax1-ax5")):
        q = vsub.add_parser(name, help=helptext)
        q.add_argument("--shape", type=_shape_arg)
        if name == "regular":
            q.add_argument("--n", type=_positive)
        q.add_argument("--input", type=Path, help="graph document (JSON)")

    p = sub.add_parser("correspond", help="build G(X) on the zero-weight space and identify it")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mode", choices=("standard", "parity"), default="standard")

    p = sub.add_parser("sweep", help="verify everything for all partitions of n <= max-n")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--parallel", type=_positive, nargs="?", const=os.cpu_count() or 1, default=None,
                   help="worker processes (default: $CRYSTAL_DEG_THREADS or 1)")

    p = sub.add_parser("character", help="weight multiplicities of a crystal")
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    return parser


def _output_args(p):
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--output", type=Path)


def _emit(text: str, path: Optional[Path], out):
    if path is None:
        out.write(text)
    else:
        path.write_text(text)


def _write_graph(g, args, out) -> int:
    doc = document_from_graph(g)
    text = serialize(doc) if args.format == "json" else export_dot(doc)
    _emit(text, args.output, out)
    return 0


def _describer(g):
    if g.labels is None:
        return lambda v: f"vertex {v}"
    return lambda v: f"vertex {v} ({g.labels[v]})"


def _print_reports(reports, g, out) -> bool:
    describe = _describer(g)
    for r in reports:
        out.write(r.summary(WITNESS_LIMIT, describe) + "\n")
    return all_passed(reports)


def _load_input(path: Path, kind: str):
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    doc = deserialize(text)
    if doc.kind != kind:
        raise UsageError(f"{path}: expected a {kind} document, got {doc.kind}")
    return graph_from_document(doc)


def _cmd_verify(args, out) -> int:
    if args.system == "regular":
        if args.input is not None:
            if args.shape is not None or args.n is not None:
                raise UsageError("--input excludes --shape/--n")
            g: ColoredDigraph = _load_input(args.input, DIGRAPH)
        elif args.shape is not None and args.n is not None:
            g = build_crystal(args.shape, args.n)
        else:
            raise UsageError("give --shape and --n, or --input")
        return 0 if _print_reports(check_regular(g), g, out) else 1
    if args.input is not None:
        if args.shape is not None:
            raise UsageError("--input excludes --shape")
        h: SignedColoredGraph = _load_input(args.input, SIGNED)
    elif args.shape is not None:
        h = build_deg(args.shape)
    else:
        raise UsageError("give --shape or --input")
    return 0 if _print_reports(check_deg(h), h, out) else 1


def _cmd_zero_weight(args, out) -> int:
    g = build_crystal(args.shape, args.n)
    eps, _ = string_table(g)
    if args.general:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", GeneralZeroWeightWarning)
            vertices = zero_weight(g, ZeroWeightOptions(strictness="allow_general"))
        for w in caught:
            out.write(f"warning: {w.message}\n")
        for x in vertices:
            out.write(f"{g.vertices[x]}  eps=({','.join(str(eps[i][x]) for i in g.colors)})\n")
    else:
        for x in zero_weight(g):
            sig = tuple(1 if eps[i][x] == 1 else -1 for i in g.colors)
            out.write(f"{g.vertices[x]}  {signature_string(sig) or '()'}\n")
    return 0


def _cmd_correspond(args, out) -> int:
    lam, n = args.shape, args.n
    g = build_crystal(lam, n)
    opts = ZeroWeightOptions(signature_mode=args.mode)
    out.write(f"crystal: shape {lam}, n={n}, {g.size} vertices\n")
    try:
        induced = build_g_of_x(g, opts)
    except GeneralZeroWeightError as exc:
        out.write(f"no induced graph: {exc}\n")
        return 1
    out.write(f"zero-weight vertices: {induced.size}\n")
    if induced.size == 0:
        out.write("identified: none (empty zero-weight space)\n")
        return 1
    ok = _print_reports(check_deg(induced), induced, out)
    found = identify(induced)
    out.write(f"identified: {found if found is not None else 'none'}\n")
    ok = ok and found is not None
    if lam.size() == n and args.mode == "standard":
        main = verify_main(lam, n)
        out.write(f"G(X) = G_lambda on tableaux: {'pass' if main.ok else 'FAIL'}\n")
        for problem in main.problems:
            out.write(f"  {problem}\n")
        ok = ok and main.ok
    return 0 if ok else 1


def _cmd_sweep(args, out) -> int:
    rows = run_sweep(args.max_n, args.parallel)
    out.write(format_sweep(rows))
    return 0 if all(r.ok for r in rows) else 1


def _cmd_character(args, out) -> int:
    g = build_crystal(args.shape, args.n)
    for weight, mult in character(g).items():
        out.write(f"{','.join(map(str, weight))}\t{mult}\n")
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "crystal":
            return _write_graph(build_crystal(args.shape, args.n), args, out)
        if args.command == "deg":
            return _write_graph(build_deg(args.shape), args, out)
        if args.command == "zero-weight":
            return _cmd_zero_weight(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "correspond":
            return _cmd_correspond(args, out)
        if args.command == "sweep":
            return _cmd_sweep(args, out)
        if args.command == "character":
            return _cmd_character(args, out)
    except (UsageError, CrystalDegError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
