"""Command-line front end.

Exit status: 0 on success, 2 for invalid input, 3 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import InputError, InvariantViolation
from .polytope import LatticePolytope
from .report import (
    METHODS,
    TABLE_COLUMNS,
    analyze_payne,
    analyze_polytope,
    analyze_weights,
    classification_table,
    format_row,
    summarize,
)
from .weights import WeightSystem

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


def load_polytope_document(text: str) -> LatticePolytope:
    """Parse ``{"dim": int, "vertices": [[int, ...], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"dim", "vertices"}:
        raise InputError('document must have exactly the keys "dim" and "vertices"')
    dim, verts = doc["dim"], doc["vertices"]

    def is_int(x):
        return isinstance(x, int) and not isinstance(x, bool)

    if not is_int(dim):
        raise InputError('"dim" must be an integer')
    if not isinstance(verts, list) or not all(
            isinstance(v, list) and all(is_int(x) for x in v) for v in verts):
        raise InputError('"vertices" must be a list of integer arrays')
    return LatticePolytope.from_vertices(verts, dim)


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {text!r}")


def _write(path: str | None, text: str):
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _emit_report(rep, out: str | None):
    sys.stdout.write(rep.render())
    _write(out, json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n")


def cmd_analyze(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    P = load_polytope_document(text)
    _emit_report(analyze_polytope(P, args.method, want_delta=args.delta), args.out)
    return EXIT_OK


def cmd_simplex(args) -> int:
    w = WeightSystem.parse(args.weights)
    _emit_report(analyze_weights(w, args.method, want_delta=args.delta), args.out)
    return EXIT_OK


def cmd_payne(args) -> int:
    _emit_report(analyze_payne(args.s, args.k, args.method), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    rows = classification_table(args.dim, args.method, args.parallel)
    if args.filter == "reflexive-summary":
        summary = summarize(rows)
        lines = [f"{k};{v if not isinstance(v, list) else ' '.join(v)}" for k, v in summary.items()]
    else:
        if args.filter == "hl-only":
            rows = [r for r in rows if r["hl"]]
        lines = [";".join(TABLE_COLUMNS)] + [format_row(r) for r in rows]
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    _write(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latticespec", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, method=True):
        if method:
            p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--out", metavar="PATH", help="also write a structured document here")

    p = sub.add_parser("analyze", help="analyze a polytope document")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--delta", action="store_true", help="report the delta vector even if not reflexive")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simplex", help="analyze the reduced simplex of a weight system")
    p.add_argument("--weights", required=True, metavar="LIST", help="e.g. 1,2,2,3")
    p.add_argument("--delta", action="store_true")
    common(p)
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("enumerate", help="classify reduced reflexive simplices of a dimension")
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--filter", choices=("all", "hl-only", "reflexive-summary"), default="all")
    p.add_argument("--parallel", type=_bool, default=False, metavar="BOOL")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("payne", help="weight (1,...,1,s) with s*k ones")
    p.add_argument("--s", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    common(p)
    p.set_defaults(func=cmd_payne)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
