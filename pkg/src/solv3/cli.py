"""Command-line interface: ``solv3 report | verify | table1``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 stratum
ambiguity.  Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time

from . import report as rep
from .algebra import EPS_CLASS, validate_triple
from .curvature import GENERIC_TOL
from .errors import DomainError, NumericalError, StratumError
from .index import analyze
from .killing import FD_STEP
from .table import table1
from .verify import DEFAULT_POINTS, DEFAULT_SEED, run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_STRATUM = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """Treats ``-1e-3`` as a number rather than an option flag."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$")


def default_seed() -> int:
    env = os.environ.get("SOLV3_SEED")
    return int(env) if env else DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="solv3", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple_args(p):
        p.add_argument("--triple", nargs=3, type=float, required=True, metavar=("A", "B", "C"))
        p.add_argument("--tol", type=float, default=GENERIC_TOL, help="stratum/genericity tolerance")
        p.add_argument("--eps", type=float, default=EPS_CLASS, help="classification tolerance")
        p.add_argument("--fd-step", type=float, default=FD_STEP, help="finite-difference step")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("report", help="classification, curvature and index of symmetry")
    triple_args(p)
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON document")

    p = sub.add_parser("verify", help="check every closed form numerically")
    triple_args(p)
    p.add_argument("--points", type=int, default=DEFAULT_POINTS)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("table1", help="reproduce the table of positive indices")
    p.add_argument("--samples", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=GENERIC_TOL)
    p.add_argument("--json", action="store_true")
    return parser


def cmd_report(args) -> int:
    start = time.perf_counter()
    t = validate_triple(*args.triple, eps=args.eps)
    r = analyze(t, args.tol, args.eps)
    elapsed = 1e3 * (time.perf_counter() - start)
    if args.json:
        doc = rep.report_document(r, {"tol": args.tol, "eps": args.eps, "fd_step": args.fd_step})
        if args.timing:
            doc["timing_ms"] = elapsed
        print(rep.dumps(doc))
    else:
        print(rep.report_text(r))
    print(f"report took {elapsed:.1f} ms", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    t = validate_triple(*args.triple, eps=args.eps)
    checks, notes = run_checks(t, points=args.points, seed=seed, fd_step=args.fd_step, tol=args.tol)
    if args.json:
        print(rep.dumps(rep.verify_document(t, checks, notes, args.points, seed)))
    else:
        print(rep.verify_text(t, checks, notes, seed))
    failed = [c for c in checks if not c.passed]
    for c in failed:
        print(f"failed: {c.name} residual {c.residual:.3e} >= {c.threshold:.1e}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_table1(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    records = table1(args.samples, seed=seed, tol=args.tol)
    if args.json:
        print(rep.dumps(rep.table_document(records, args.samples, seed)))
    else:
        print(rep.table_text(records))
    bad = sorted({r.row for r in records if not r.match})
    if bad:
        print("mismatched rows: " + ", ".join(map(str, bad)), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


COMMANDS = {"report": cmd_report, "verify": cmd_verify, "table1": cmd_table1}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StratumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRATUM
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
