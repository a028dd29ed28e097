"""qorbit command line.

Exit codes: 0 success, 1 usage error, 2 invalid element or argument,
3 verify outcome differs from --expect.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .claims import CLAIMS, CONFIRMED, REFUTED, run_claim
from .errors import QorbitError
from .group import reduce_with_trace
from .orbits import (
    decompose,
    enumerate_ambiguous,
    format_label,
    orbit_of,
    orbits_csv,
    orbits_json,
    orbits_table,
    realized_labels,
    to_dot,
)
from .quadirr import QuadIrr
from .residues import enumerate_classes, partition_ACsets, predicted_subset_count, subset_label

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_EXPECT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qorbit", description="Modular group orbits on Q*(sqrt n).")
    ap.add_argument("--version", action="version", version=f"qorbit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("orbits", help="orbit table: rep, ambiguous length, fixing word, label")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")

    p = sub.add_parser("ambiguous", help="count (and list) ambiguous numbers")
    p.add_argument("n", type=int)
    p.add_argument("--list", action="store_true")

    for name, text in [("classify", "triple, ambiguity, subset label, orbit rep"),
                       ("reduce", "ambiguous reduct and the G-word reaching it"),
                       ("word", "fixing word of the containing orbit")]:
        p = sub.add_parser(name, help=text)
        p.add_argument("a", type=int)
        p.add_argument("c", type=int)
        p.add_argument("n", type=int)
        if name == "reduce":
            p.add_argument("--trace", action="store_true")

    p = sub.add_parser("classes", help="residue classes [a,b,c] mod s")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--partition", type=int, metavar="P")

    p = sub.add_parser("subsets", help="predicted vs realized G-subset counts")
    p.add_argument("n", type=int)

    p = sub.add_parser("diagram", help="Graphviz export of the ambiguous graph")
    p.add_argument("n", type=int)
    p.add_argument("--out", required=True)

    p = sub.add_parser("verify", help="check a claim and print a JSON report")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--n", type=_int_list)
    p.add_argument("--p", type=_int_list)
    p.add_argument("--nmax", type=int, default=500)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--expect", choices=[CONFIRMED, REFUTED, "inapplicable"], default=CONFIRMED)
    return ap


def _element(args) -> QuadIrr:
    return QuadIrr.make(args.a, args.c, args.n)


def cmd_orbits(args, out):
    fmt = {"table": orbits_table, "json": orbits_json, "csv": orbits_csv}[args.format]
    out.write(fmt(args.n))


def cmd_ambiguous(args, out):
    amb = enumerate_ambiguous(args.n)
    out.write(f"tau = {len(amb)}\n")
    if args.list:
        for alpha in amb:
            out.write(f"{alpha.a},{alpha.b},{alpha.c}\n")


def cmd_classify(args, out):
    alpha = _element(args)
    orbit = orbit_of(alpha)
    out.write(f"triple    {alpha.a},{alpha.b},{alpha.c}  {alpha}\n")
    out.write(f"ambiguous {'yes' if alpha.is_ambiguous() else 'no'}\n")
    out.write(f"label     {format_label(subset_label(alpha))}\n")
    out.write(f"orbit     {orbit.rep}  (length {orbit.ambiguous_length})\n")


def cmd_reduce(args, out):
    red = reduce_with_trace(_element(args))
    if args.trace:
        for i, (alpha, m) in enumerate(red.steps):
            out.write(f"step {i}: {alpha.a},{alpha.b},{alpha.c}  floor={m}\n")
    out.write(f"reduct    {red.result.a},{red.result.b},{red.result.c}  {red.result}\n")
    out.write(f"word      {red.word}\n")
    out.write(f"steps     {len(red.steps)}\n")


def cmd_word(args, out):
    orbit = orbit_of(_element(args))
    out.write(f"rep       {orbit.rep}\n")
    out.write(f"word      {orbit.fixing_word}\n")


def cmd_classes(args, out):
    if args.partition is None:
        classes = enumerate_classes(args.n, args.s)
        out.write(f"{len(classes)} classes mod {args.s}\n")
        out.write(" ".join(map(str, classes)) + "\n")
        return
    if args.partition != args.s:
        raise UsageError("--partition P requires s == P")
    for name, part in partition_ACsets(args.n, args.partition).as_dict().items():
        out.write(f"{name} ({len(part)}): {' '.join(map(str, sorted(part, key=lambda k: k.triple)))}\n")


def cmd_subsets(args, out):
    n = args.n
    out.write(f"predicted {predicted_subset_count(n)}\n")
    out.write(f"realized  {len(realized_labels(n))}\n")
    out.write(f"orbits    {len(decompose(n).orbits)}\n")


def cmd_diagram(args, out):
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_dot(args.n))
    out.write(f"wrote {args.out}\n")


def cmd_verify(args, out):
    report = run_claim(args.claim, args.n, args.p, args.nmax, args.jobs)
    out.write(report.to_json() + "\n")
    ok = report.status == args.expect
    out.write(f"{'PASS' if ok else 'FAIL'} {args.claim}: {report.status} (expected {args.expect})\n")
    return EXIT_OK if ok else EXIT_EXPECT


COMMANDS = {
    "orbits": cmd_orbits,
    "ambiguous": cmd_ambiguous,
    "classify": cmd_classify,
    "reduce": cmd_reduce,
    "word": cmd_word,
    "classes": cmd_classes,
    "subsets": cmd_subsets,
    "diagram": cmd_diagram,
    "verify": cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out) or EXIT_OK
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except QorbitError as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return EXIT_INVALID
    except SystemExit as e:  # --help / --version
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
