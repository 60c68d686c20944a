"""`rigikit census`: count one stratum of regular graphs."""

import argparse
import csv
import sys
from typing import Optional, TextIO

from rigikit.commands import ExitCode
from rigikit.models.census_models import CensusFilters, CensusRow
from rigikit.services.census_service import census_table

# --expect-* option name -> CensusCounts field
EXPECTATIONS = {
    "total": "total",
    "ramanujan": "ramanujan",
    "rigid": "rigid",
    "gr": "globally_rigid",
    "rigid_not_gr": "rigid_not_gr",
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "census", help="Enumerate k-regular graphs on n vertices and classify them"
    )
    parser.add_argument("--n", type=int, required=True, help="Vertex count")
    parser.add_argument("--k", type=int, required=True, help="Degree")
    parser.add_argument("--bipartite", action="store_true")
    parser.add_argument("--vertex-transitive", action="store_true")
    parser.add_argument(
        "--include-disconnected",
        action="store_true",
        help="Also count disconnected graphs",
    )
    parser.add_argument(
        "--force", action="store_true", help="Ignore the enumeration guard"
    )
    parser.add_argument(
        "--dump",
        metavar="FILE",
        default=None,
        help="Write the Ramanujan graphs to FILE as graph6",
    )
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--timings", action="store_true")
    for option in EXPECTATIONS:
        parser.add_argument(
            f"--expect-{option.replace('_', '-')}",
            dest=f"expect_{option}",
            type=int,
            default=None,
            metavar="COUNT",
        )
    parser.set_defaults(handler=run)


def _write(row: CensusRow, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(row.model_dump_json(exclude={"ramanujan_graph6"}) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(row.csv_header())
    writer.writerow(row.csv_values())


def check_expectations(row: CensusRow, args: argparse.Namespace) -> bool:
    """Compare the counts against every --expect-* value given; report mismatches."""
    passed = True
    for option, field in EXPECTATIONS.items():
        expected = getattr(args, f"expect_{option}", None)
        if expected is None:
            continue
        actual = getattr(row.counts, field)
        if actual != expected:
            print(
                f"rigikit: n={row.n} k={row.k} {field}: expected {expected}, "
                f"got {actual}",
                file=sys.stderr,
            )
            passed = False
    return passed


def run(args: argparse.Namespace, out: Optional[TextIO] = None) -> int:
    """
    Print one CensusRow.

    Returns:
        ExitCode.EXPECTATION_FAILED if an --expect-* value differs, ExitCode.OK
        otherwise

    Raises:
        EnumerationGuardError: If n exceeds the guard for k without --force
    """
    out = out or sys.stdout
    filters = CensusFilters(
        connected=not args.include_disconnected,
        bipartite=args.bipartite,
        vertex_transitive=args.vertex_transitive,
    )
    row = census_table(
        args.n,
        args.k,
        filters,
        force=args.force,
        dump=args.dump is not None,
        timings=args.timings,
        threads=args.threads,
    )
    _write(row, args.format, out)

    if args.dump is not None:
        with open(args.dump, "w", encoding="ascii") as handle:
            for word in row.ramanujan_graph6 or []:
                handle.write(word + "\n")

    if not check_expectations(row, args):
        return ExitCode.EXPECTATION_FAILED
    return ExitCode.OK
