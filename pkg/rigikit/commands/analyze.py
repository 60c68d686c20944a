"""`rigikit analyze`: one PropertyReport per graph6 line."""

import argparse
import csv
import logging
import sys
from typing import List, Optional, TextIO

from rigikit.commands import ExitCode
from rigikit.config import settings
from rigikit.schemas.report_schemas import PropertyReport
from rigikit.services.graph6_service import read_graph6_lines
from rigikit.services.report_service import analyze_graphs

logger = logging.getLogger(__name__)


def parse_dimensions(text: str) -> List[int]:
    """Parse a comma separated dimension list such as "2,3"."""
    try:
        dims = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension list {text!r}")
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(f"invalid dimension list {text!r}")
    return dims


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "analyze", help="Analyze every graph of a graph6 file"
    )
    parser.add_argument(
        "input", nargs="?", default="-", help="graph6 file, '-' for standard input"
    )
    parser.add_argument(
        "--dims",
        type=parse_dimensions,
        default=None,
        help="Body framework dimensions, e.g. 2,3 (default from settings)",
    )
    parser.add_argument(
        "--no-bounds",
        dest="bounds",
        action="store_false",
        help="Skip the spectral sufficient conditions and their cross-check",
    )
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--timings", action="store_true")
    parser.set_defaults(handler=run)


def _write(reports: List[PropertyReport], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(PropertyReport.csv_header())
        for report in reports:
            writer.writerow(report.csv_values())
        return
    for report in reports:
        out.write(report.model_dump_json() + "\n")


def run(args: argparse.Namespace, out: Optional[TextIO] = None) -> int:
    """
    Read graph6 words, analyze them and write the reports.

    Returns:
        ExitCode.PARSE_ERROR if any line is malformed (nothing is written),
        ExitCode.OK otherwise

    Raises:
        OSError: If the input file cannot be read
    """
    out = out or sys.stdout
    stream = sys.stdin if args.input == "-" else open(args.input, encoding="ascii")
    try:
        entries = []
        errors = []
        for number, graph, error in read_graph6_lines(stream):
            if error is not None:
                errors.append(error)
            else:
                entries.append((number, graph))
    finally:
        if stream is not sys.stdin:
            stream.close()

    if errors:
        for error in errors:
            print(f"rigikit: {error}", file=sys.stderr)
        return ExitCode.PARSE_ERROR

    logger.info("Read %d graphs from %s", len(entries), args.input)
    reports = analyze_graphs(
        entries,
        dimensions=args.dims,
        bounds=args.bounds,
        timings=args.timings,
        threads=args.threads or settings.threads,
    )
    _write(reports, args.format, out)

    violated = sum(len(report.violations) for report in reports)
    if violated:
        logger.warning("%d soundness violations reported", violated)
    return ExitCode.OK
