"""`rigikit catalog`: list, emit and verify the figure graphs."""

import argparse
import sys
from typing import Optional, TextIO

from rigikit.commands import ExitCode
from rigikit.services import catalog_service
from rigikit.services.graph6_service import emit_graph6


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("catalog", help="Named graphs from the figures")
    actions = parser.add_subparsers(dest="action", required=True)

    listing = actions.add_parser("list", help="Names and asserted facts")
    listing.add_argument("--format", choices=["text", "json"], default="text")

    emit = actions.add_parser("emit", help="Print one graph as graph6")
    emit.add_argument("name")

    actions.add_parser("verify", help="Re-check every asserted fact")
    parser.set_defaults(handler=run)


def _list(fmt: str, out: TextIO) -> int:
    for name in catalog_service.catalog_names():
        summary = catalog_service.summarize(
            catalog_service.catalog_get(name, validate=False)
        )
        if fmt == "json":
            out.write(summary.model_dump_json() + "\n")
            continue
        out.write(
            f"{summary.name}\t{summary.figure}\tn={summary.n}\tm={summary.m}\t"
            f"{summary.description}\n"
        )
        for fact in summary.facts:
            out.write(f"    {fact}\n")
    return ExitCode.OK


def _verify(out: TextIO) -> int:
    checks = catalog_service.verify_catalog()
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name}: {check.fact}"
        if not check.passed:
            line += f" (got {check.actual})"
        out.write(line + "\n")
    failed = sum(not check.passed for check in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} facts hold\n")
    return ExitCode.EXPECTATION_FAILED if failed else ExitCode.OK


def run(args: argparse.Namespace, out: Optional[TextIO] = None) -> int:
    """
    Dispatch the catalog action.

    Raises:
        CatalogLookupError: If `emit` names an unknown graph
    """
    out = out or sys.stdout
    if args.action == "list":
        return _list(args.format, out)
    if args.action == "emit":
        entry = catalog_service.catalog_get(args.name, validate=False)
        out.write(emit_graph6(entry.graph) + "\n")
        return ExitCode.OK
    return _verify(out)
