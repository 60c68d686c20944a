"""`rigikit schema`: print the PropertyReport JSON schema."""

import argparse
import json
import sys
from typing import Optional, TextIO

from rigikit.commands import ExitCode
from rigikit.schemas.report_schemas import report_json_schema


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("schema", help="Print the analysis report schema")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    out.write(json.dumps(report_json_schema(), indent=2, sort_keys=True) + "\n")
    return ExitCode.OK
