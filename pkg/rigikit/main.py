"""Command line entry point."""

import argparse
import logging
import sys
from typing import List, Optional

from rigikit.commands import ExitCode, analyze, catalog, census, schema
from rigikit.config import settings
from rigikit.errors import EnumerationGuardError, Graph6ParseError, RigikitError
from rigikit.logging_config import configure_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Exact rigidity and spectral analysis of small graphs",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"{settings.app_name} {settings.app_version}",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level for stderr (default from RIGIKIT_LOG_LEVEL)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (analyze, census, catalog, schema):
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and translate errors into exit codes.

    Returns:
        0 on success, 1 on other errors, 2 on graph6 parse errors, 3 when an
        enumeration guard refuses, 4 when an expectation fails
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        return int(args.handler(args))
    except Graph6ParseError as e:
        print(f"rigikit: {e}", file=sys.stderr)
        return ExitCode.PARSE_ERROR
    except EnumerationGuardError as e:
        print(f"rigikit: {e}", file=sys.stderr)
        return ExitCode.GUARD_REFUSED
    except (RigikitError, OSError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"rigikit: {e}", file=sys.stderr)
        return ExitCode.ERROR


if __name__ == "__main__":
    sys.exit(main())
