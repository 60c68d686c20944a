"""Command line subcommands."""

from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes shared by all subcommands."""

    OK = 0
    ERROR = 1
    PARSE_ERROR = 2
    GUARD_REFUSED = 3
    EXPECTATION_FAILED = 4
