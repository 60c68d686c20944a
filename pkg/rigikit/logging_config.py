"""Logging setup for the command line front end."""

import logging
import sys
from typing import Optional

from rigikit.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Attach a single stderr handler to the rigikit logger.

    Args:
        level: Level name; defaults to settings.log_level (DEBUG when settings.debug)
    """
    if level is None:
        level = "DEBUG" if settings.debug else settings.log_level

    logger = logging.getLogger("rigikit")
    logger.setLevel(level.upper())
    if not any(getattr(h, "_rigikit", False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._rigikit = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
    # Stdout carries reports only
    logger.propagate = False
