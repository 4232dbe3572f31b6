"""
chainscope - Structured Logging Configuration

Central logging setup shared by every package. Reports go to stdout, so log
records are written to stderr; the CLI keeps the default level at WARNING so
that JSON output stays clean.

Usage:
    from utils.logging_config import get_logger
    logger = get_logger("chains")
    logger.info("level %d: |Q| = %s", level, order)
    logger.warning("centralizer undecided at level %d", level)
"""

import logging
import os
import sys


LOG_LEVEL = os.environ.get("CHAINSCOPE_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = os.environ.get(
    "CHAINSCOPE_LOG_FORMAT",
    "%(asctime)s [%(name)s] %(levelname)s: %(message)s",
)
LOG_DATE_FORMAT = "%Y-%m-%dT%H:%M:%S%z"

_configured = False


def setup_logging(level: str = None) -> None:
    """Configure the root logger once per process.

    Parameters
    ----------
    level : str, optional
        Overrides ``CHAINSCOPE_LOG_LEVEL`` (``"DEBUG"``, ``"INFO"``, ...).
        Passing a level after the first call only adjusts the root level.
    """
    global _configured
    root = logging.getLogger()
    if level is not None:
        root.setLevel(getattr(logging, level.upper(), logging.WARNING))
    if _configured:
        return

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT))

    if level is None:
        root.setLevel(getattr(logging, LOG_LEVEL, logging.WARNING))
    # Avoid adding duplicate handlers on repeated calls
    if not root.handlers:
        root.addHandler(handler)

    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Return a named logger, ensuring the root logger is configured.

    Parameters
    ----------
    name : str
        Dot-separated logger name, e.g. ``"automaton"`` or ``"quotients.groups"``.
    """
    setup_logging()
    return logging.getLogger(name)
