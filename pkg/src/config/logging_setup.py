"""Diagnostic logging for the command-line entry point."""

import logging
import sys

_LEVELS = {
    "off": logging.CRITICAL + 1,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level_name: str = "off") -> None:
    """Route `src` loggers to a single stderr handler at the requested level."""
    level = _LEVELS.get(str(level_name).lower(), _LEVELS["off"])
    root = logging.getLogger("src")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
