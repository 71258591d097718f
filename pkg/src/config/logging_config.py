"""
Logging setup for the CLI.
Standard-library records from every module render through structlog on stderr.
"""

import logging
import sys
from typing import Union

import structlog

from .constants import LogLevel

_LEVELS = {
    LogLevel.OFF: logging.CRITICAL + 10,
    LogLevel.WARN: logging.WARNING,
    LogLevel.INFO: logging.INFO,
}

_HANDLER_NAME = "p2g-stderr"


def _build_formatter() -> structlog.stdlib.ProcessorFormatter:
    """Key-value console rendering for foreign (stdlib) log records."""
    return structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
        ],
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
    )


def configure_logging(level: Union[LogLevel, str] = LogLevel.WARN) -> None:
    """Install (or replace) the stderr handler on the root logger.

    Args:
        level: off, warn or info
    """
    level = LogLevel(level)
    root = logging.getLogger()

    for handler in list(root.handlers):
        if handler.get_name() == _HANDLER_NAME:
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(_build_formatter())
    root.addHandler(handler)
    root.setLevel(_LEVELS[level])
