"""Configuration: settings, constants and logging setup."""

from .constants import (
    ChangePattern,
    ExitCode,
    LogLevel,
    PACKAGE_WEIGHTS,
    ReportFlag,
    ReportFormat,
    RequirementLevel,
)
from .settings import Settings, get_settings
from .logging_config import configure_logging

__all__ = [
    "ChangePattern",
    "ExitCode",
    "LogLevel",
    "PACKAGE_WEIGHTS",
    "ReportFlag",
    "ReportFormat",
    "RequirementLevel",
    "Settings",
    "get_settings",
    "configure_logging",
]
