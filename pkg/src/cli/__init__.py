"""
Command-line interface.
"""

from .config import RunConfig
from .main import build_parser, main, run

__all__ = ["RunConfig", "build_parser", "main", "run"]
