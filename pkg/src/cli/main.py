"""
p2g command line.
Data goes to standard output (or -o), logs and errors to standard error.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from ..config.constants import ExitCode, LogLevel, ReportFormat
from ..config.logging_config import configure_logging
from ..config.settings import Settings
from ..errors import P2GError, UsageError
from ..reports import write_output
from .commands import COMMANDS
from .config import RunConfig

logger = logging.getLogger(__name__)

PROG = "p2g"


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_report_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in ReportFormat],
        help="output format (default: csv for a .csv -o path, else json)",
    )
    parser.add_argument("-o", "--output", help="write the report here instead of stdout")


def _add_pattern_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rename-threshold", type=float, help="minimum overlap for a rename")
    parser.add_argument("--split-coverage", type=float, help="minimum coverage for split/merge")


def _add_scoring_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threshold", type=float, help="low-quality gvalue cut-off")
    parser.add_argument("--workers", type=int, help="scoring threads")


def _add_topic_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kmin", type=int, help="smallest topic count")
    parser.add_argument("--kmax", type=int, help="largest topic count")
    parser.add_argument("--seed", type=int, help="sampler seed")
    parser.add_argument("--iterations", type=int, help="Gibbs sweeps per fit")
    parser.add_argument("--alpha", type=float, help="document-topic prior (default 50/K)")
    parser.add_argument("--beta", type=float, help="topic-word prior")
    parser.add_argument("--top-n", type=int, help="top words per topic")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every subcommand."""
    parser = _ArgumentParser(prog=PROG, description="Package-to-group metadata analysis")
    parser.add_argument(
        "--log",
        choices=[level.value for level in LogLevel],
        help="log verbosity (overrides P2G_LOG)",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    ingest = subparsers.add_parser("ingest", help="build a snapshot from comps and primary")
    ingest.add_argument("--comps", required=True, help="comps XML (.gz accepted)")
    ingest.add_argument("--primary", required=True, help="primary XML (.gz accepted)")
    ingest.add_argument("--dist", required=True, help="distribution name")
    ingest.add_argument("--version", required=True, help="distribution version")
    _add_report_options(ingest)

    score = subparsers.add_parser("score", help="GValue of every group")
    score.add_argument("inputs", nargs=1, metavar="SNAPSHOT")
    _add_scoring_options(score)
    _add_report_options(score)

    diff = subparsers.add_parser("diff", help="group diff and change patterns")
    diff.add_argument("inputs", nargs=2, metavar="SNAPSHOT", help="previous and current")
    _add_pattern_options(diff)
    _add_report_options(diff)

    flows = subparsers.add_parser("flows", help="package flow across consecutive snapshots")
    flows.add_argument("inputs", nargs="+", metavar="SNAPSHOT", help="two or more, oldest first")
    _add_report_options(flows)

    trends = subparsers.add_parser("trends", help="adoption trend across versions")
    trends.add_argument("inputs", nargs="+", metavar="SNAPSHOT", help="oldest first")
    trends.add_argument("--popularity", help="name,stars CSV")
    _add_report_options(trends)

    topics = subparsers.add_parser("topics", help="topic-count scan over group descriptions")
    topics.add_argument("inputs", nargs=1, metavar="SNAPSHOT")
    _add_topic_options(topics)
    _add_report_options(topics)

    keywords = subparsers.add_parser("keywords", help="grouped vs. ungrouped keywords")
    keywords.add_argument("inputs", nargs=1, metavar="SNAPSHOT")
    keywords.add_argument("--top-k", type=int, help="keywords per side")
    _add_report_options(keywords)

    fetch = subparsers.add_parser("fetch", help="download comps and primary from a mirror")
    fetch.add_argument(
        "inputs", nargs=2, metavar="LOCATION", help="mirror base URL, then destination directory"
    )
    _add_report_options(fetch)

    validate = subparsers.add_parser("validate", help="gvalue vs. manual scores")
    validate.add_argument(
        "inputs", nargs=2, metavar="FILE", help="snapshot JSON, then a group_id,score CSV"
    )
    _add_scoring_options(validate)
    _add_report_options(validate)

    report = subparsers.add_parser("report", help="bundled report for one snapshot")
    report.add_argument("inputs", nargs=1, metavar="SNAPSHOT")
    report.add_argument("--prev", help="previous snapshot for diff and flows")
    report.add_argument("--top-k", type=int, help="keywords per side")
    _add_scoring_options(report)
    _add_pattern_options(report)
    _add_topic_options(report)
    _add_report_options(report)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code.

    0 on success, 1 on usage errors, 2 on data errors.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        settings = Settings()
    except ValidationError as e:
        print(f"{PROG}: error: invalid environment: {e.errors()[0]['msg']}", file=sys.stderr)
        return ExitCode.USAGE

    configure_logging(settings.log)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig.from_namespace(args, settings)
        configure_logging(config.log)
        text = COMMANDS[config.command](config)
        write_output(text, config.output)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except UsageError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return ExitCode.USAGE
    except P2GError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return e.exit_code
    return ExitCode.OK


def main(argv: Optional[List[str]] = None) -> None:
    """Console entry point."""
    sys.exit(run(argv))
