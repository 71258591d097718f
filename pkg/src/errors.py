"""
Exception hierarchy for the P2G toolkit.
Library code raises these; only the CLI turns them into exit codes.
"""

from typing import Any, Optional

from .config.constants import ExitCode


class P2GError(Exception):
    """Base class for every error raised by this package."""

    exit_code: ExitCode = ExitCode.DATA


class UsageError(P2GError):
    """Bad command-line usage."""

    exit_code = ExitCode.USAGE


class DataError(P2GError):
    """Input data could not be processed."""


class IoError(DataError):
    """A path could not be read or written."""

    def __init__(self, path: Any, reason: str = ""):
        self.path = str(path)
        message = f"cannot access {self.path}"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message)


class MalformedXml(DataError):
    """Bytes are not well-formed XML."""


class MissingField(DataError):
    """A required element or key is absent."""


class DuplicateGroupId(DataError):
    """Two groups share one id."""


class SchemaViolation(DataError):
    """Snapshot JSON (or CSV input) does not match the expected schema."""


class NotFound(DataError):
    """A repository resource is not referenced by the mirror."""

    def __init__(self, resource: str, manifest: Optional[Any] = None):
        self.resource = resource
        self.manifest = manifest
        super().__init__(f"{resource} metadata not found")


class NetworkError(DataError):
    """Downloading from a mirror failed."""


class DecompressError(DataError):
    """A compressed metadata file could not be decompressed."""


class UnknownNode(DataError):
    """Package is not a node of the dependency graph."""


class SamePackage(DataError):
    """Dependency degree asked for a package against itself."""


class EmptyCorpus(DataError):
    """A text operation received no documents or no tokens."""


class UnknownGroup(DataError):
    """Group does not belong to the snapshot."""


class EmptyGroup(DataError):
    """Group has no packages."""


class SingletonCorpus(DataError):
    """Differentiation needs at least two groups."""


class LengthMismatch(DataError):
    """Paired sequences differ in length."""


class TooFewPoints(DataError):
    """Not enough observations for a statistic."""


class BadHyperparam(DataError):
    """Model hyperparameter out of range."""


class EmptyInput(DataError):
    """An aggregate was asked for over nothing."""
