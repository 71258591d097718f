"""
Constants for the P2G analysis toolkit.
Defines membership levels, change patterns, report enums and metric defaults.
"""

from enum import Enum, IntEnum
from typing import Dict, Tuple


class RequirementLevel(str, Enum):
    """comps membership levels, most essential first."""
    MANDATORY = "mandatory"
    DEFAULT = "default"
    OPTIONAL = "optional"


class ChangePattern(str, Enum):
    """Group change patterns between consecutive versions."""
    SPLIT = "split"
    MERGE = "merge"
    RENAME = "rename"
    ADD_FEATURE = "add_feature"
    REMOVE_FEATURE = "remove_feature"
    REPLACE_FEATURE = "replace_feature"


class ReportFormat(str, Enum):
    """Output formats for CLI reports."""
    JSON = "json"
    CSV = "csv"


class LogLevel(str, Enum):
    """Values accepted by P2G_LOG / --log."""
    OFF = "off"
    WARN = "warn"
    INFO = "info"


class ExitCode(IntEnum):
    """CLI exit codes."""
    OK = 0
    USAGE = 1
    DATA = 2


class ReportFlag(str, Enum):
    """Diagnostics attached to a GValue report."""
    SINGLETON = "singleton"
    EMPTY_GROUP = "empty_group"
    SIZE_OUTLIER = "size_outlier"
    WEAK_DESCRIPTION = "weak_description"
    DIF_NOT_COMPUTABLE = "dif_not_computable"
    MISSING_PACKAGES = "missing_packages"


# Package weight per membership level
PACKAGE_WEIGHTS: Dict[RequirementLevel, float] = {
    RequirementLevel.MANDATORY: 0.8,
    RequirementLevel.DEFAULT: 0.5,
    RequirementLevel.OPTIONAL: 0.2,
}

# Canonical snapshot JSON key order
SNAPSHOT_KEYS: Tuple[str, ...] = ("distribution", "version", "groups", "packages")
GROUP_KEYS: Tuple[str, ...] = ("id", "name", "description", "packages")
ENTRY_KEYS: Tuple[str, ...] = ("name", "requirement")
PACKAGE_KEYS: Tuple[str, ...] = ("name", "description", "provides", "requires")

# GValue
DEFAULT_LOW_QUALITY_THRESHOLD = 0.2
DISTRIBUTION_SIGMA_WIDTH = 2.0  # reasonable size range is mean +/- 2 sigma

# Change pattern heuristics
DEFAULT_RENAME_THRESHOLD = 0.7
DEFAULT_SPLIT_COVERAGE = 0.6

# Topic modelling
DEFAULT_LDA_ALPHA_NUMERATOR = 50.0  # alpha = 50 / K
DEFAULT_LDA_BETA = 0.01
DEFAULT_LDA_ITERATIONS = 1000
DEFAULT_LDA_TOP_N = 10
DEFAULT_SEED = 42

# Keywords
DEFAULT_KEYWORD_TOP_K = 20

# Spearman: exact permutation p-value up to this many points
SPEARMAN_EXACT_MAX_N = 8

# Repodata layout
REPOMD_PATH = "repodata/repomd.xml"
COMPS_DATA_TYPES: Tuple[str, ...] = ("group", "group_gz")
PRIMARY_DATA_TYPE = "primary"

# CSV columns
SCORE_CSV_COLUMNS: Tuple[str, ...] = (
    "group_id", "com", "rel", "ndif", "ddif", "pdif", "dif", "dist", "gvalue", "flags",
)
FLOW_CSV_COLUMNS: Tuple[str, ...] = ("prev_version", "curr_version", "s1", "s2", "o1", "o2")
TREND_CSV_COLUMNS: Tuple[str, ...] = (
    "version", "groups", "p2g_packages", "total_packages", "ratio",
)
CSV_FLOAT_FORMAT = "%.12g"
