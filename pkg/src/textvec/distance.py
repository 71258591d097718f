"""
Edit distance between group names.
"""

import Levenshtein


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance (unit costs) over Unicode code points."""
    return Levenshtein.distance(a, b)
