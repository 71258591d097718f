"""
Report rendering for the command line.
"""

from .export import flows_csv, render_json, scores_csv, to_plain, trends_csv, write_output

__all__ = [
    "flows_csv",
    "render_json",
    "scores_csv",
    "to_plain",
    "trends_csv",
    "write_output",
]
