"""
Subcommand handlers. Each takes a RunConfig and returns the rendered report.
"""

import logging
from typing import Callable, Dict, List, Optional

from ..config.constants import ReportFormat
from ..errors import EmptyCorpus, NotFound, UsageError
from ..evolution import aggregate_flows, diff_groups, flow_chain, suggest_patterns
from ..gvalue import (
    correlate_aspects,
    load_aspect_scores,
    score_snapshot,
    summarize_scores,
)
from ..ingest import (
    Snapshot,
    build_snapshot,
    fetch_repo_metadata,
    load_snapshot,
    read_metadata_file,
    save_snapshot,
)
from ..reports import flows_csv, render_json, scores_csv, trends_csv
from ..textvec import KeywordContrast, keyword_contrast, tokenize
from ..topics import TopicScan, group_description_corpus, select_topic_count
from ..trends import (
    load_popularity,
    popularity_correlation,
    summarize_trends,
    trend_series,
)
from .config import RunConfig

logger = logging.getLogger(__name__)


def _json_only(config: RunConfig) -> None:
    if config.format != ReportFormat.JSON:
        raise UsageError(f"{config.command} has no CSV form; use --format json")


def ingest(config: RunConfig) -> str:
    """comps + primary -> canonical snapshot JSON."""
    _json_only(config)
    comps = read_metadata_file(config.comps)
    primary = read_metadata_file(config.primary)
    snapshot, warnings = build_snapshot(comps, primary, config.dist, config.version)
    logger.info(
        f"Ingested {len(snapshot.groups)} groups and {len(snapshot.packages)} packages "
        f"({len(warnings)} warnings)"
    )
    return save_snapshot(snapshot).decode("utf-8")


def score(config: RunConfig) -> str:
    """GValue reports for every group of one snapshot."""
    snapshot = load_snapshot(config.inputs[0])
    scores = score_snapshot(snapshot, threshold=config.threshold, workers=config.workers)
    if config.format == ReportFormat.CSV:
        return scores_csv(scores.reports)
    return render_json(scores)


def diff(config: RunConfig) -> str:
    """Group diff and suggested change patterns between two snapshots."""
    _json_only(config)
    prev = load_snapshot(config.inputs[0])
    curr = load_snapshot(config.inputs[1])
    return render_json(_diff_section(prev, curr, config))


def _diff_section(prev: Snapshot, curr: Snapshot, config: RunConfig) -> Dict[str, object]:
    return {
        "diff": diff_groups(prev, curr),
        "patterns": suggest_patterns(
            prev,
            curr,
            rename_threshold=config.rename_threshold,
            split_coverage=config.split_coverage,
        ),
    }


def flows(config: RunConfig) -> str:
    """Package flow for every consecutive pair of the given snapshots."""
    snapshots = [load_snapshot(path) for path in config.inputs]
    reports = flow_chain(snapshots)
    if config.format == ReportFormat.CSV:
        return flows_csv(reports)
    return render_json({"pairs": reports, "breakdown": aggregate_flows(reports)})


def trends(config: RunConfig) -> str:
    """Adoption trend series, per-distribution spread and optional popularity correlation."""
    snapshots = [load_snapshot(path) for path in config.inputs]
    points = trend_series(snapshots)
    if config.format == ReportFormat.CSV:
        return trends_csv(points)

    by_distribution: Dict[str, List[int]] = {}
    for position, snapshot in enumerate(snapshots):
        by_distribution.setdefault(snapshot.distribution, []).append(position)
    summaries = [
        summarize_trends([points[i] for i in positions], distribution)
        for distribution, positions in by_distribution.items()
    ]

    correlation = None
    if config.popularity:
        latest = {
            distribution: points[positions[-1]].ratio
            for distribution, positions in by_distribution.items()
        }
        correlation = popularity_correlation(latest, load_popularity(config.popularity))

    return render_json({"points": points, "summaries": summaries, "popularity": correlation})


def _topic_scan(snapshot: Snapshot, config: RunConfig) -> TopicScan:
    return select_topic_count(
        group_description_corpus(snapshot),
        config.k_min,
        config.k_max,
        alpha=config.alpha,
        beta=config.beta,
        iterations=config.iterations,
        seed=config.seed,
        top_n=config.top_n,
    )


def topics(config: RunConfig) -> str:
    """Topic-count scan over the group descriptions of one snapshot."""
    _json_only(config)
    return render_json(_topic_scan(load_snapshot(config.inputs[0]), config))


def _keyword_contrast(snapshot: Snapshot, config: RunConfig) -> KeywordContrast:
    grouped = snapshot.grouped_names()
    grouped_docs = []
    ungrouped_docs = []
    for package in sorted(snapshot.packages, key=lambda p: p.name):
        target = grouped_docs if package.name in grouped else ungrouped_docs
        target.append(tokenize(package.description))
    return keyword_contrast(grouped_docs, ungrouped_docs, config.top_k)


def keywords(config: RunConfig) -> str:
    """Keywords of grouped vs. ungrouped package descriptions."""
    _json_only(config)
    return render_json(_keyword_contrast(load_snapshot(config.inputs[0]), config))


def fetch(config: RunConfig) -> str:
    """Download comps and primary from a mirror."""
    _json_only(config)
    base_url, dest = config.inputs[0], config.inputs[1]
    try:
        manifest = fetch_repo_metadata(base_url, dest)
    except NotFound as e:
        if e.resource != "comps" or e.manifest is None:
            raise
        logger.warning(f"{base_url} publishes no comps; fetched package metadata only")
        manifest = e.manifest
    return render_json(manifest)


def validate(config: RunConfig) -> str:
    """Spearman correlation of gvalue, and of each rated aspect, against manual scores."""
    _json_only(config)
    snapshot = load_snapshot(config.inputs[0])
    ratings = load_aspect_scores(config.inputs[1])
    scores = score_snapshot(snapshot, threshold=config.threshold, workers=config.workers)
    return render_json(correlate_aspects(scores.reports, ratings))


def _unless_empty(build: Callable[[], object], section: str) -> Optional[object]:
    """Run a report section, leaving it null when its corpus is empty."""
    try:
        return build()
    except EmptyCorpus as e:
        logger.warning(f"Skipping {section}: {e}")
        return None


def report(config: RunConfig) -> str:
    """One bundle: scores summary, low-quality groups, keywords, topics, plus diff and flows."""
    _json_only(config)
    snapshot = load_snapshot(config.inputs[0])
    scores = score_snapshot(snapshot, threshold=config.threshold, workers=config.workers)
    bundle: Dict[str, object] = {
        "distribution": snapshot.distribution,
        "version": snapshot.version,
        "summary": summarize_scores(scores.reports, config.threshold),
        "low_quality": scores.low_quality,
        "keywords": _unless_empty(lambda: _keyword_contrast(snapshot, config), "keywords"),
        "topics": _unless_empty(lambda: _topic_scan(snapshot, config), "topics"),
    }
    if config.prev:
        prev = load_snapshot(config.prev)
        bundle.update(_diff_section(prev, snapshot, config))
        bundle["flows"] = flow_chain([prev, snapshot])[0]
    return render_json(bundle)


COMMANDS: Dict[str, Callable[[RunConfig], str]] = {
    "ingest": ingest,
    "score": score,
    "diff": diff,
    "flows": flows,
    "trends": trends,
    "topics": topics,
    "keywords": keywords,
    "fetch": fetch,
    "validate": validate,
    "report": report,
}
