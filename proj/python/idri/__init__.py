"""Co-citation interdisciplinarity (IDRI) toolkit.

Thin wrapper over the compiled extension: citation-graph ingestion,
X-motif counting, the per-paper IDRI metric, mediant aggregation over
groups, the brute-force cross-check and the synthetic network generator.
"""

from ._core import (
    AggregateResult,
    CitationGraph,
    FocalStats,
    MetricResult,
    Rational,
    __version__,
    aggregate,
    all_stats,
    apply_metadata_csv,
    betweenness_diagnostic,
    compute_metric,
    compute_report,
    decay_trend,
    enumerate_xmotifs,
    focal_stats,
    generate,
    mediant,
    run_check,
    to_decimal,
    to_percent,
)

__all__ = [
    "AggregateResult",
    "CitationGraph",
    "FocalStats",
    "MetricResult",
    "Rational",
    "__version__",
    "aggregate",
    "all_stats",
    "apply_metadata_csv",
    "betweenness_diagnostic",
    "compute_metric",
    "compute_report",
    "decay_trend",
    "enumerate_xmotifs",
    "focal_stats",
    "generate",
    "mediant",
    "run_check",
    "to_decimal",
    "to_percent",
]
