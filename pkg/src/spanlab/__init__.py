"""Greedy multiplicative spanners of weighted graphs, structural verification
(stretch, girth, weighted girth, Moore bounds, lightness), and extremal
instance generators, with an HTTP service and a CLI on top."""

__version__ = "0.1.0"

from .girth import GirthReport, MooreCheck, girth, girth_report, moore_check, weighted_girth
from .graphs import (
    Edge,
    EdgeSubset,
    Graph,
    GraphError,
    MstResult,
    ParseError,
    build_graph,
    edge_subset,
    full_subset,
    metric_closure_filter,
    mst,
    parse_graph,
    serialize_graph,
    shortest_path_distance,
)
from .spanner import SpannerResult, StretchParams, greedy_spanner, stretch_of
from .verify import (
    MetricsReport,
    MinorFreeCertificate,
    StretchReport,
    WeightClassPartition,
    certify_minor_free_by_edges,
    lightness,
    sparsity,
    verify_spanner_stretch,
    weight_class_partition,
)

__all__ = [
    "Edge", "EdgeSubset", "Graph", "GraphError", "MstResult", "ParseError",
    "build_graph", "edge_subset", "full_subset", "metric_closure_filter", "mst",
    "parse_graph", "serialize_graph", "shortest_path_distance",
    "SpannerResult", "StretchParams", "greedy_spanner", "stretch_of",
    "GirthReport", "MooreCheck", "girth", "girth_report", "moore_check", "weighted_girth",
    "MetricsReport", "MinorFreeCertificate", "StretchReport", "WeightClassPartition",
    "certify_minor_free_by_edges", "lightness", "sparsity",
    "verify_spanner_stretch", "weight_class_partition",
]
