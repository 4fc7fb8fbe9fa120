"""Greedy multiplicative spanner construction.

Edges are scanned in non-decreasing weight order (ties by edge id) and an edge
(u, v) is kept iff the current spanner's u-v distance exceeds t * w(u, v),
where t = (1 + s*epsilon) * (2k - 1). epsilon = 0 recovers the plain
(2k-1)-stretch construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    INF,
    REL_TOL,
    EdgeSubset,
    Graph,
    GraphError,
    dijkstra_distance,
    edge_subset,
)


class NonMetricEdgeError(GraphError):
    """Raised in on_nonmetric='error' mode when an input edge has a shorter detour."""


def stretch_of(k: int, epsilon: float, s: int) -> float:
    """The stretch factor (1 + s*epsilon) * (2k - 1)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if epsilon < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")
    if s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    return (1.0 + s * epsilon) * (2 * k - 1)


@dataclass(frozen=True)
class StretchParams:
    """Stretch parameters; only the realized product s*epsilon matters."""

    k: int
    epsilon: float = 0.0
    s: int = 200

    def __post_init__(self):
        stretch_of(self.k, self.epsilon, self.s)  # validates ranges

    @property
    def t(self) -> float:
        return stretch_of(self.k, self.epsilon, self.s)


@dataclass(frozen=True)
class EdgeDecision:
    edge_id: int
    weight: float
    bound: float          # t * w
    detour: float         # dist in the partial spanner at decision time (INF if > bound)
    kept: bool


@dataclass(frozen=True)
class SpannerResult:
    spanner: EdgeSubset
    edges_examined: int
    edges_kept: int
    params: StretchParams
    trace: tuple[EdgeDecision, ...] | None = None


def greedy_spanner(g: Graph, params: StretchParams,
                   keep_trace: bool = False,
                   on_nonmetric: str = "skip") -> SpannerResult:
    """Build the greedy t-spanner of g.

    The keep rule uses strict ">" with relative tolerance REL_TOL: a detour
    within tolerance of the bound counts as <= and the edge is skipped.

    Non-metric edges (weight exceeding the best detour in g) can never satisfy
    the keep rule for t >= 1, so on_nonmetric="skip" (the default) needs no
    separate filtering pass. on_nonmetric="error" additionally checks each
    edge against g and raises NonMetricEdgeError.
    """
    if on_nonmetric not in ("skip", "error"):
        raise ValueError(f"on_nonmetric must be 'skip' or 'error', got {on_nonmetric!r}")
    t = params.t
    adj_h: list[list[tuple[int, float, int]]] = [[] for _ in range(g.n)]
    kept: list[int] = []
    trace: list[EdgeDecision] = [] if keep_trace else None  # type: ignore[assignment]
    order = sorted(range(g.m), key=lambda eid: (g.edges[eid].w, eid))
    for eid in order:
        u, v, w = g.edges[eid]
        if on_nonmetric == "error":
            d_g = dijkstra_distance(g.adj, u, v, cutoff=w * (1.0 + REL_TOL), skip_edge=eid)
            if d_g < w * (1.0 - REL_TOL):
                raise NonMetricEdgeError(
                    f"edge {eid} ({u}, {v}) has weight {w} but detour {d_g} in g")
        bound = t * w
        cutoff = bound * (1.0 + REL_TOL)
        d = dijkstra_distance(adj_h, u, v, cutoff=cutoff)
        # Bounded search returns INF exactly when dist_H(u, v) > t*w*(1+tol).
        keep = d == INF
        if keep:
            kept.append(eid)
            adj_h[u].append((v, w, eid))
            adj_h[v].append((u, w, eid))
        if keep_trace:
            trace.append(EdgeDecision(edge_id=eid, weight=w, bound=bound,
                                      detour=d, kept=keep))
    return SpannerResult(
        spanner=edge_subset(g, kept),
        edges_examined=g.m,
        edges_kept=len(kept),
        params=params,
        trace=tuple(trace) if keep_trace else None,
    )
