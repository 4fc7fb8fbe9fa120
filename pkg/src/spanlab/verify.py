"""Spanner verification: stretch, sparsity/lightness, minor-freeness
certification by edge counting, and the weight-class partition diagnostic.

All-pairs distance work is delegated to scipy's Dijkstra; the construction
side of the library keeps its own hand-written searches, so the two routes
stay independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra as csgraph_dijkstra

from .graphs import (
    INF,
    REL_TOL,
    EdgeSubset,
    Graph,
    GraphError,
    connected_components,
    mst,
)

ALL_PAIRS_GUARD = 2000


def _csr(g: Graph, members: frozenset[int] | None = None) -> csr_matrix:
    rows: list[int] = []
    cols: list[int] = []
    data: list[float] = []
    for eid, (u, v, w) in enumerate(g.edges):
        if members is not None and eid not in members:
            continue
        rows += [u, v]
        cols += [v, u]
        data += [w, w]
    return csr_matrix((data, (rows, cols)), shape=(g.n, g.n))


@dataclass(frozen=True)
class StretchReport:
    t: float
    mode: str
    max_edge_stretch: float
    worst_edge: int | None
    max_pair_stretch: float | None
    worst_pair: tuple[int, int] | None
    passed: bool

    def to_kv(self) -> str:
        lines = [
            f"t={self.t:.12g}",
            f"mode={self.mode}",
            f"max_edge_stretch={self.max_edge_stretch:.12g}",
            f"worst_edge={'' if self.worst_edge is None else self.worst_edge}",
            f"max_pair_stretch={'' if self.max_pair_stretch is None else format(self.max_pair_stretch, '.12g')}",
            f"worst_pair={'' if self.worst_pair is None else '%d,%d' % self.worst_pair}",
            f"passed={str(self.passed).lower()}",
        ]
        return "\n".join(lines) + "\n"


def _check_subset(g: Graph, h: EdgeSubset) -> None:
    if h.parent is not g and h.parent != g:
        raise GraphError("spanner edge set does not belong to the input graph")


def verify_spanner_stretch(g: Graph, h: EdgeSubset, t: float,
                           mode: str = "edges-only") -> StretchReport:
    """Check dist_H <= t * dist_G, per input edge or per vertex pair.

    edges-only is sufficient on metric graphs (the per-edge bound extends to
    all pairs by the triangle inequality); all-pairs checks every pair and is
    guarded at n <= ALL_PAIRS_GUARD.
    """
    _check_subset(g, h)
    if mode not in ("edges-only", "all-pairs"):
        raise ValueError(f"mode must be 'edges-only' or 'all-pairs', got {mode!r}")
    if mode == "all-pairs" and g.n > ALL_PAIRS_GUARD:
        raise ValueError(f"all-pairs mode guarded at n <= {ALL_PAIRS_GUARD}, got n={g.n}")

    a_h = _csr(g, h.members)
    max_edge = 1.0 if g.m else 0.0
    worst_edge: int | None = None
    max_pair: float | None = None
    worst_pair: tuple[int, int] | None = None

    by_source: dict[int, list[int]] = {}
    for eid, (u, v, w) in enumerate(g.edges):
        by_source.setdefault(u, []).append(eid)

    sources = sorted(by_source)
    if mode == "all-pairs":
        sources = list(range(g.n))
        a_g = _csr(g)
        max_pair = 1.0 if g.n else 0.0

    chunk = 256
    for lo in range(0, len(sources), chunk):
        batch = sources[lo:lo + chunk]
        if not batch:
            continue
        d_h = csgraph_dijkstra(a_h, directed=False, indices=batch)
        for row, s in enumerate(batch):
            for eid in by_source.get(s, []):
                _, v, w = g.edges[eid]
                stretch = float(d_h[row, v]) / w
                if stretch > max_edge:
                    max_edge = stretch
                    worst_edge = eid
        if mode == "all-pairs":
            d_g = csgraph_dijkstra(a_g, directed=False, indices=batch)
            with np.errstate(invalid="ignore", divide="ignore"):
                ratio = d_h / d_g
            for row, s in enumerate(batch):
                r = ratio[row]
                valid = np.isfinite(d_g[row]) & (d_g[row] > 0)
                if not valid.any():
                    continue
                r = np.where(valid, r, 0.0)
                idx = int(np.argmax(r))
                if r[idx] > (max_pair or 0.0):
                    max_pair = float(r[idx])
                    worst_pair = (s, idx)

    reference = max_edge if mode == "edges-only" else max(max_edge, max_pair or 0.0)
    passed = bool(reference <= t * (1.0 + REL_TOL))
    return StretchReport(t=t, mode=mode, max_edge_stretch=max_edge,
                         worst_edge=worst_edge, max_pair_stretch=max_pair,
                         worst_pair=worst_pair, passed=passed)


# ---------------------------------------------------------------------------
# Size metrics.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MetricsReport:
    n: int
    m: int
    sparsity: float          # m / n of the measured edge set
    mst_weight: float        # MST (or forest) weight of the *input* graph
    total_weight: float      # weight of the measured edge set
    lightness: float
    forest_normalized: bool  # input disconnected: normalized by forest weight

    def to_kv(self) -> str:
        lines = [
            f"n={self.n}",
            f"m={self.m}",
            f"sparsity={self.sparsity:.12g}",
            f"mst_weight={self.mst_weight:.12g}",
            f"total_weight={self.total_weight:.12g}",
            f"lightness={self.lightness:.12g}",
            f"forest_normalized={str(self.forest_normalized).lower()}",
        ]
        return "\n".join(lines) + "\n"


def sparsity(g: Graph) -> float:
    if g.n == 0:
        raise ValueError("sparsity undefined for the empty graph")
    return g.m / g.n


def lightness(h: EdgeSubset, g: Graph) -> MetricsReport:
    """Weight of h normalized by the MST weight of g (forest weight when
    disconnected, flagged)."""
    _check_subset(g, h)
    tree = mst(g)
    if tree.weight <= 0.0:
        raise ValueError("MST weight is zero (edgeless input)")
    total = h.total_weight()
    return MetricsReport(
        n=g.n,
        m=len(h),
        sparsity=len(h) / g.n,
        mst_weight=tree.weight,
        total_weight=total,
        lightness=total / tree.weight,
        forest_normalized=not tree.is_spanning_tree,
    )


# ---------------------------------------------------------------------------
# Minor-freeness certification.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorFreeCertificate:
    clique_order: int                  # the h in K_h
    certified: bool
    per_component_edges: tuple[int, ...]
    threshold: int                     # h*(h-1)//2

    def to_kv(self) -> str:
        lines = [
            f"clique_order={self.clique_order}",
            f"certified={str(self.certified).lower()}",
            f"threshold={self.threshold}",
            f"per_component_edges={','.join(map(str, self.per_component_edges))}",
        ]
        return "\n".join(lines) + "\n"


def certify_minor_free_by_edges(g: Graph, h: int) -> MinorFreeCertificate:
    """Sufficient condition for K_h-minor-freeness: every component has fewer
    than h*(h-1)/2 edges (a K_h minor needs that many). Not certified never
    means "has a minor"."""
    if h < 2:
        raise ValueError(f"h must be >= 2, got {h}")
    comps = connected_components(g)
    vertex_comp = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in comp:
            vertex_comp[v] = ci
    counts = [0] * len(comps)
    for u, _, _ in g.edges:
        counts[vertex_comp[u]] += 1
    threshold = h * (h - 1) // 2
    certified = all(c < threshold for c in counts)
    return MinorFreeCertificate(clique_order=h, certified=certified,
                                per_component_edges=tuple(counts), threshold=threshold)


def minimal_certifiable_clique_order(g: Graph) -> int:
    """Smallest h for which certify_minor_free_by_edges succeeds."""
    comps = connected_components(g)
    vertex_comp = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in comp:
            vertex_comp[v] = ci
    counts = [0] * len(comps)
    for u, _, _ in g.edges:
        counts[vertex_comp[u]] += 1
    worst = max(counts, default=0)
    h = 2
    while h * (h - 1) // 2 <= worst:
        h += 1
    return h


# ---------------------------------------------------------------------------
# Weight-class partition diagnostic.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightClassPartition:
    epsilon: float
    e_prime: tuple[int, ...]                       # weights in [1, 1/eps)
    classes: dict[tuple[int, int], tuple[int, ...]]  # (i, j) -> edge ids

    def j_groups(self) -> dict[int, tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for (_, j), ids in sorted(self.classes.items()):
            groups.setdefault(j, []).extend(ids)
        return {j: tuple(sorted(ids)) for j, ids in groups.items()}


def weight_class_partition(h: Graph, epsilon: float) -> WeightClassPartition:
    """Assign every edge of weight >= 1 to E' = [1, 1/eps) or to exactly one
    class (i, j) with weight range [2^j / eps^i, 2^{j+1} / eps^i).

    The raw ranges can overlap across (i, j) pairs; the smallest i admitting
    the weight is chosen, then the unique j within that i.
    """
    if not (0.0 < epsilon < 1.0):
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    inv = 1.0 / epsilon
    jmax = math.ceil(math.log2(inv))
    e_prime: list[int] = []
    classes: dict[tuple[int, int], list[int]] = {}
    for eid, (_, _, w) in enumerate(h.edges):
        if w < 1.0:
            raise ValueError(f"edge {eid} has weight {w} < 1 (weights must be normalized)")
        if w < inv:
            e_prime.append(eid)
            continue
        scale = inv  # 1 / eps^i
        i = 1
        placed = False
        while not placed:
            if w >= scale:
                for j in range(jmax + 1):
                    if w < scale * (2.0 ** (j + 1)):
                        if w >= scale * (2.0 ** j):
                            classes.setdefault((i, j), []).append(eid)
                            placed = True
                        break
            if not placed:
                if w < scale:
                    raise AssertionError("weight-class coverage gap")  # unreachable
                scale *= inv
                i += 1
    return WeightClassPartition(
        epsilon=epsilon,
        e_prime=tuple(e_prime),
        classes={key: tuple(ids) for key, ids in sorted(classes.items())},
    )
