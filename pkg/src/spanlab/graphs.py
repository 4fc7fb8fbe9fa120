"""Weighted undirected graphs: edge-list I/O, shortest paths, MSTs, metric filtering.

Edge ids are 0-based positions in the edge sequence and are stable for the
lifetime of a Graph. All distance/weight comparisons in the library use the
relative tolerance REL_TOL.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

INF = math.inf

# Relative tolerance for all floating-point weight/distance comparisons.
REL_TOL = 1e-9


class GraphError(ValueError):
    """Invalid graph data: self-loop, duplicate edge, bad weight, bad vertex id."""


class ParseError(GraphError):
    """Malformed edge-list document. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Edge(NamedTuple):
    u: int
    v: int
    w: float


@dataclass(frozen=True)
class Graph:
    """Immutable simple weighted graph.

    adj[v] is a tuple of (neighbor, weight, edge_id) triples. Graphs are safe
    to share across threads; every operation in this package treats them as
    read-only.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[tuple[int, float, int], ...], ...] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def total_weight(self) -> float:
        return sum(e.w for e in self.edges)


def build_graph(n: int, edges: Iterable[tuple[int, int, float]]) -> Graph:
    """Validate and build a Graph. Raises GraphError on any invariant violation."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    out: list[Edge] = []
    for eid, (u, v, w) in enumerate(edges):
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"edge {eid}: vertex id out of range [0, {n}): ({u}, {v})")
        if u == v:
            raise GraphError(f"edge {eid}: self-loop at vertex {u}")
        w = float(w)
        if not math.isfinite(w) or w <= 0.0:
            raise GraphError(f"edge {eid}: weight must be finite and > 0, got {w}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"edge {eid}: duplicate edge {key}")
        seen.add(key)
        out.append(Edge(u, v, w))
    adj_lists: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
    for eid, (u, v, w) in enumerate(out):
        adj_lists[u].append((v, w, eid))
        adj_lists[v].append((u, w, eid))
    return Graph(n=n, edges=tuple(out), adj=tuple(tuple(a) for a in adj_lists))


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of the edges of a parent graph, identified by edge id."""

    parent: Graph
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, eid: int) -> bool:
        return eid in self.members

    def total_weight(self) -> float:
        edges = self.parent.edges
        return sum(edges[eid].w for eid in self.members)

    def sorted_ids(self) -> list[int]:
        return sorted(self.members)

    def to_graph(self) -> Graph:
        """Subgraph on the same vertex set (edge ids are re-assigned)."""
        edges = self.parent.edges
        return build_graph(self.parent.n, [edges[eid] for eid in self.sorted_ids()])


def edge_subset(g: Graph, members: Iterable[int]) -> EdgeSubset:
    ids = frozenset(members)
    for eid in ids:
        if not (0 <= eid < g.m):
            raise GraphError(f"edge id {eid} not in graph with m={g.m}")
    return EdgeSubset(parent=g, members=ids)


def full_subset(g: Graph) -> EdgeSubset:
    return EdgeSubset(parent=g, members=frozenset(range(g.m)))


# ---------------------------------------------------------------------------
# Edge-list text format.
#
#   first non-comment line:  "n m"
#   then m lines:            "u v w"   (0-based ids, decimal weight)
#   "#" begins a comment line.
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, float]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"expected header 'n m', got {line!r}", lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParseError(f"non-integer header field in {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"negative count in header {line!r}", lineno)
            continue
        if len(parts) != 3:
            raise ParseError(f"expected edge 'u v w', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise ParseError(f"malformed edge line {line!r}", lineno) from None
        if len(edges) >= header[1]:
            raise ParseError(f"more than the declared {header[1]} edges", lineno)
        edges.append((u, v, w))
        edge_lines.append(lineno)
    if header is None:
        raise ParseError("empty document: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"declared {m} edges but found {len(edges)}")
    try:
        return build_graph(n, edges)
    except ParseError:
        raise
    except GraphError as exc:
        # Recover the line number of the offending edge from the message prefix.
        msg = str(exc)
        if msg.startswith("edge "):
            eid = int(msg.split()[1].rstrip(":"))
            raise ParseError(msg, edge_lines[eid]) from None
        raise ParseError(msg) from None


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph; weights keep 17 significant digits (round-trip exact)."""
    lines = [f"{g.n} {g.m}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {w:.17g}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Shortest paths (Dijkstra).
# ---------------------------------------------------------------------------

Adjacency = Sequence[Sequence[tuple[int, float, int]]]


def dijkstra_distance(adj: Adjacency, s: int, t: int,
                      cutoff: float = INF, skip_edge: int = -1) -> float:
    """Distance from s to t over an adjacency structure.

    Stops expanding once tentative distances exceed cutoff; returns INF when t
    is unreachable within the cutoff. skip_edge masks out a single edge id.
    """
    if s == t:
        return 0.0
    dist: dict[int, float] = {s: 0.0}
    heap: list[tuple[float, int]] = [(0.0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist.get(u, INF):
            continue
        if u == t:
            return d
        for v, w, eid in adj[u]:
            if eid == skip_edge:
                continue
            nd = d + w
            if nd <= cutoff and nd < dist.get(v, INF):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return INF


def dijkstra_path(adj: Adjacency, s: int, t: int,
                  cutoff: float = INF, skip_edge: int = -1) -> tuple[float, list[int] | None]:
    """Like dijkstra_distance, also returning the edge-id path s -> t."""
    if s == t:
        return 0.0, []
    dist: dict[int, float] = {s: 0.0}
    par: dict[int, tuple[int, int]] = {}
    heap: list[tuple[float, int]] = [(0.0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist.get(u, INF):
            continue
        if u == t:
            path: list[int] = []
            x = t
            while x != s:
                px, eid = par[x]
                path.append(eid)
                x = px
            path.reverse()
            return d, path
        for v, w, eid in adj[u]:
            if eid == skip_edge:
                continue
            nd = d + w
            if nd <= cutoff and nd < dist.get(v, INF):
                dist[v] = nd
                par[v] = (u, eid)
                heapq.heappush(heap, (nd, v))
    return INF, None


def masked_adjacency(g: Graph, mask: EdgeSubset | None) -> Adjacency:
    """Adjacency restricted to the edges in mask (None = all edges)."""
    if mask is None:
        return g.adj
    if mask.parent is not g and mask.parent != g:
        raise GraphError("mask does not belong to this graph")
    members = mask.members
    adj: list[list[tuple[int, float, int]]] = [[] for _ in range(g.n)]
    for eid in sorted(members):
        u, v, w = g.edges[eid]
        adj[u].append((v, w, eid))
        adj[v].append((u, w, eid))
    return adj


def shortest_path_distance(g: Graph, s: int, t: int,
                           mask: EdgeSubset | None = None,
                           cutoff: float | None = None) -> float:
    """Exact shortest-path distance within the masked subgraph.

    With a cutoff, distances beyond it are reported as INF (bounded search).
    """
    if not (0 <= s < g.n) or not (0 <= t < g.n):
        raise GraphError(f"vertex out of range: s={s}, t={t}, n={g.n}")
    if cutoff is not None and cutoff <= 0:
        raise GraphError(f"cutoff must be > 0, got {cutoff}")
    return dijkstra_distance(masked_adjacency(g, mask), s, t,
                             cutoff=INF if cutoff is None else cutoff)


# ---------------------------------------------------------------------------
# Minimum spanning tree / forest.
# ---------------------------------------------------------------------------

class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class MstResult:
    edges: EdgeSubset
    weight: float
    is_spanning_tree: bool  # False: input disconnected, result is a minimum spanning forest


def mst(g: Graph) -> MstResult:
    """Kruskal MST with (weight, edge id) tie-breaking for determinism."""
    uf = UnionFind(g.n)
    chosen: list[int] = []
    total = 0.0
    for eid in sorted(range(g.m), key=lambda i: (g.edges[i].w, i)):
        u, v, w = g.edges[eid]
        if uf.union(u, v):
            chosen.append(eid)
            total += w
    is_tree = g.n == 0 or len(chosen) == g.n - 1
    return MstResult(edges=edge_subset(g, chosen), weight=total, is_spanning_tree=is_tree)


# ---------------------------------------------------------------------------
# Metric filtering.
# ---------------------------------------------------------------------------

def metric_edge_ids(g: Graph) -> list[int]:
    """Edge ids e=(u,v) with dist_{g-e}(u,v) >= w(e); ties (equal detour) kept."""
    keep: list[int] = []
    for eid, (u, v, w) in enumerate(g.edges):
        cutoff = w * (1.0 + REL_TOL)
        d = dijkstra_distance(g.adj, u, v, cutoff=cutoff, skip_edge=eid)
        if d >= w * (1.0 - REL_TOL):
            keep.append(eid)
    return keep


def metric_closure_filter(g: Graph) -> Graph:
    """Drop every edge that has a strictly shorter detour; preserves all distances."""
    keep = metric_edge_ids(g)
    return build_graph(g.n, [g.edges[eid] for eid in keep])


# ---------------------------------------------------------------------------
# Components.
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for v, _, _ in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    q.append(v)
        comps.append(sorted(comp))
    return comps
