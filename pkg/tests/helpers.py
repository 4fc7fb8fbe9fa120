"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library's own search routines: distances come
from Floyd-Warshall, spanning trees and cycles from exhaustive enumeration.
"""

from __future__ import annotations

import itertools
import math

from spanlab.graphs import Graph

INF = math.inf


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0.0
    for u, v, w in g.edges:
        if w < dist[u][v]:
            dist[u][v] = dist[v][u] = w
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_min_spanning_weight(g: Graph) -> float | None:
    """Minimum spanning tree weight by enumerating all (n-1)-edge subsets.
    None when g is disconnected. Only sensible for small n."""
    n = g.n
    if n <= 1:
        return 0.0
    best = None
    for combo in itertools.combinations(range(g.m), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for eid in combo:
            u, v, _ = g.edges[eid]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            weight = sum(g.edges[eid].w for eid in combo)
            if best is None or weight < best:
                best = weight
    return best


def enumerate_simple_cycles(g: Graph) -> list[list[int]]:
    """All simple cycles as vertex lists, each starting at its smallest vertex
    and canonically oriented (no duplicates). Exponential; n <= ~10 only."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v, _ in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    cycles: list[list[int]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        start = path[0]
        last = path[-1]
        for nxt in adj[last]:
            if nxt == start and len(path) >= 3:
                if path[1] < path[-1]:  # canonical orientation
                    cycles.append(list(path))
            elif nxt > start and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                extend(path, on_path)
                path.pop()
                on_path.remove(nxt)

    for s in range(g.n):
        extend([s], {s})
    return cycles


def _cycle_weights(g: Graph, cycle: list[int]) -> list[float]:
    lookup = {}
    for u, v, w in g.edges:
        lookup[(u, v)] = w
        lookup[(v, u)] = w
    return [lookup[(cycle[i], cycle[(i + 1) % len(cycle)])] for i in range(len(cycle))]


def brute_girth(g: Graph) -> float:
    cycles = enumerate_simple_cycles(g)
    return min((len(c) for c in cycles), default=INF)


def brute_weighted_girth(g: Graph) -> float:
    best = INF
    for cycle in enumerate_simple_cycles(g):
        weights = _cycle_weights(g, cycle)
        best = min(best, sum(weights) / max(weights))
    return best


def cycle_edge_ids_valid(g: Graph, witness: tuple[int, ...]) -> bool:
    """witness must be a closed simple cycle: consecutive edges share exactly
    one endpoint, every vertex is hit exactly twice."""
    if witness is None or len(witness) < 3 or len(set(witness)) != len(witness):
        return False
    touches: dict[int, int] = {}
    for eid in witness:
        u, v, _ = g.edges[eid]
        touches[u] = touches.get(u, 0) + 1
        touches[v] = touches.get(v, 0) + 1
    return all(c == 2 for c in touches.values())
