"""Densest-subgraph probes: min-degree peeling (1/2-approximation), exhaustive
oracle for small n, and the density-increment report for minor-free instances."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

EXACT_GUARD = 20


@dataclass(frozen=True)
class DenseSubgraphResult:
    vertices: tuple[int, ...]
    induced_edges: int
    density: float       # average degree 2m'/n' of the induced subgraph
    method: str          # "peeling" | "exact"


def _induced_edge_count(g: Graph, vertices: set[int]) -> int:
    return sum(1 for u, v, _ in g.edges if u in vertices and v in vertices)


def densest_subgraph_peel(g: Graph) -> DenseSubgraphResult:
    """Iteratively remove a minimum-degree vertex (ties by smallest id) and
    return the intermediate induced subgraph with maximum average degree.
    Classical guarantee: at least half the optimal density."""
    if g.n < 1:
        raise ValueError("peeling requires n >= 1")
    deg = [0] * g.n
    adj_sets: list[set[int]] = [set() for _ in range(g.n)]
    for u, v, _ in g.edges:
        deg[u] += 1
        deg[v] += 1
        adj_sets[u].add(v)
        adj_sets[v].add(u)
    alive = set(range(g.n))
    m_cur = g.m
    removal_order: list[int] = []
    best_density = 2.0 * m_cur / len(alive)
    best_step = 0  # number of removals preceding the best subgraph
    for step in range(1, g.n):
        victim = min(alive, key=lambda v: (deg[v], v))
        alive.remove(victim)
        removal_order.append(victim)
        m_cur -= deg[victim]
        for w in adj_sets[victim]:
            if w in alive:
                deg[w] -= 1
        density = 2.0 * m_cur / len(alive)
        # ties prefer the later (smaller) subgraph, so e.g. a disjoint union of
        # equal cliques resolves to a single clique
        if density >= best_density:
            best_density = density
            best_step = step
    kept = set(range(g.n)) - set(removal_order[:best_step])
    return DenseSubgraphResult(
        vertices=tuple(sorted(kept)),
        induced_edges=_induced_edge_count(g, kept),
        density=best_density,
        method="peeling",
    )


def densest_subgraph_exact(g: Graph) -> DenseSubgraphResult:
    """Maximize average degree over all nonempty vertex subsets by exhaustive
    enumeration (guarded at n <= EXACT_GUARD). Ties prefer the smallest
    subset, then the lexicographically smallest vertex list."""
    if not (1 <= g.n <= EXACT_GUARD):
        raise ValueError(f"exact search requires 1 <= n <= {EXACT_GUARD}, got n={g.n}")
    nbr_mask = [0] * g.n
    for u, v, _ in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u
    best_key: tuple[float, int, tuple[int, ...]] | None = None
    best: tuple[tuple[int, ...], int, float] | None = None
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        edges2 = 0  # twice the induced edge count
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            edges2 += (nbr_mask[v] & mask).bit_count()
        density = edges2 / size
        verts = tuple(i for i in range(g.n) if mask >> i & 1)
        key = (-density, size, verts)
        if best_key is None or key < best_key:
            best_key = key
            best = (verts, edges2 // 2, density)
    assert best is not None
    return DenseSubgraphResult(vertices=best[0], induced_edges=best[1],
                               density=best[2], method="exact")


@dataclass(frozen=True)
class DensityProbe:
    """Empirical density-increment report: peeling result alongside the
    dimensionless ratios against the reference quantities h^2/d and d.
    No pass/fail; the hidden polylog factors are unspecified."""

    n: int
    m: int
    avg_degree: float
    clique_order: int                     # the h the instance is minor-free for
    result: DenseSubgraphResult
    vertex_ratio: float | None            # n' * d / h^2
    density_ratio: float | None           # d' / d

    def to_kv(self) -> str:
        lines = [
            f"n={self.n}",
            f"m={self.m}",
            f"avg_degree={self.avg_degree:.12g}",
            f"clique_order={self.clique_order}",
            f"subgraph_vertices={len(self.result.vertices)}",
            f"subgraph_edges={self.result.induced_edges}",
            f"subgraph_density={self.result.density:.12g}",
            f"vertex_ratio={'' if self.vertex_ratio is None else format(self.vertex_ratio, '.12g')}",
            f"density_ratio={'' if self.density_ratio is None else format(self.density_ratio, '.12g')}",
        ]
        return "\n".join(lines) + "\n"


def density_increment_probe(g: Graph, h: int) -> DensityProbe:
    """Run peeling on a (declared or certified) K_h-minor-free graph and report
    the observed (n', d') against h^2/d and d."""
    if g.n < 1:
        raise ValueError("probe requires n >= 1")
    if h < 2:
        raise ValueError(f"h must be >= 2, got {h}")
    d = 2.0 * g.m / g.n
    result = densest_subgraph_peel(g)
    if d > 0:
        vertex_ratio = len(result.vertices) * d / (h * h)
        density_ratio = result.density / d
    else:
        vertex_ratio = None
        density_ratio = None
    return DensityProbe(n=g.n, m=g.m, avg_degree=d, clique_order=h, result=result,
                        vertex_ratio=vertex_ratio, density_ratio=density_ratio)
