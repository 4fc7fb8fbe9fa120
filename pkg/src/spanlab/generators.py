"""Seeded instance generators: lower-bound families, minor-free families, and
random test fodder. All generators are deterministic functions of their
parameters (and seed, where one applies)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Mapping

from .graphs import Graph, build_graph
from .verify import minimal_certifiable_clique_order

FAMILIES = (
    "path_shortcuts",
    "disjoint_cliques",
    "incidence_pg2",
    "grid",
    "disjoint_copies",
    "random_weighted",
)


def gen_path_with_shortcuts(n: int, eps: float) -> Graph:
    """Unit path 0-1-...-(n-1) plus, for every pair at path distance d >= 2, a
    shortcut of weight d - eps. Metric by construction; the MST is the path."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    edges: list[tuple[int, int, float]] = [(i, i + 1, 1.0) for i in range(n - 1)]
    for d in range(2, n):
        for i in range(n - d):
            edges.append((i, i + d, d - eps))
    return build_graph(n, edges)


def gen_disjoint_cliques(total_n: int, h: int) -> Graph:
    """floor(total_n / (h-1)) disjoint unit-weight copies of K_{h-1}, padded
    with isolated vertices up to total_n. K_h-minor-free by component size."""
    if h < 2:
        raise ValueError(f"h must be >= 2, got {h}")
    size = h - 1
    if total_n < size:
        raise ValueError(f"total_n must be >= h-1 = {size}, got {total_n}")
    copies = total_n // size
    edges: list[tuple[int, int, float]] = []
    for c in range(copies):
        base = c * size
        for a in range(size):
            for b in range(a + 1, size):
                edges.append((base + a, base + b, 1.0))
    return build_graph(total_n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            return False
        p += 1
    return True


def _pg2_reps(q: int) -> list[tuple[int, int, int]]:
    """Canonical representatives of the 1-dimensional subspaces of F_q^3:
    first nonzero coordinate scaled to 1, in lexicographic order."""
    reps = [(0, 0, 1)]
    reps += [(0, 1, b) for b in range(q)]
    reps += [(1, a, b) for a in range(q) for b in range(q)]
    return sorted(reps)


def gen_incidence_pg2(q: int) -> Graph:
    """Point-line incidence graph of the projective plane of prime order q.

    n = 2(q^2+q+1) vertices (points first, then lines), (q+1)-regular, girth
    6, unit weights. Point p lies on line l iff <p, l> = 0 over F_q.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    reps = _pg2_reps(q)
    count = len(reps)  # q^2 + q + 1
    edges: list[tuple[int, int, float]] = []
    for pi, p in enumerate(reps):
        for li, l in enumerate(reps):
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0:
                edges.append((pi, count + li, 1.0))
    return build_graph(2 * count, edges)


def gen_grid(rows: int, cols: int) -> Graph:
    """rows x cols unit-weight grid; planar, hence K_5-minor-free."""
    if rows < 1 or cols < 1:
        raise ValueError(f"rows and cols must be >= 1, got {rows}x{cols}")
    edges: list[tuple[int, int, float]] = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1, 1.0))
            if r + 1 < rows:
                edges.append((v, v + cols, 1.0))
    return build_graph(rows * cols, edges)


def gen_disjoint_copies(g: Graph, copies: int) -> Graph:
    """Vertex-relabeled disjoint union of `copies` copies of g."""
    if copies < 1:
        raise ValueError(f"copies must be >= 1, got {copies}")
    edges: list[tuple[int, int, float]] = []
    for c in range(copies):
        off = c * g.n
        for u, v, w in g.edges:
            edges.append((u + off, v + off, w))
    return build_graph(copies * g.n, edges)


def gen_random_weighted(n: int, p: float, wmin: float, wmax: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with weights uniform in [wmin, wmax]."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p must be in [0, 1], got {p}")
    if not (0.0 < wmin <= wmax):
        raise ValueError(f"need 0 < wmin <= wmax, got {wmin}, {wmax}")
    rng = random.Random(seed)
    edges: list[tuple[int, int, float]] = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.uniform(wmin, wmax)))
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# Declarative instance specs.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InstanceSpec:
    """Declarative description of a generated benchmark instance.

    declared_h, when set, is the h for which K_h-minor-freeness is guaranteed
    by construction (grids are planar, so declared_h = 5; everything else is
    certified by per-component edge counting).
    """

    family: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0
    declared_h: int | None = None

    def label(self) -> str:
        inner = ";".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        return f"{self.family}({inner})"


def _req(params: Mapping[str, Any], key: str) -> Any:
    if key not in params:
        raise ValueError(f"missing required parameter {key!r}")
    return params[key]


def build_instance(spec: InstanceSpec) -> Graph:
    p = spec.params
    if spec.family == "path_shortcuts":
        return gen_path_with_shortcuts(int(_req(p, "n")), float(_req(p, "eps")))
    if spec.family == "disjoint_cliques":
        return gen_disjoint_cliques(int(_req(p, "total_n")), int(_req(p, "h")))
    if spec.family == "incidence_pg2":
        return gen_incidence_pg2(int(_req(p, "q")))
    if spec.family == "grid":
        return gen_grid(int(_req(p, "rows")), int(_req(p, "cols")))
    if spec.family == "disjoint_copies":
        base_params = {k: v for k, v in p.items() if k not in ("base", "copies")}
        base = build_instance(InstanceSpec(family=str(_req(p, "base")),
                                           params=base_params, seed=spec.seed))
        return gen_disjoint_copies(base, int(_req(p, "copies")))
    if spec.family == "random_weighted":
        return gen_random_weighted(int(_req(p, "n")), float(_req(p, "p")),
                                   float(p.get("wmin", 1.0)), float(p.get("wmax", 10.0)),
                                   spec.seed)
    raise ValueError(f"unknown family {spec.family!r} (known: {', '.join(FAMILIES)})")


def default_declared_h(spec: InstanceSpec, g: Graph) -> int | None:
    """Family-specific default for the certifiable clique order."""
    if spec.declared_h is not None:
        return spec.declared_h
    if spec.family == "grid":
        return 5  # planar by construction
    if spec.family == "disjoint_cliques":
        return int(spec.params["h"])
    if spec.family in ("incidence_pg2", "disjoint_copies"):
        return minimal_certifiable_clique_order(g)
    return None
