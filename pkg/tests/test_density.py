import pytest

from spanlab.density import (
    densest_subgraph_exact,
    densest_subgraph_peel,
    density_increment_probe,
)
from spanlab.graphs import build_graph, parse_graph
from spanlab.generators import gen_disjoint_cliques, gen_grid, gen_incidence_pg2, gen_random_weighted


def k4_plus_pendant_path():
    edges = [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0),
             (3, 4, 1.0), (4, 5, 1.0), (5, 6, 1.0)]
    return build_graph(7, edges)


def test_peel_k4():
    g = gen_disjoint_cliques(4, 5)
    result = densest_subgraph_peel(g)
    assert result.vertices == (0, 1, 2, 3)
    assert result.density == pytest.approx(3.0)


def test_peel_k4_with_pendant_path():
    g = k4_plus_pendant_path()
    result = densest_subgraph_peel(g)
    assert result.vertices == (0, 1, 2, 3)
    assert result.density == pytest.approx(3.0)
    exact = densest_subgraph_exact(g)
    assert exact.density == pytest.approx(3.0)
    assert exact.vertices == (0, 1, 2, 3)


def test_peel_star_returns_full_star():
    edges = [(0, i, 1.0) for i in range(1, 6)]
    g = build_graph(6, edges)
    result = densest_subgraph_peel(g)
    assert result.vertices == (0, 1, 2, 3, 4, 5)
    assert result.density == pytest.approx(10 / 6)


def test_exact_triangle_and_edge():
    tri = parse_graph("3 3\n0 1 1.0\n1 2 1.0\n0 2 1.0")
    assert densest_subgraph_exact(tri).density == pytest.approx(2.0)
    single = parse_graph("2 1\n0 1 1.0")
    result = densest_subgraph_exact(single)
    assert result.density == pytest.approx(1.0)
    assert result.vertices == (0, 1)


def test_exact_two_triangles_sharing_vertex():
    edges = [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (2, 4, 1.0)]
    g = build_graph(5, edges)
    result = densest_subgraph_exact(g)
    assert result.vertices == (0, 1, 2, 3, 4)
    assert result.density == pytest.approx(2.4)


def test_exact_guard():
    g = gen_grid(5, 5)
    with pytest.raises(ValueError):
        densest_subgraph_exact(g)


def test_peel_vs_exact_half_approximation():
    for seed in range(30):
        g = gen_random_weighted(11, 0.35, 1.0, 2.0, 2000 + seed)
        peel = densest_subgraph_peel(g)
        exact = densest_subgraph_exact(g)
        assert exact.density >= peel.density - 1e-12
        assert peel.density >= 0.5 * exact.density - 1e-12


def test_results_self_consistent_under_recount():
    for seed in range(10):
        g = gen_random_weighted(12, 0.4, 1.0, 2.0, 2100 + seed)
        for result in (densest_subgraph_peel(g), densest_subgraph_exact(g)):
            verts = set(result.vertices)
            recount = sum(1 for u, v, _ in g.edges if u in verts and v in verts)
            assert recount == result.induced_edges
            assert result.density == pytest.approx(2 * recount / len(verts))


def test_peel_deterministic():
    g = gen_random_weighted(30, 0.3, 1.0, 2.0, 9)
    assert densest_subgraph_peel(g).vertices == densest_subgraph_peel(g).vertices


def test_probe_disjoint_k4s():
    g = gen_disjoint_cliques(12, 5)
    probe = density_increment_probe(g, 5)
    assert len(probe.result.vertices) == 4
    assert probe.result.density == pytest.approx(3.0)
    assert probe.density_ratio == pytest.approx(1.0)


def test_probe_heawood_regular():
    g = gen_incidence_pg2(2)
    probe = density_increment_probe(g, 8)
    assert probe.avg_degree == pytest.approx(3.0)
    assert probe.result.density == pytest.approx(3.0)  # regular graph: whole graph


def test_probe_grid_reports_shape():
    g = gen_grid(3, 3)
    probe = density_increment_probe(g, 5)
    assert probe.avg_degree == pytest.approx(24 / 9)
    assert probe.vertex_ratio is not None and probe.density_ratio is not None
