import pytest

from spanlab.girth import girth
from spanlab.graphs import metric_closure_filter, parse_graph, shortest_path_distance
from spanlab.generators import gen_random_weighted
from spanlab.spanner import (
    NonMetricEdgeError,
    SpannerResult,
    StretchParams,
    greedy_spanner,
    stretch_of,
)

TRIANGLE = parse_graph("3 3\n0 1 1.0\n1 2 1.0\n0 2 1.0")
C5 = parse_graph("5 5\n0 1 1.0\n1 2 1.0\n2 3 1.0\n3 4 1.0\n0 4 1.0")


@pytest.mark.parametrize("k,eps,s,expected", [
    (2, 0.0, 1, 3.0),
    (1, 0.5, 2, 2.0),
    (3, 0.1, 4, 7.0),
])
def test_stretch_of(k, eps, s, expected):
    assert stretch_of(k, eps, s) == pytest.approx(expected, rel=1e-12)


def test_stretch_params_validation():
    with pytest.raises(ValueError):
        StretchParams(k=0)
    with pytest.raises(ValueError):
        StretchParams(k=1, epsilon=-0.1)
    with pytest.raises(ValueError):
        StretchParams(k=1, s=0)
    assert StretchParams(k=2).t == 3.0  # epsilon defaults to 0


def test_triangle_k1_keeps_everything():
    result = greedy_spanner(TRIANGLE, StretchParams(k=1))
    assert result.edges_kept == 3


def test_triangle_k2_skips_one_edge():
    result = greedy_spanner(TRIANGLE, StretchParams(k=2))
    assert result.edges_kept == 2
    assert result.spanner.sorted_ids() == [0, 1]
    assert result.edges_examined == 3


def test_c5_k2_keeps_all_and_girth_exceeds_4():
    result = greedy_spanner(C5, StretchParams(k=2))
    assert result.edges_kept == 5  # detour for the last edge is 4 > 3
    assert girth(result.spanner.to_graph()).girth == 5


def test_trace_records_every_decision():
    result = greedy_spanner(TRIANGLE, StretchParams(k=2), keep_trace=True)
    assert len(result.trace) == 3
    kept = [d for d in result.trace if d.kept]
    skipped = [d for d in result.trace if not d.kept]
    assert len(kept) == 2 and len(skipped) == 1
    assert skipped[0].detour == pytest.approx(2.0)
    assert skipped[0].bound == pytest.approx(3.0)


def test_deterministic_output():
    g = gen_random_weighted(40, 0.3, 1.0, 10.0, 5)
    a = greedy_spanner(g, StretchParams(k=2))
    b = greedy_spanner(g, StretchParams(k=2))
    assert a.spanner.members == b.spanner.members


def test_spanner_is_subgraph_and_counts_consistent():
    g = gen_random_weighted(30, 0.4, 1.0, 10.0, 6)
    result = greedy_spanner(g, StretchParams(k=3))
    assert result.edges_kept == len(result.spanner)
    assert result.edges_examined == g.m
    assert all(0 <= eid < g.m for eid in result.spanner.members)


def test_t1_on_metric_graph_returns_all_edges():
    for seed in range(5):
        g = metric_closure_filter(gen_random_weighted(15, 0.4, 1.0, 10.0, 50 + seed))
        result = greedy_spanner(g, StretchParams(k=1))
        assert result.edges_kept == g.m


def test_per_edge_stretch_bound_holds():
    for seed in range(5):
        g = gen_random_weighted(25, 0.3, 1.0, 10.0, 70 + seed)
        for k in (1, 2):
            params = StretchParams(k=k)
            result = greedy_spanner(g, params)
            for u, v, w in g.edges:
                d = shortest_path_distance(g, u, v, mask=result.spanner)
                assert d <= params.t * w * (1 + 1e-9)


def test_nonmetric_edge_never_kept():
    g = parse_graph("3 3\n0 1 1.0\n1 2 1.0\n0 2 3.0")
    result = greedy_spanner(g, StretchParams(k=1))
    assert 2 not in result.spanner.members


def test_on_nonmetric_error_mode():
    g = parse_graph("3 3\n0 1 1.0\n1 2 1.0\n0 2 3.0")
    with pytest.raises(NonMetricEdgeError):
        greedy_spanner(g, StretchParams(k=1), on_nonmetric="error")
    # a metric graph passes in error mode
    assert greedy_spanner(TRIANGLE, StretchParams(k=2), on_nonmetric="error").edges_kept == 2


def test_equal_weight_edges_processed_in_id_order():
    # all unit weights: kept set must be reproducible from id order alone
    g = gen_random_weighted(20, 0.5, 1.0, 1.0, 9)
    result = greedy_spanner(g, StretchParams(k=2), keep_trace=True)
    order = [d.edge_id for d in result.trace]
    assert order == sorted(order)


def test_result_type():
    assert isinstance(greedy_spanner(TRIANGLE, StretchParams(k=1)), SpannerResult)
