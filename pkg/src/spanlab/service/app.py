"""FastAPI service wrapping the core library.

Error mapping: malformed documents -> 400 {"category": "parse"}, violated
preconditions -> 422 {"category": "precondition"}. Check failures (e.g. a
spanner that misses its stretch bound) are successful computations and come
back as 200 with passed=false.
"""

from __future__ import annotations

import dataclasses
import math

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..density import density_increment_probe
from ..experiment import ConfigError, parse_experiment_config, rows_to_csv, run_experiment
from ..generators import InstanceSpec, build_instance, default_declared_h
from ..girth import girth_report
from ..graphs import Graph, GraphError, ParseError, edge_subset, parse_graph, serialize_graph
from ..spanner import StretchParams, greedy_spanner
from ..verify import lightness, verify_spanner_stretch
from . import schemas

app = FastAPI(title="spanlab", version=__version__)


@app.exception_handler(ParseError)
async def _parse_error(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"category": "parse", "message": str(exc)})


@app.exception_handler(ConfigError)
async def _config_error(request: Request, exc: ConfigError) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"category": "parse", "message": str(exc)})


@app.exception_handler(GraphError)
@app.exception_handler(ValueError)
async def _precondition_error(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=422,
                        content={"category": "precondition", "message": str(exc)})


def _fin(x: float) -> float | None:
    return None if x is None or math.isinf(x) else x


def _subset_from_document(g: Graph, text: str):
    """Map an edge-list document describing a subgraph of g back to edge ids."""
    sub = parse_graph(text)
    if sub.n != g.n:
        raise GraphError(f"spanner has n={sub.n}, graph has n={g.n}")
    index = {}
    for eid, (u, v, w) in enumerate(g.edges):
        index[(min(u, v), max(u, v))] = (eid, w)
    ids = []
    for u, v, w in sub.edges:
        key = (min(u, v), max(u, v))
        if key not in index:
            raise GraphError(f"spanner edge {key} not present in the graph")
        eid, gw = index[key]
        if gw != w:
            raise GraphError(f"spanner edge {key} has weight {w}, graph has {gw}")
        ids.append(eid)
    return edge_subset(g, ids)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/generate", response_model=schemas.GenerateResponse)
def generate(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
    spec = InstanceSpec(family=req.family, params=req.params,
                        seed=req.seed, declared_h=req.declared_h)
    g = build_instance(spec)
    return schemas.GenerateResponse(graph=serialize_graph(g), n=g.n, m=g.m,
                                    declared_h=default_declared_h(spec, g))


@app.post("/spanner", response_model=schemas.SpannerResponse)
def spanner(req: schemas.SpannerRequest) -> schemas.SpannerResponse:
    g = parse_graph(req.graph)
    params = StretchParams(k=req.k, epsilon=req.epsilon, s=req.s)
    result = greedy_spanner(g, params)
    metrics = lightness(result.spanner, g)
    return schemas.SpannerResponse(
        spanner=serialize_graph(result.spanner.to_graph()),
        edge_ids=result.spanner.sorted_ids(),
        edges_examined=result.edges_examined,
        edges_kept=result.edges_kept,
        t=params.t,
        metrics=schemas.MetricsModel(
            n=metrics.n, m=metrics.m, sparsity=metrics.sparsity,
            mst_weight=metrics.mst_weight, total_weight=metrics.total_weight,
            lightness=metrics.lightness, forest_normalized=metrics.forest_normalized,
        ),
    )


@app.post("/verify", response_model=schemas.StretchReportModel)
def verify(req: schemas.VerifyRequest) -> schemas.StretchReportModel:
    g = parse_graph(req.graph)
    sub = _subset_from_document(g, req.spanner)
    report = verify_spanner_stretch(g, sub, req.t, mode=req.mode)
    return schemas.StretchReportModel(
        t=report.t, mode=report.mode,
        max_edge_stretch=_fin(report.max_edge_stretch),
        worst_edge=report.worst_edge,
        max_pair_stretch=(_fin(report.max_pair_stretch)
                          if report.max_pair_stretch is not None else None),
        worst_pair=report.worst_pair,
        passed=report.passed,
    )


@app.post("/girth", response_model=schemas.GirthResponse)
def girth(req: schemas.GirthRequest) -> schemas.GirthResponse:
    g = parse_graph(req.graph)
    report = girth_report(g)
    return schemas.GirthResponse(
        girth=_fin(report.girth),
        girth_witness=list(report.girth_witness) if report.girth_witness else None,
        weighted_girth=_fin(report.weighted_girth),
        weighted_girth_witness=(list(report.weighted_girth_witness)
                                if report.weighted_girth_witness else None),
    )


@app.post("/density", response_model=schemas.DensityResponse)
def density(req: schemas.DensityRequest) -> schemas.DensityResponse:
    g = parse_graph(req.graph)
    probe = density_increment_probe(g, req.h)
    return schemas.DensityResponse(
        n=probe.n, m=probe.m, avg_degree=probe.avg_degree,
        clique_order=probe.clique_order,
        subgraph_vertices=list(probe.result.vertices),
        subgraph_edges=probe.result.induced_edges,
        subgraph_density=probe.result.density,
        vertex_ratio=probe.vertex_ratio,
        density_ratio=probe.density_ratio,
    )


@app.post("/experiment", response_model=schemas.ExperimentResponse)
def experiment(req: schemas.ExperimentRequest) -> schemas.ExperimentResponse:
    cfg = parse_experiment_config(req.config)
    if req.checks is not None:
        cfg = dataclasses.replace(cfg, checks=tuple(req.checks))
    rows = run_experiment(cfg)
    return schemas.ExperimentResponse(
        csv=rows_to_csv(rows),
        rows=len(rows),
        all_checks_passed=all(row.all_passed for row in rows),
    )
