"""Pydantic request/response models for the HTTP service.

Graphs travel as edge-list documents (the same text format the CLI reads and
writes). Infinite girths are encoded as null.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field


class GenerateRequest(BaseModel):
    family: str
    params: dict[str, Any] = Field(default_factory=dict)
    seed: int = 0
    declared_h: int | None = None


class GenerateResponse(BaseModel):
    graph: str
    n: int
    m: int
    declared_h: int | None


class MetricsModel(BaseModel):
    n: int
    m: int
    sparsity: float
    mst_weight: float
    total_weight: float
    lightness: float
    forest_normalized: bool


class SpannerRequest(BaseModel):
    graph: str
    k: int = Field(ge=1)
    epsilon: float = Field(default=0.0, ge=0.0)
    s: int = Field(default=200, ge=1)


class SpannerResponse(BaseModel):
    spanner: str
    edge_ids: list[int]
    edges_examined: int
    edges_kept: int
    t: float
    metrics: MetricsModel


class VerifyRequest(BaseModel):
    graph: str
    spanner: str
    t: float = Field(gt=0.0)
    mode: Literal["edges-only", "all-pairs"] = "edges-only"


class StretchReportModel(BaseModel):
    t: float
    mode: str
    max_edge_stretch: float | None   # null = some input edge is disconnected in the spanner
    worst_edge: int | None
    max_pair_stretch: float | None
    worst_pair: tuple[int, int] | None
    passed: bool


class GirthRequest(BaseModel):
    graph: str
    weighted: bool = True


class GirthResponse(BaseModel):
    girth: float | None            # null = acyclic
    girth_witness: list[int] | None
    weighted_girth: float | None
    weighted_girth_witness: list[int] | None


class DensityRequest(BaseModel):
    graph: str
    h: int = Field(ge=2)


class DensityResponse(BaseModel):
    n: int
    m: int
    avg_degree: float
    clique_order: int
    subgraph_vertices: list[int]
    subgraph_edges: int
    subgraph_density: float
    vertex_ratio: float | None
    density_ratio: float | None


class ExperimentRequest(BaseModel):
    config: str
    checks: list[str] | None = None   # overrides the config's enabled checks


class ExperimentResponse(BaseModel):
    csv: str
    rows: int
    all_checks_passed: bool


class ErrorBody(BaseModel):
    category: Literal["parse", "precondition"]
    message: str
