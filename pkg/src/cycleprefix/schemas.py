"""Pydantic request/response models for the HTTP service.

Vertices cross the wire as text (digit string, or hyphen-joined numbers when
the alphabet goes past 9); records and rows are plain JSON objects with
deterministic key order applied at the serialization boundary.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from .topology import NetworkParams


class ParamsSpec(BaseModel):
    """Instance parameters as they appear in requests."""

    delta: int = Field(ge=2, description="max out-degree of the full network")
    dee: int = Field(ge=2, description="word length (= diameter of the full network)")
    r: int = Field(default=0, ge=0, description="number of deleted rotations")

    def to_params(self) -> NetworkParams:
        return NetworkParams(delta=self.delta, dee=self.dee, r=self.r)


class ParamsInfo(BaseModel):
    """Derived facts about one instance."""

    delta: int
    dee: int
    r: int
    alphabet_size: int
    out_degree: int
    vertex_count: int
    arc_count: int
    origin: str
    diameter: int | None = Field(
        description="dee + r when the bounded-rerouting regime (dee >= 2r+2) applies, else null")
    reach_length: int | None = Field(
        description="dee + r when the exact-length-walk regime (dee >= 2r+3) applies, else null")
    text_format: Literal["digits", "hyphenated"]


class GenRequest(ParamsSpec):
    table: Literal["arcs", "distances"] = "arcs"
    source: str | None = Field(
        default=None, description="single-source for distance tables (vertex text)")
    max_vertices: int = Field(default=1_000_000, ge=1)


class GenResponse(BaseModel):
    params: ParamsSpec
    table: Literal["arcs", "distances"]
    vertex_count: int
    row_count: int
    rows: list[dict[str, Any]]


class RouteRequest(ParamsSpec):
    source: str
    target: str
    mode: Literal["shortest", "restricted", "reach"] = "shortest"


class ArcOpModel(BaseModel):
    kind: Literal["rotation", "shift"]
    value: int


class RouteResponse(BaseModel):
    params: ParamsSpec
    mode: Literal["shortest", "restricted", "reach"]
    source: str
    target: str
    length: int
    vertices: list[str]
    ops: list[ArcOpModel]
    header: list[int] | None = Field(
        default=None,
        description="for shortest mode: the target prefix whose right-to-left composition is the path")
    simple: bool = Field(description="true when no vertex repeats (path rather than walk)")


class ContainerRequest(ParamsSpec):
    source: str
    target: str


class ContainerLegModel(BaseModel):
    symbol: int
    neighbor: str
    in_neighbor: str | None
    predicted_length: int | None
    actual_length: int


class ContainerResponse(BaseModel):
    params: ParamsSpec
    source: str
    target: str
    width: int
    length: int
    max_allowed: int
    disjoint: bool
    paths: list[list[str]]
    lengths: list[int]
    legs: list[ContainerLegModel]


class VerifyRequest(BaseModel):
    suite: Literal[
        "distances", "uniqueness", "diameter", "reachability",
        "containers", "witness", "menger",
    ]
    delta: int | None = Field(default=None, ge=2)
    dee: int | None = Field(default=None, ge=2)
    r: int | None = Field(default=None, ge=0)
    max_vertices: int = Field(default=2520, ge=1)
    seed: int = 0
    sample: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _instance_all_or_none(self) -> "VerifyRequest":
        fixed = (self.delta is not None, self.dee is not None)
        if any(fixed) and not all(fixed):
            raise ValueError("fix an instance with both delta and dee (r defaults to 0), or neither")
        if self.r is not None and self.delta is None:
            raise ValueError("r without delta/dee does not select an instance")
        return self

    def to_params(self) -> NetworkParams | None:
        if self.delta is None:
            return None
        return NetworkParams(delta=self.delta, dee=self.dee, r=self.r or 0)


class VerifySummary(BaseModel):
    records: int
    failed: int


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    summary: VerifySummary
    records: list[dict[str, Any]]
