"""FastAPI service exposing generation, routing, containers, and verification.

Domain errors map to HTTP 422 (bad values) or 413 (instance too large); all
successful responses are deterministic for identical requests.
"""

from __future__ import annotations

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse

from . import __version__
from . import containers as containers_mod
from . import exports, oracle, routing, verify
from .errors import CyclePrefixError, InstanceTooLargeError
from .schemas import (
    ArcOpModel,
    ContainerLegModel,
    ContainerRequest,
    ContainerResponse,
    GenRequest,
    GenResponse,
    ParamsInfo,
    ParamsSpec,
    RouteRequest,
    RouteResponse,
    VerifyRequest,
    VerifyResponse,
    VerifySummary,
)
from .topology import (
    NetworkParams,
    arc_count,
    arc_op,
    standard_origin,
    vertex_count,
    vertex_from_text,
    vertex_to_text,
)

app = FastAPI(
    title="cycleprefix",
    version=__version__,
    description=(
        "Rotation/shift networks on distinct-symbol words: constructive routing, "
        "disjoint-path containers, and brute-force verification."
    ),
)


@app.exception_handler(CyclePrefixError)
async def _domain_error_handler(request, exc: CyclePrefixError):
    status = 413 if isinstance(exc, InstanceTooLargeError) else 422
    return JSONResponse(status_code=status, content={"detail": str(exc)})


def _params_info(p: NetworkParams) -> ParamsInfo:
    return ParamsInfo(
        delta=p.delta,
        dee=p.dee,
        r=p.r,
        alphabet_size=p.alphabet_size,
        out_degree=p.out_degree,
        vertex_count=vertex_count(p),
        arc_count=arc_count(p),
        origin=vertex_to_text(standard_origin(p), p),
        diameter=p.dee + p.r if p.dee >= 2 * p.r + 2 else None,
        reach_length=p.dee + p.r if p.dee >= 2 * p.r + 3 else None,
        text_format="digits" if p.delta + 1 <= 9 else "hyphenated",
    )


@app.get("/params", response_model=ParamsInfo)
async def get_params(
    delta: int = Query(ge=2),
    dee: int = Query(ge=2),
    r: int = Query(default=0, ge=0),
) -> ParamsInfo:
    """Derived facts about one instance (sizes, degrees, regimes, formats)."""
    return _params_info(NetworkParams(delta=delta, dee=dee, r=r))


@app.post("/gen", response_model=GenResponse)
async def post_gen(req: GenRequest) -> GenResponse:
    """Generate the arc table or a BFS distance table."""
    p = req.to_params()
    if req.table == "arcs":
        rows = exports.arc_rows(p, max_vertices=req.max_vertices)
    else:
        rows = exports.distance_rows(p, source=req.source, max_vertices=req.max_vertices)
    return GenResponse(
        params=ParamsSpec(delta=p.delta, dee=p.dee, r=p.r),
        table=req.table,
        vertex_count=vertex_count(p),
        row_count=len(rows),
        rows=rows,
    )


@app.post("/route", response_model=RouteResponse)
async def post_route(req: RouteRequest) -> RouteResponse:
    """Route between two vertices: unique shortest path (full network),
    bounded simple path avoiding deleted rotations, or exact-length walk."""
    p = req.to_params()
    x = vertex_from_text(req.source, p)
    y = vertex_from_text(req.target, p)
    header: list[int] | None = None
    if req.mode == "shortest":
        seq = routing.shortest_path(x, y, p)
        header = list(routing.header_split(x, y, p).header)
    elif req.mode == "restricted":
        seq = routing.restricted_route(x, y, p)
    else:
        seq = routing.reach_walk(x, y, p)
    ops = [
        ArcOpModel(kind=kind, value=value)
        for kind, value in (arc_op(a, b, p) for a, b in zip(seq, seq[1:]))
    ]
    return RouteResponse(
        params=ParamsSpec(delta=p.delta, dee=p.dee, r=p.r),
        mode=req.mode,
        source=req.source,
        target=req.target,
        length=len(seq) - 1,
        vertices=[vertex_to_text(v, p) for v in seq],
        ops=ops,
        header=header,
        simple=len(set(seq)) == len(seq),
    )


@app.post("/container", response_model=ContainerResponse)
async def post_container(req: ContainerRequest) -> ContainerResponse:
    """Build the disjoint-path container for an ordered pair (full network)."""
    p = req.to_params()
    x = vertex_from_text(req.source, p)
    y = vertex_from_text(req.target, p)
    c = containers_mod.build_container(x, y, p)
    check = oracle.verify_container(c, p, expected_width=p.delta, max_length=p.dee + 2)
    return ContainerResponse(
        params=ParamsSpec(delta=p.delta, dee=p.dee, r=p.r),
        source=req.source,
        target=req.target,
        width=c.width,
        length=c.length,
        max_allowed=p.dee + 2,
        disjoint=check.valid,
        paths=[[vertex_to_text(v, p) for v in path] for path in c.paths],
        lengths=[len(path) - 1 for path in c.paths],
        legs=[
            ContainerLegModel(
                symbol=leg.symbol,
                neighbor=vertex_to_text(leg.neighbor, p),
                in_neighbor=(
                    vertex_to_text(leg.in_neighbor, p) if leg.in_neighbor is not None else None
                ),
                predicted_length=leg.predicted_length,
                actual_length=leg.actual_length,
            )
            for leg in c.legs
        ],
    )


@app.post("/verify", response_model=VerifyResponse)
async def post_verify(req: VerifyRequest) -> VerifyResponse:
    """Run one verification suite; records cross-check constructions against
    the brute-force oracle."""
    result = verify.run_suite(
        req.suite,
        req.to_params(),
        max_vertices=req.max_vertices,
        seed=req.seed,
        sample=req.sample,
    )
    failed = sum(1 for rec in result.records if not rec["pass"])
    return VerifyResponse(
        suite=result.suite,
        passed=result.passed,
        summary=VerifySummary(records=len(result.records), failed=failed),
        records=list(result.records),
    )
