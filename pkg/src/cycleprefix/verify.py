"""Named verification suites: each cross-checks one family of constructive
claims against the brute-force oracle and returns machine-readable records.

A record is a plain dict with a fixed schema (``schema_version`` = 1):
command, suite, check, params, inputs, observed, expected, pass, elapsed_ms.
``elapsed_ms`` is always ``None`` so record streams are byte-identical across
runs; wall-clock timing belongs on stderr, not in the data.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import containers as containers_mod
from . import oracle, routing, topology
from .errors import ParameterError, UndefinedStatisticError
from .topology import NetworkParams, vertex_count, vertex_to_text

SCHEMA_VERSION = 1

SUITES = (
    "distances",
    "uniqueness",
    "diameter",
    "reachability",
    "containers",
    "witness",
    "menger",
)

# Curated default instance family: small enough to enumerate, varied enough to
# exercise every code path (both parities of dee, delta > dee, r in {0, 1}).
DEFAULT_FAMILY: tuple[tuple[int, int, int], ...] = (
    (2, 2, 0),
    (3, 3, 0),
    (4, 4, 0),
    (5, 4, 0),
    (5, 5, 0),
    (6, 5, 0),
    (4, 4, 1),
    (5, 4, 1),
    (5, 5, 1),
    (6, 5, 1),
)

_SUITE_SAMPLE_DEFAULT = {
    "reachability": 1000,
    "containers": 10000,
    "menger": 1000,
}

# Containers are checked pair-exhaustively up to this many vertices, sampled above.
_EXHAUSTIVE_PAIR_LIMIT = 360


@dataclass(frozen=True)
class VerifyResult:
    """All records produced by one suite run; ``passed`` iff every record passed."""

    suite: str
    passed: bool
    records: tuple[dict, ...]


def _record(suite: str, check: str, params: NetworkParams, inputs: dict,
            observed: dict, expected: dict, ok: bool) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "suite": suite,
        "check": check,
        "params": {"delta": params.delta, "dee": params.dee, "r": params.r},
        "inputs": inputs,
        "observed": observed,
        "expected": expected,
        "pass": bool(ok),
        "elapsed_ms": None,
    }


def _instances(suite: str, params: NetworkParams | None,
               max_vertices: int) -> list[NetworkParams]:
    """The instances a suite runs on: the explicit one, or the default family
    filtered by the vertex cap and the suite's parameter regime."""
    if params is not None:
        return [params]
    chosen = []
    for delta, dee, r in DEFAULT_FAMILY:
        p = NetworkParams(delta, dee, r)
        if vertex_count(p) > max_vertices:
            continue
        if suite in ("distances", "uniqueness", "containers", "menger", "witness") and r != 0:
            if suite == "uniqueness":
                chosen.append(p)  # deleted instances run the expected-multiplicity check
            continue
        if suite == "witness" and dee < 4:
            continue
        if suite == "diameter" and dee < 2 * r + 2:
            continue
        if suite == "reachability" and dee < 2 * r + 3:
            continue
        chosen.append(p)
    return chosen


def run_suite(suite: str, params: NetworkParams | None = None, *,
              max_vertices: int = 2520, seed: int = 0,
              sample: int | None = None) -> VerifyResult:
    """Run one named suite and return its records.

    With ``params`` the suite checks that single instance (its regime
    preconditions are then enforced with errors rather than by filtering).
    Sampled checks draw from a seeded generator, so runs are reproducible.
    """
    if suite not in SUITES:
        raise ParameterError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if sample is None:
        sample = _SUITE_SAMPLE_DEFAULT.get(suite, 1000)
    runner = _RUNNERS[suite]
    records: list[dict] = []
    for p in _instances(suite, params, max_vertices):
        records.extend(runner(p, max_vertices=max_vertices, seed=seed, sample=sample))
    return VerifyResult(suite=suite, passed=all(rec["pass"] for rec in records),
                        records=tuple(records))


def _text(v: topology.Vertex, p: NetworkParams) -> str:
    return vertex_to_text(v, p)


def _suite_distances(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    p.require_full("distances suite")
    model = oracle.GraphModel(p, max_vertices)
    mismatches = []
    for si, s in enumerate(model.verts):
        row = model.bfs(si)
        for ti, t in enumerate(model.verts):
            if routing.distance(s, t, p) != row[ti]:
                mismatches.append((_text(s, p), _text(t, p)))
    return [_record(
        "distances", "closed-form-distance-matches-bfs", p,
        {"pairs": model.n * model.n},
        {"mismatches": len(mismatches), "first_mismatches": mismatches[:5]},
        {"mismatches": 0},
        not mismatches,
    )]


def _suite_uniqueness(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    model = oracle.GraphModel(p, max_vertices)
    if p.r == 0:
        multi = []
        for si, s in enumerate(model.verts):
            _, cnt = model.bfs_counts(si)
            for ti, c in enumerate(cnt):
                if c != 1:
                    multi.append((_text(s, p), _text(model.verts[ti], p), c))
        return [_record(
            "uniqueness", "every-pair-has-exactly-one-shortest-path", p,
            {"pairs": model.n * model.n},
            {"pairs_with_other_count": len(multi), "first": multi[:5]},
            {"pairs_with_other_count": 0},
            not multi,
        )]
    # Deleted-rotation instances intentionally lose uniqueness: the canonical
    # origin/remote pair must have at least two shortest paths.
    origin = topology.standard_origin(p)
    witness = routing.remote_vertex_example(p)
    count = oracle.count_geodesics(origin, witness, p, model=model)
    return [_record(
        "uniqueness", "remote-pair-has-multiple-shortest-paths", p,
        {"source": _text(origin, p), "target": _text(witness, p)},
        {"count": count},
        {"count_at_least": 2},
        count >= 2,
    )]


def _suite_diameter(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    p.require_route_regime("diameter suite")
    model = oracle.GraphModel(p, max_vertices)
    observed = oracle.diameter(p, model=model)
    records = [_record(
        "diameter", "bfs-diameter-equals-dee-plus-r", p,
        {}, {"diameter": observed}, {"diameter": p.dee + p.r},
        observed == p.dee + p.r,
    )]
    if p.r >= 1:
        origin = topology.standard_origin(p)
        row = model.bfs(model.vid(origin))
        wrong = [
            _text(v, p)
            for v in model.verts
            if routing.is_remote(v, p) and row[model.index[v]] != p.dee + p.r
        ]
        total = sum(1 for v in model.verts if routing.is_remote(v, p))
        records.append(_record(
            "diameter", "remote-vertices-sit-at-max-distance", p,
            {"remote_vertices": total},
            {"exceptions": len(wrong), "first": wrong[:5]},
            {"exceptions": 0},
            not wrong,
        ))
    return records


def _suite_reachability(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    p.require_reach_regime("reachability suite")
    model = oracle.GraphModel(p, max_vertices)
    k = p.dee + p.r
    report = oracle.exact_k_reachable(p, k, model=model)
    records = [_record(
        "reachability", "every-pair-reachable-by-exact-length-walk", p,
        {"k": k},
        {"ok": report.ok, "minimal_k": report.minimal_k,
         "counterexamples": [(_text(a, p), _text(b, p)) for a, b in report.counterexamples]},
        {"ok": True, "minimal_k": k},
        report.ok and report.minimal_k == k,
    )]
    n_pairs = min(sample, model.n * model.n)
    pairs = oracle.sample_vertex_pairs(p, n_pairs, seed, model=model, distinct=False)
    bad = []
    for x, y in pairs:
        walk = routing.reach_walk(x, y, p)
        ok = (walk[0] == x and walk[-1] == y and len(walk) - 1 == k
              and all(topology.is_arc(a, b, p) for a, b in zip(walk, walk[1:])))
        if not ok:
            bad.append((_text(x, p), _text(y, p)))
    records.append(_record(
        "reachability", "constructed-walks-are-arc-valid-with-exact-length", p,
        {"sampled_pairs": n_pairs, "seed": seed},
        {"failures": len(bad), "first": bad[:5]},
        {"failures": 0},
        not bad,
    ))
    return records


def _container_pair_ok(x, y, p: NetworkParams) -> tuple[list[str], int]:
    c = containers_mod.build_container(x, y, p)
    check = oracle.verify_container(c, p, expected_width=p.delta, max_length=p.dee + 2)
    issues = list(check.issues)
    for leg in c.legs:
        if leg.in_neighbor is not None and leg.predicted_length != leg.actual_length:
            issues.append(
                f"leg via symbol {leg.symbol}: predicted {leg.predicted_length}, actual {leg.actual_length}"
            )
    return issues, c.length


def _suite_containers(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    p.require_full("containers suite")
    model = oracle.GraphModel(p, max_vertices)
    records: list[dict] = []

    # Pairing bijectivity and the undefined-statistic census, exhaustively.
    origin = topology.standard_origin(p)
    m_set = topology.in_neighbors(origin, p)
    pairing_bad = []
    undefined = []
    for x in model.verts:
        if x == origin:
            continue
        image = set()
        for i in p.alphabet:
            if i == x[0] or topology.compose(i, x, p) == origin:
                continue
            image.add(topology.origin_in_neighbor(
                containers_mod.match_in_neighbor(x, i, p), p))
        if image != m_set - {x}:
            pairing_bad.append(_text(x, p))
        try:
            containers_mod.char_triple(x, p)
        except UndefinedStatisticError:
            undefined.append(_text(x, p))
    records.append(_record(
        "containers", "pairing-is-a-bijection-onto-destination-in-neighbors", p,
        {"vertices": model.n - 1},
        {"violations": len(pairing_bad), "first": pairing_bad[:5]},
        {"violations": 0},
        not pairing_bad,
    ))
    # The statistic is undefined only when every symbol sits in the band
    # {k+1..dee+1}; with dee distinct symbols that forces k = 1 and the single
    # shift in-neighbor (2, 3, ..., dee, dee+1).  A trailing symbol above
    # dee+1 is itself out of band, so those vertices keep a defined statistic.
    expected_undefined = [_text(tuple(range(2, p.dee + 2)), p)]
    records.append(_record(
        "containers", "undefined-statistic-census-matches-known-class", p,
        {"vertices": model.n - 1},
        {"count": len(undefined), "vertices": sorted(undefined)},
        {"count": 1, "vertices": expected_undefined},
        sorted(undefined) == expected_undefined,
    ))

    # Container validity over ordered pairs: exhaustive when small, else sampled.
    if model.n <= _EXHAUSTIVE_PAIR_LIMIT:
        pairs = [(x, y) for x in model.verts for y in model.verts if x != y]
        mode = "exhaustive"
    else:
        pairs = oracle.sample_vertex_pairs(p, sample, seed, model=model)
        mode = "sampled"
    bad = []
    max_len = 0
    for x, y in pairs:
        issues, c_len = _container_pair_ok(x, y, p)
        max_len = max(max_len, c_len)
        if issues:
            bad.append((_text(x, p), _text(y, p), issues[:2]))
    records.append(_record(
        "containers", "containers-are-disjoint-valid-and-short", p,
        {"pairs": len(pairs), "mode": mode, "seed": seed},
        {"failures": len(bad), "first": bad[:3], "max_length": max_len},
        {"failures": 0, "max_length_at_most": p.dee + 2},
        not bad and max_len <= p.dee + 2,
    ))
    return records


def _suite_witness(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    report = containers_mod.lower_bound_witness(p)
    c = containers_mod.build_container(report.source, report.target, p)
    ok = report.ok and c.length == p.dee + 2
    return [_record(
        "witness", "extremal-pair-forces-length-dee-plus-2", p,
        {"source": _text(report.source, p), "target": _text(report.target, p)},
        {
            "all_middle_symbols_at_full_distance": all(
                d == p.dee for d in report.distances.values()),
            "all_geodesics_through": all(report.passes_through.values()),
            "through_vertex": _text(report.through_vertex, p),
            "skip_symbol_distance": report.skip_symbol_distance,
            "container_length": c.length,
        },
        {"container_length": p.dee + 2, "witness_ok": True},
        ok,
    )]


def _suite_menger(p: NetworkParams, *, max_vertices: int, seed: int, sample: int) -> list[dict]:
    p.require_full("menger suite")
    model = oracle.GraphModel(p, max_vertices)
    if model.n * (model.n - 1) <= sample:
        pairs = [(x, y) for x in model.verts for y in model.verts if x != y]
        mode = "exhaustive"
    else:
        pairs = oracle.sample_vertex_pairs(p, sample, seed, model=model)
        mode = "sampled"
    bad = []
    for x, y in pairs:
        got = oracle.menger_disjoint_count(x, y, p, model=model)
        if got != p.delta:
            bad.append((_text(x, p), _text(y, p), got))
    return [_record(
        "menger", "max-disjoint-path-count-equals-delta", p,
        {"pairs": len(pairs), "mode": mode, "seed": seed},
        {"failures": len(bad), "first": bad[:5]},
        {"failures": 0},
        not bad,
    )]


_RUNNERS = {
    "distances": _suite_distances,
    "uniqueness": _suite_uniqueness,
    "diameter": _suite_diameter,
    "reachability": _suite_reachability,
    "containers": _suite_containers,
    "witness": _suite_witness,
    "menger": _suite_menger,
}
