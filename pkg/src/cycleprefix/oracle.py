"""Brute-force reference computations on explicit graph models.

Everything here is deliberately independent of the constructive routines in
:mod:`cycleprefix.routing` and :mod:`cycleprefix.containers`: the oracle
enumerates the whole graph and answers by search (BFS, DP over BFS layers,
bitset closure, max-flow), so its outputs can be used to cross-check the
closed-form algorithms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InstanceTooLargeError, SameVertexError, VertexError
from .topology import (
    NetworkParams,
    Vertex,
    arcs_from,
    check_vertex,
    iter_vertices,
    vertex_count,
)

DEFAULT_MAX_VERTICES = 1_000_000


class GraphModel:
    """Explicit model of one instance: vertex list, index map, adjacency.

    Refuses to materialize instances larger than ``max_vertices``.
    """

    def __init__(self, params: NetworkParams, max_vertices: int = DEFAULT_MAX_VERTICES):
        n = vertex_count(params)
        if n > max_vertices:
            raise InstanceTooLargeError(
                f"instance has {n} vertices, above the cap of {max_vertices}"
            )
        self.params = params
        self.verts: list[Vertex] = list(iter_vertices(params))
        self.index: dict[Vertex, int] = {v: i for i, v in enumerate(self.verts)}
        self.adj: list[list[int]] = []
        for v in self.verts:
            self.adj.append([self.index[w] for _, w in arcs_from(v, params)])
        self.radj: list[list[int]] = [[] for _ in self.verts]
        for u, outs in enumerate(self.adj):
            for w in outs:
                self.radj[w].append(u)
        self._flow_graph: _FlowGraph | None = None

    @property
    def n(self) -> int:
        return len(self.verts)

    def vid(self, x: Vertex) -> int:
        check_vertex(x, self.params)
        return self.index[x]

    def bfs(self, src: int) -> list[int]:
        """Distances from ``src`` to every vertex (-1 when unreachable)."""
        dist = [-1] * self.n
        dist[src] = 0
        frontier = [src]
        d = 0
        adj = self.adj
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def bfs_counts(self, src: int) -> tuple[list[int], list[int]]:
        """Distances and numbers of shortest paths from ``src`` to every vertex."""
        dist = [-1] * self.n
        cnt = [0] * self.n
        dist[src] = 0
        cnt[src] = 1
        frontier = [src]
        d = 0
        adj = self.adj
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                cu = cnt[u]
                for w in adj[u]:
                    dw = dist[w]
                    if dw < 0:
                        dist[w] = d
                        cnt[w] = cu
                        nxt.append(w)
                    elif dw == d:
                        cnt[w] += cu
            frontier = nxt
        return dist, cnt

    def eccentricity(self, src: int) -> int:
        dist = self.bfs(src)
        worst = max(dist)
        if min(dist) < 0:
            raise VertexError(f"vertex {self.verts[src]} does not reach the whole graph")
        return worst

    def flow_graph(self) -> "_FlowGraph":
        if self._flow_graph is None:
            self._flow_graph = _FlowGraph(self)
        return self._flow_graph


@dataclass(frozen=True)
class DistanceTable:
    """BFS distances from one source vertex."""

    params: NetworkParams
    source: Vertex
    dist: dict[Vertex, int]


def bfs_distances(source: Vertex, params: NetworkParams,
                  max_vertices: int = DEFAULT_MAX_VERTICES,
                  model: GraphModel | None = None) -> DistanceTable:
    """Exact distances from ``source`` to every vertex, by breadth-first search."""
    model = model or GraphModel(params, max_vertices)
    row = model.bfs(model.vid(source))
    return DistanceTable(params, source, {model.verts[i]: d for i, d in enumerate(row)})


def diameter(params: NetworkParams, max_vertices: int = DEFAULT_MAX_VERTICES,
             model: GraphModel | None = None, full: bool = False) -> int:
    """The graph diameter.

    The graph is vertex-transitive (alphabet relabelings act transitively), so
    one eccentricity suffices; by default this is double-checked from a few
    spread-out extra sources, and ``full=True`` sweeps every source.
    """
    model = model or GraphModel(params, max_vertices)
    n = model.n
    ecc0 = model.eccentricity(0)
    probes = range(n) if full else {n // 4, n // 2, (3 * n) // 4} - {0}
    for src in probes:
        if model.eccentricity(src) != ecc0:
            raise AssertionError(
                f"eccentricity differs between sources 0 and {src}; graph not vertex-transitive?"
            )
    return ecc0


def count_geodesics(x: Vertex, y: Vertex, params: NetworkParams,
                    max_vertices: int = DEFAULT_MAX_VERTICES,
                    model: GraphModel | None = None) -> int:
    """Number of shortest paths from ``x`` to ``y`` (1 when ``x == y``)."""
    model = model or GraphModel(params, max_vertices)
    dist, cnt = model.bfs_counts(model.vid(x))
    return cnt[model.vid(y)]


def enumerate_geodesics(x: Vertex, y: Vertex, params: NetworkParams,
                        max_vertices: int = DEFAULT_MAX_VERTICES,
                        model: GraphModel | None = None) -> list[tuple[Vertex, ...]]:
    """All shortest paths from ``x`` to ``y``, sorted, each as a vertex tuple."""
    model = model or GraphModel(params, max_vertices)
    si, ti = model.vid(x), model.vid(y)
    dist = model.bfs(si)
    if dist[ti] < 0:
        return []
    paths: list[tuple[Vertex, ...]] = []
    stack: list[int] = [ti]

    def backtrack(v: int) -> None:
        if v == si:
            paths.append(tuple(model.verts[i] for i in reversed(stack)))
            return
        dv = dist[v]
        for u in model.radj[v]:
            if dist[u] == dv - 1:
                stack.append(u)
                backtrack(u)
                stack.pop()

    backtrack(ti)
    paths.sort()
    return paths


@dataclass(frozen=True)
class ReachabilityReport:
    """Outcome of the exact-length reachability check."""

    params: NetworkParams
    k: int
    ok: bool
    minimal_k: int | None
    counterexamples: tuple[tuple[Vertex, Vertex], ...] = ()


def exact_k_reachable(params: NetworkParams, k: int,
                      max_vertices: int = DEFAULT_MAX_VERTICES,
                      model: GraphModel | None = None,
                      counterexample_limit: int = 10) -> ReachabilityReport:
    """Check whether every ordered pair is joined by a walk of length exactly ``k``.

    Uses bitset DP: ``reach_t[u]`` holds the vertices reachable from ``u`` by a
    walk of length exactly ``t``.  Exact-length reachability is monotone in the
    length here (prepending an arc preserves it), so the report also states the
    minimal ``t <= k`` at which the property first holds, when it does.
    """
    if k < 0:
        raise ValueError(f"walk length must be non-negative, got {k}")
    model = model or GraphModel(params, max_vertices)
    n = model.n
    full = (1 << n) - 1
    rows = [1 << u for u in range(n)]
    minimal: int | None = 0 if all(row == full for row in rows) else None
    for t in range(1, k + 1):
        rows = [_or_rows(rows, outs) for outs in model.adj]
        if minimal is None and all(row == full for row in rows):
            minimal = t
    ok = all(row == full for row in rows)
    counterexamples: list[tuple[Vertex, Vertex]] = []
    if not ok:
        for u in range(n):
            missing = full & ~rows[u]
            while missing and len(counterexamples) < counterexample_limit:
                w = (missing & -missing).bit_length() - 1
                counterexamples.append((model.verts[u], model.verts[w]))
                missing &= missing - 1
            if len(counterexamples) >= counterexample_limit:
                break
    return ReachabilityReport(params, k, ok, minimal, tuple(counterexamples))


def _or_rows(rows: list[int], outs: list[int]) -> int:
    acc = 0
    for w in outs:
        acc |= rows[w]
    return acc


@dataclass(frozen=True)
class ContainerCheck:
    """Diagnostics for a bundle of paths between two vertices."""

    valid: bool
    width: int
    length: int
    issues: tuple[str, ...] = ()


def verify_container(container, params: NetworkParams,
                     expected_width: int | None = None,
                     max_length: int | None = None) -> ContainerCheck:
    """Check a path bundle: arc-validity, endpoints, internal disjointness.

    ``container`` is either an object with ``src``, ``dst`` and ``paths``
    attributes or a ``(src, dst, paths)`` triple.  ``expected_width`` and
    ``max_length`` (when given) are also enforced.  All findings are reported
    in ``issues``; ``valid`` is True iff there are none.
    """
    from .topology import is_arc  # local import keeps the module header lean

    if hasattr(container, "paths"):
        src, dst, paths = container.src, container.dst, container.paths
    else:
        src, dst, paths = container
    check_vertex(src, params)
    check_vertex(dst, params)
    if src == dst:
        raise SameVertexError("container endpoints must differ")
    issues: list[str] = []
    paths = [tuple(p) for p in paths]
    for pi, path in enumerate(paths):
        if len(path) < 2:
            issues.append(f"path {pi} has fewer than two vertices")
            continue
        if path[0] != src:
            issues.append(f"path {pi} starts at {path[0]}, not the source")
        if path[-1] != dst:
            issues.append(f"path {pi} ends at {path[-1]}, not the destination")
        for a, b in zip(path, path[1:]):
            if not is_arc(a, b, params):
                issues.append(f"path {pi} uses a non-arc step {a} -> {b}")
        interior = path[1:-1]
        if len(set(interior)) != len(interior):
            issues.append(f"path {pi} repeats an interior vertex")
        if src in interior or dst in interior:
            issues.append(f"path {pi} passes through an endpoint")
    seen: dict[Vertex, int] = {}
    for pi, path in enumerate(paths):
        for v in path[1:-1]:
            if v in seen and seen[v] != pi:
                issues.append(f"paths {seen[v]} and {pi} share interior vertex {v}")
            else:
                seen[v] = pi
    first_vertices = [p[1] for p in paths if len(p) >= 2]
    if len(set(first_vertices)) != len(first_vertices):
        issues.append("two paths leave the source by the same arc")
    if expected_width is not None and len(paths) != expected_width:
        issues.append(f"expected {expected_width} paths, got {len(paths)}")
    length = max((len(p) - 1 for p in paths), default=0)
    if max_length is not None and length > max_length:
        issues.append(f"longest path has length {length}, above the bound {max_length}")
    return ContainerCheck(valid=not issues, width=len(paths), length=length,
                          issues=tuple(issues))


class _FlowGraph:
    """Vertex-split unit-capacity copy of a model, reused across max-flow calls."""

    def __init__(self, model: GraphModel):
        n = model.n
        self.n_nodes = 2 * n
        # Edge lists in paired form: edge 2e and its reverse 2e+1.
        heads: list[list[int]] = [[] for _ in range(self.n_nodes)]
        to: list[int] = []
        base_cap: list[int] = []

        def add_edge(a: int, b: int) -> None:
            heads[a].append(len(to))
            to.append(b)
            base_cap.append(1)
            heads[b].append(len(to))
            to.append(a)
            base_cap.append(0)

        for u in range(n):
            add_edge(2 * u, 2 * u + 1)  # u_in -> u_out, capacity 1
        for u, outs in enumerate(model.adj):
            for w in outs:
                add_edge(2 * u + 1, 2 * w)  # u_out -> w_in
        self.heads = heads
        self.to = to
        self.base_cap = base_cap

    def max_flow(self, src: int, dst: int, stop_at: int | None = None) -> int:
        """Unit-capacity max flow from split-node ``src`` to split-node ``dst``
        by repeated BFS augmentation (one unit per round)."""
        cap = list(self.base_cap)
        heads, to = self.heads, self.to
        flow = 0
        parent_edge = [-1] * self.n_nodes
        while stop_at is None or flow < stop_at:
            for i in range(self.n_nodes):
                parent_edge[i] = -1
            parent_edge[src] = -2
            frontier = [src]
            found = False
            while frontier and not found:
                nxt = []
                for u in frontier:
                    for e in heads[u]:
                        if cap[e] > 0 and parent_edge[to[e]] == -1:
                            w = to[e]
                            parent_edge[w] = e
                            if w == dst:
                                found = True
                                break
                            nxt.append(w)
                    if found:
                        break
                frontier = nxt
            if not found:
                break
            v = dst
            while v != src:
                e = parent_edge[v]
                cap[e] -= 1
                cap[e ^ 1] += 1
                v = to[e ^ 1]
            flow += 1
        return flow


def menger_disjoint_count(x: Vertex, y: Vertex, params: NetworkParams,
                          max_vertices: int = DEFAULT_MAX_VERTICES,
                          model: GraphModel | None = None) -> int:
    """Maximum number of internally vertex-disjoint paths from ``x`` to ``y``.

    Computed as unit-capacity max flow on the vertex-split graph (each vertex
    becomes an in/out pair joined by a capacity-1 edge).  Returns 0 when
    ``x == y``.
    """
    model = model or GraphModel(params, max_vertices)
    xi, yi = model.vid(x), model.vid(y)
    if xi == yi:
        return 0
    fg = model.flow_graph()
    # Start at x's out-node and finish at y's in-node so the endpoints'
    # unit capacities do not constrain the flow.
    return fg.max_flow(2 * xi + 1, 2 * yi, stop_at=params.out_degree + 1)


def sample_vertex_pairs(params: NetworkParams, count: int, seed: int,
                        model: GraphModel | None = None,
                        max_vertices: int = DEFAULT_MAX_VERTICES,
                        distinct: bool = True) -> list[tuple[Vertex, Vertex]]:
    """Deterministic sample of ordered vertex pairs (seeded RNG).

    Draws uniformly with replacement over ordered pairs; when ``distinct`` is
    set, pairs with equal endpoints are rejected and redrawn.
    """
    model = model or GraphModel(params, max_vertices)
    rng = random.Random(seed)
    n = model.n
    pairs: list[tuple[Vertex, Vertex]] = []
    for _ in range(count):
        a = rng.randrange(n)
        b = rng.randrange(n)
        while distinct and b == a:
            b = rng.randrange(n)
        pairs.append((model.verts[a], model.verts[b]))
    return pairs
