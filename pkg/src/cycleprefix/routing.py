"""Constructive routing: closed-form distances, unique shortest paths,
bounded rerouting around deleted rotations, and exact-length walks.

All routines work purely from the word structure of the endpoints — no graph
search.  The brute-force counterparts live in :mod:`cycleprefix.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, SameVertexError
from .topology import (
    NetworkParams,
    Vertex,
    check_vertex,
    compose,
    dead_angle,
    invert_sigma,
    normalizing_sigma,
    relabel,
    standard_origin,
)


@dataclass(frozen=True)
class HeaderSplit:
    """Decomposition of a routing target ``y`` relative to a source ``x``.

    The *tail* is the longest suffix of ``y`` that already sits inside ``x``
    in a usable way; the *header* is the rest.  The header length equals the
    distance from ``x`` to ``y`` in the full network, and composing the header
    symbols right-to-left onto ``x`` realizes the unique shortest path.
    """

    source: Vertex
    target: Vertex
    header: tuple[int, ...]
    tail: tuple[int, ...]

    @property
    def header_len(self) -> int:
        return len(self.header)


def _header_len(x: Vertex, y: Vertex, dee: int) -> int:
    """Length of the header of ``y`` relative to ``x`` (= distance, full network).

    A suffix ``y_{k+1} .. y_dee`` is usable iff (i) ``y_dee`` occurs in ``x``,
    (ii) every symbol of ``x`` up to and including that occurrence also occurs
    in ``y``, and (iii) the suffix occurs inside ``x`` left-to-right.  Since
    symbols are distinct, suffix positions in ``x`` are forced, so the longest
    usable suffix is found by one right-to-left scan.
    """
    if x == y:
        return 0
    pos = {s: i for i, s in enumerate(x)}
    j = pos.get(y[-1])
    if j is None:
        return dee
    yset = set(y)
    if any(s not in yset for s in x[: j + 1]):
        return dee
    k = dee - 1
    cur = j
    for m in range(dee - 2, -1, -1):
        p = pos.get(y[m])
        if p is None or p >= cur:
            break
        cur = p
        k -= 1
    return k


def header_split(x: Vertex, y: Vertex, params: NetworkParams) -> HeaderSplit:
    """Split ``y`` into header and tail relative to ``x`` (full network only)."""
    params.require_full("header_split")
    check_vertex(x, params)
    check_vertex(y, params)
    k = _header_len(x, y, params.dee)
    return HeaderSplit(source=x, target=y, header=y[:k], tail=y[k:])


def distance(x: Vertex, y: Vertex, params: NetworkParams) -> int:
    """Exact distance from ``x`` to ``y`` in the full network (r = 0)."""
    params.require_full("distance")
    check_vertex(x, params)
    check_vertex(y, params)
    return _header_len(x, y, params.dee)


def shortest_path(x: Vertex, y: Vertex, params: NetworkParams) -> tuple[Vertex, ...]:
    """The unique shortest path from ``x`` to ``y`` in the full network.

    Composes the header symbols of ``y`` from last to first.  Raises
    ``SameVertexError`` when ``x == y`` (a path needs distinct endpoints).
    """
    params.require_full("shortest_path")
    check_vertex(x, params)
    check_vertex(y, params)
    if x == y:
        raise SameVertexError(f"shortest_path requires distinct endpoints, got {x} twice")
    k = _header_len(x, y, params.dee)
    path = [x]
    cur = x
    for m in range(k - 1, -1, -1):
        cur = compose(y[m], cur, params)
        path.append(cur)
    if cur != y:
        raise AssertionError(f"header composition ended at {cur}, expected {y}")
    return tuple(path)


def next_hop_distance_check(x: Vertex, y: Vertex, i: int, params: NetworkParams) -> int:
    """Distance from the out-neighbor ``compose(i, x)`` to ``y`` (full network).

    Also enforces the one-step law: composing the last header symbol is the
    only move that decreases the distance, and it decreases it by exactly 1.
    """
    params.require_full("next_hop_distance_check")
    d_here = distance(x, y, params)
    nxt = compose(i, x, params)
    d_next = _header_len(nxt, y, params.dee)
    if d_here > 0 and i == y[d_here - 1]:
        expected_drop = d_next == d_here - 1
        if not expected_drop:
            raise AssertionError(
                f"composing the header symbol {i} onto {x} gave distance {d_next}, expected {d_here - 1}"
            )
    elif nxt != x and d_next < d_here:
        raise AssertionError(
            f"composing non-header symbol {i} onto {x} decreased distance {d_here} -> {d_next}"
        )
    return d_next


def _checked_step(i: int, cur: Vertex, params: NetworkParams) -> Vertex:
    """Compose ``i`` onto ``cur`` while rejecting no-ops and deleted rotations.

    The constructions below are proved never to hit either case; this guard
    turns any latent mistake into a loud failure instead of a silent bad walk.
    """
    if i == cur[0]:
        raise AssertionError(f"construction tried a no-op step (symbol {i} already leads {cur})")
    if i in cur and cur.index(i) + 1 <= params.r + 1:
        raise AssertionError(
            f"construction tried the deleted rotation from position {cur.index(i) + 1} at {cur}"
        )
    return compose(i, cur, params)


def _erase_loops(walk: list[Vertex]) -> list[Vertex]:
    """Shortcut repeated vertices, keeping each first occurrence (result is simple)."""
    out: list[Vertex] = []
    seen: dict[Vertex, int] = {}
    for v in walk:
        if v in seen:
            keep = seen[v] + 1
            for w in out[keep:]:
                del seen[w]
            del out[keep:]
        else:
            seen[v] = len(out)
            out.append(v)
    return out


def _route_to_target_from_origin(target: Vertex, params: NetworkParams) -> list[Vertex]:
    """Walk of length <= dee + r from the standard origin to ``target`` using
    only surviving arcs.  ``target`` must differ from the origin."""
    dee, r = params.dee, params.r
    origin = standard_origin(params)
    cur = origin
    walk = [cur]
    if target[-1] != 1:
        # Phase 1: r preparatory inserts.  Avoid the current dead angle (so the
        # step exists) and the last r+1 symbols of the target (so the final
        # composes never need a deleted rotation).  Symbols already in the
        # target are preferred, then smaller ones.
        target_set = set(target)
        avoid = set(target[dee - r - 1:])
        for _ in range(r):
            da = dead_angle(cur, r)
            candidates = [s for s in params.alphabet if s not in da and s not in avoid]
            if not candidates:
                raise AssertionError(f"no eligible insert symbol at {cur} routing to {target}")
            pick = min(candidates, key=lambda s: (s not in target_set, s))
            cur = _checked_step(pick, cur, params)
            walk.append(cur)
        for m in range(dee - 1, -1, -1):
            cur = _checked_step(target[m], cur, params)
            walk.append(cur)
    else:
        # Target ends in symbol 1 (the origin's head), which the plain scheme
        # cannot place last; instead spend up to r inserts drawn from the
        # target's early symbols, then compose the rest in two runs.
        a_rem = set(target[: dee - r - 2])
        inserts = 0
        while inserts < r:
            da = dead_angle(cur, r)
            candidates = [s for s in a_rem if s not in da]
            if not candidates:
                break
            pick = min(candidates)
            a_rem.discard(pick)
            cur = _checked_step(pick, cur, params)
            walk.append(cur)
            inserts += 1
        for m in range(dee - 2, -1, -1):
            cur = _checked_step(target[m], cur, params)
            walk.append(cur)
    if cur != target:
        raise AssertionError(f"restricted route ended at {cur}, expected {target}")
    if len(walk) - 1 > dee + r:
        raise AssertionError(f"restricted route used {len(walk) - 1} steps, above {dee + r}")
    return walk


def restricted_route(x: Vertex, y: Vertex, params: NetworkParams) -> tuple[Vertex, ...]:
    """A simple path from ``x`` to ``y`` of length at most ``dee + r`` that
    avoids the deleted rotations.  Requires ``dee >= 2*r + 2``.

    The construction normalizes ``x`` to the standard origin, builds the walk
    there, maps it back, and erases any incidental loops so the result is a
    simple path.
    """
    params.require_route_regime("restricted_route")
    check_vertex(x, params)
    check_vertex(y, params)
    if x == y:
        raise SameVertexError(f"restricted_route requires distinct endpoints, got {x} twice")
    sigma = normalizing_sigma(x, params)
    inv = invert_sigma(sigma)
    target = relabel(y, sigma, params)
    walk = _route_to_target_from_origin(target, params)
    path = _erase_loops([relabel(v, inv, params) for v in walk])
    return tuple(path)


def _reach_from_origin(target: Vertex, params: NetworkParams) -> list[Vertex]:
    """Walk of length exactly ``dee + r`` from the standard origin to ``target``
    using only surviving arcs.  Needs ``dee >= 2*r + 3``."""
    dee, r = params.dee, params.r
    cur = standard_origin(params)
    walk = [cur]
    if target[-1] != 1:
        # r inserts from the target's early symbols, then compose all of it.
        a_rem = set(target[: dee - r - 1])
        for _ in range(r):
            da = dead_angle(cur, r)
            candidates = [s for s in a_rem if s not in da]
            if not candidates:
                raise AssertionError(f"no eligible insert at {cur} reaching {target}")
            pick = min(candidates)
            a_rem.discard(pick)
            cur = _checked_step(pick, cur, params)
            walk.append(cur)
        for m in range(dee - 1, -1, -1):
            cur = _checked_step(target[m], cur, params)
            walk.append(cur)
    else:
        # Target ends in symbol 1: spend r+1 inserts, compose the middle run
        # (positions dee-1 down to dee-r-1), then close with the early prefix.
        a_rem = set(target[: dee - r - 2])
        for _ in range(r + 1):
            da = dead_angle(cur, r)
            candidates = [s for s in a_rem if s not in da]
            if not candidates:
                raise AssertionError(f"no eligible insert at {cur} reaching {target}")
            pick = min(candidates)
            a_rem.discard(pick)
            cur = _checked_step(pick, cur, params)
            walk.append(cur)
        for m in range(dee - 2, dee - r - 3, -1):
            cur = _checked_step(target[m], cur, params)
            walk.append(cur)
        for m in range(dee - r - 3, -1, -1):
            cur = _checked_step(target[m], cur, params)
            walk.append(cur)
    if cur != target:
        raise AssertionError(f"exact-length walk ended at {cur}, expected {target}")
    if len(walk) - 1 != dee + r:
        raise AssertionError(f"exact-length walk has {len(walk) - 1} steps, expected {dee + r}")
    return walk


def reach_walk(x: Vertex, y: Vertex, params: NetworkParams) -> tuple[Vertex, ...]:
    """A walk from ``x`` to ``y`` of length exactly ``dee + r`` avoiding the
    deleted rotations (vertices may repeat).  Requires ``dee >= 2*r + 3``.

    Exact-length walks exist for every ordered pair in this regime, including
    ``x == y``.
    """
    params.require_reach_regime("reach_walk")
    check_vertex(x, params)
    check_vertex(y, params)
    sigma = normalizing_sigma(x, params)
    inv = invert_sigma(sigma)
    target = relabel(y, sigma, params)
    walk = _reach_from_origin(target, params)
    return tuple(relabel(v, inv, params) for v in walk)


def is_remote(x: Vertex, params: NetworkParams) -> bool:
    """Whether ``x`` sits at maximum distance ``dee + r`` from the standard origin
    once ``r >= 1`` rotations are deleted: next-to-last symbol 1, last symbol
    ``dee``, and some earlier symbol above ``dee``."""
    check_vertex(x, params)
    dee = params.dee
    if dee < 3:
        return False
    return (
        x[-2] == 1
        and x[-1] == dee
        and any(s > dee for s in x[: dee - 2])
    )


def remote_vertex_example(params: NetworkParams) -> Vertex:
    """A canonical remote vertex: highest symbol first, then ``2 .. dee-2``,
    then ``1``, then ``dee`` (for ``dee == 3``: ``(delta+1, 1, 3)``)."""
    dee = params.dee
    if dee < 3:
        raise ParameterError(
            f"no remote vertices exist for dee={dee}: they need a symbol above dee "
            "before the final two positions"
        )
    if dee == 3:
        return (params.delta + 1, 1, 3)
    return (params.delta + 1,) + tuple(range(2, dee - 1)) + (1, dee)


def remote_distance_witness(params: NetworkParams,
                            max_vertices: int | None = None) -> tuple[Vertex, int]:
    """A remote vertex together with its BFS-verified distance from the origin.

    In the regime ``delta >= dee >= 2*r + 2`` with ``r >= 1`` the distance
    equals ``dee + r``, certifying that deleting ``r`` rotations stretches the
    diameter by exactly ``r``.
    """
    from . import oracle  # deferred: routing must stay import-light for oracle users

    witness = remote_vertex_example(params)
    kwargs = {} if max_vertices is None else {"max_vertices": max_vertices}
    table = oracle.bfs_distances(standard_origin(params), params, **kwargs)
    return witness, table.dist[witness]
