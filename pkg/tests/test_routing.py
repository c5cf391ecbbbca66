"""Unit tests for closed-form routing, restricted routing, and reach walks."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycleprefix import (
    NetworkParams,
    ParameterError,
    SameVertexError,
    distance,
    header_split,
    is_arc,
    is_remote,
    iter_vertices,
    next_hop_distance_check,
    reach_walk,
    remote_distance_witness,
    remote_vertex_example,
    restricted_route,
    shortest_path,
)


def _vertex_strategy(p: NetworkParams):
    return st.permutations(list(p.alphabet)).map(lambda s: tuple(s[: p.dee]))


# ---------------------------------------------------------------------------
# distance and shortest paths (full link set)


def test_distance_examples() -> None:
    p8 = NetworkParams(8, 8)
    assert distance((4, 7, 2, 8, 5, 1, 3, 6), (8, 2, 1, 6, 4, 7, 5, 3), p8) == 4
    p6 = NetworkParams(6, 6)
    assert distance((5, 3, 1, 6, 2, 4), (1, 2, 3, 4, 5, 6), p6) == 4
    p4 = NetworkParams(5, 4)
    assert distance((1, 3, 2, 5), (1, 2, 3, 4), p4) == 4
    assert distance((2, 1, 3, 5), (2, 1, 3, 4), p4) == 4
    assert distance((4, 1, 3, 2), (1, 2, 3, 4), p4) == 3
    assert distance((1, 2, 3, 4), (1, 2, 3, 4), p4) == 0


def test_header_split_example() -> None:
    p8 = NetworkParams(8, 8)
    split = header_split((4, 7, 2, 8, 5, 1, 3, 6), (8, 2, 1, 6, 4, 7, 5, 3), p8)
    assert split.header == (8, 2, 1, 6)
    assert split.tail == (4, 7, 5, 3)
    assert split.header_len == 4


def test_distance_requires_full_link_set() -> None:
    with pytest.raises(ParameterError):
        distance((1, 2, 3, 4), (2, 1, 3, 4), NetworkParams(4, 4, 1))


def test_distance_matches_bfs_exhaustively(model_for, bfs_all) -> None:
    for key in ((4, 4, 0), (5, 4, 0)):
        p = NetworkParams(*key)
        m = model_for(*key)
        rows = bfs_all(*key)
        for xi, x in enumerate(m.verts):
            row = rows[xi]
            for yi, y in enumerate(m.verts):
                assert distance(x, y, p) == row[yi], (x, y)


def test_shortest_path_properties(model_for) -> None:
    p = NetworkParams(5, 4)
    m = model_for(5, 4)
    src = (1, 3, 2, 5)
    for y in m.verts:
        if y == src:
            continue
        path = shortest_path(src, y, p)
        assert path[0] == src and path[-1] == y
        assert len(path) - 1 == distance(src, y, p)
        assert len(set(path)) == len(path)
        for u, v in zip(path, path[1:]):
            assert is_arc(u, v, p)


def test_shortest_path_example_and_errors() -> None:
    p = NetworkParams(5, 4)
    path = shortest_path((2, 1, 3, 5), (2, 1, 3, 4), p)
    assert path == (
        (2, 1, 3, 5),
        (4, 2, 1, 3),
        (3, 4, 2, 1),
        (1, 3, 4, 2),
        (2, 1, 3, 4),
    )
    with pytest.raises(SameVertexError):
        shortest_path((1, 2, 3, 4), (1, 2, 3, 4), p)


def test_next_hop_law_exhaustive_small() -> None:
    p = NetworkParams(4, 4)
    verts = list(iter_vertices(p))
    ys = [(1, 2, 3, 4), (5, 2, 1, 4), (2, 3, 4, 5)]
    for x in verts:
        for y in ys:
            d_here = distance(x, y, p)
            for i in p.alphabet:
                # the call itself enforces the one-step law; a step can never
                # gain more than one unit of progress
                d_next = next_hop_distance_check(x, y, i, p)
                assert d_next >= d_here - 1


@settings(deadline=None, max_examples=200)
@given(data=st.data())
def test_distance_properties_random(data) -> None:
    p = NetworkParams(6, 5)
    x = data.draw(_vertex_strategy(p))
    y = data.draw(_vertex_strategy(p))
    d = distance(x, y, p)
    assert 0 <= d <= p.dee
    assert (d == 0) == (x == y)
    if x != y:
        path = shortest_path(x, y, p)
        assert len(path) - 1 == d
        for u, v in zip(path, path[1:]):
            assert is_arc(u, v, p)


# ---------------------------------------------------------------------------
# restricted routing (one link class removed)


def test_restricted_route_displayed_example() -> None:
    p = NetworkParams(4, 4, 1)
    route = restricted_route((1, 2, 3, 4), (5, 2, 1, 4), p)
    assert route == (
        (1, 2, 3, 4),
        (5, 1, 2, 3),
        (4, 5, 1, 2),
        (1, 4, 5, 2),
        (2, 1, 4, 5),
        (5, 2, 1, 4),
    )


def test_restricted_route_exhaustive_small(model_for) -> None:
    p = NetworkParams(4, 4, 1)
    m = model_for(4, 4, 1)
    bound = p.dee + p.r
    for x in m.verts:
        for y in m.verts:
            if x == y:
                continue
            route = restricted_route(x, y, p)
            assert route[0] == x and route[-1] == y
            assert len(route) - 1 <= bound
            assert len(set(route)) == len(route)
            for u, v in zip(route, route[1:]):
                assert is_arc(u, v, p)


def test_restricted_route_errors() -> None:
    with pytest.raises(SameVertexError):
        restricted_route((1, 2, 3, 4), (1, 2, 3, 4), NetworkParams(4, 4, 1))
    with pytest.raises(ParameterError):
        restricted_route((1, 2, 3, 4), (2, 1, 3, 4), NetworkParams(4, 4, 2))


@settings(deadline=None, max_examples=150)
@given(data=st.data())
def test_restricted_route_random_pairs(data) -> None:
    p = NetworkParams(6, 6, 2)
    x = data.draw(_vertex_strategy(p))
    y = data.draw(_vertex_strategy(p))
    if x == y:
        return
    route = restricted_route(x, y, p)
    assert route[0] == x and route[-1] == y
    assert len(route) - 1 <= p.dee + p.r
    assert len(set(route)) == len(route)
    for u, v in zip(route, route[1:]):
        assert is_arc(u, v, p)


# ---------------------------------------------------------------------------
# exact-length reach walks


def test_reach_walk_examples() -> None:
    p = NetworkParams(3, 3)
    walk = reach_walk((1, 2, 3), (1, 2, 3), p)
    assert walk == ((1, 2, 3), (3, 1, 2), (2, 3, 1), (1, 2, 3))

    p1 = NetworkParams(5, 5, 1)
    walk1 = reach_walk((2, 3, 4, 5, 1), (1, 2, 3, 4, 5), p1)
    assert len(walk1) - 1 == p1.dee + p1.r
    assert walk1[0] == (2, 3, 4, 5, 1) and walk1[-1] == (1, 2, 3, 4, 5)
    for u, v in zip(walk1, walk1[1:]):
        assert is_arc(u, v, p1)


def test_reach_walk_exhaustive_tiny() -> None:
    p = NetworkParams(3, 3)
    verts = list(iter_vertices(p))
    for x in verts:
        for y in verts:
            walk = reach_walk(x, y, p)
            assert walk[0] == x and walk[-1] == y
            assert len(walk) - 1 == 3
            for u, v in zip(walk, walk[1:]):
                assert is_arc(u, v, p)


def test_reach_walk_regime_guard() -> None:
    with pytest.raises(ParameterError):
        reach_walk((1, 2, 3, 4), (2, 1, 3, 4), NetworkParams(4, 4, 1))  # dee < 2r+3


@settings(deadline=None, max_examples=150)
@given(data=st.data())
def test_reach_walk_random_pairs(data) -> None:
    p = NetworkParams(5, 5, 1)
    x = data.draw(_vertex_strategy(p))
    y = data.draw(_vertex_strategy(p))
    walk = reach_walk(x, y, p)
    assert walk[0] == x and walk[-1] == y
    assert len(walk) - 1 == p.dee + p.r
    for u, v in zip(walk, walk[1:]):
        assert is_arc(u, v, p)


# ---------------------------------------------------------------------------
# remote vertices


def test_is_remote_examples() -> None:
    p = NetworkParams(4, 4, 1)
    assert is_remote((5, 2, 1, 4), p)
    assert not is_remote((1, 2, 3, 4), p)
    assert not is_remote((5, 2, 4, 1), p)  # does not end with the top in-band symbol
    assert not is_remote((2, 3, 1, 4), p)  # no out-of-band symbol up front


def test_remote_vertex_example_values() -> None:
    assert remote_vertex_example(NetworkParams(4, 4, 1)) == (5, 2, 1, 4)
    assert remote_vertex_example(NetworkParams(5, 5, 1)) == (6, 2, 3, 1, 5)
    assert remote_vertex_example(NetworkParams(4, 3, 1)) == (5, 1, 3)
    with pytest.raises(ParameterError):
        remote_vertex_example(NetworkParams(4, 2, 0))


def test_remote_vertices_attain_max_distance(model_for) -> None:
    p = NetworkParams(4, 4, 1)
    m = model_for(4, 4, 1)
    dist = m.bfs(m.vid(p.origin()))
    remotes = [v for v in m.verts if is_remote(v, p)]
    assert len(remotes) == 4
    for v in remotes:
        assert dist[m.vid(v)] == p.dee + p.r


def test_remote_distance_witness() -> None:
    p = NetworkParams(4, 4, 1)
    witness, d = remote_distance_witness(p)
    assert witness == (5, 2, 1, 4)
    assert d == 5
