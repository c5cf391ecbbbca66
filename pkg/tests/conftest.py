"""Shared fixtures: cached graph models and all-sources BFS tables.

Both caches are session-scoped and lazy, so expensive instances are built at
most once per test run, on first use.
"""

from __future__ import annotations

import pytest

from cycleprefix import GraphModel, NetworkParams


@pytest.fixture(scope="session")
def model_for():
    """``model_for(delta, dee, r=0) -> GraphModel``, cached per instance."""
    cache: dict[tuple[int, int, int], GraphModel] = {}

    def get(delta: int, dee: int, r: int = 0) -> GraphModel:
        key = (delta, dee, r)
        if key not in cache:
            cache[key] = GraphModel(NetworkParams(delta, dee, r))
        return cache[key]

    return get


@pytest.fixture(scope="session")
def bfs_all(model_for):
    """``bfs_all(delta, dee, r=0) -> list[list[int]]``: BFS distance rows for
    every source (indexed like ``GraphModel.verts``), cached per instance."""
    cache: dict[tuple[int, int, int], list[list[int]]] = {}

    def get(delta: int, dee: int, r: int = 0) -> list[list[int]]:
        key = (delta, dee, r)
        if key not in cache:
            model = model_for(delta, dee, r)
            cache[key] = [model.bfs(s) for s in range(model.n)]
        return cache[key]

    return get
