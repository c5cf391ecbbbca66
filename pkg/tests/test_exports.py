"""Unit tests for table builders and the dot/jsonl/csv renderers."""

from __future__ import annotations

import json

import pytest

from cycleprefix import InstanceTooLargeError, NetworkParams, vertex_count
from cycleprefix.exports import (
    ARC_FIELDS,
    DISTANCE_FIELDS,
    arc_rows,
    distance_rows,
    dumps_compact,
    render_csv,
    render_dot,
    render_jsonl,
)


def test_arc_rows_small_instance() -> None:
    p = NetworkParams(2, 2)
    rows = arc_rows(p)
    assert len(rows) == 12  # 6 vertices x out-degree 2
    assert all(set(r) == set(ARC_FIELDS) for r in rows)
    assert {r["kind"] for r in rows} == {"rotation", "shift"}
    # rows follow vertex order, arcs rotations-first
    assert rows[0]["src"] == "12"
    srcs = [r["src"] for r in rows]
    assert srcs == sorted(srcs, key=lambda s: [int(c) for c in s])


def test_arc_rows_restricted_count() -> None:
    p = NetworkParams(4, 4, 1)
    rows = arc_rows(p)
    assert len(rows) == 120 * 3
    assert not any(r["kind"] == "rotation" and r["op"] == 2 for r in rows)


def test_distance_rows_single_source() -> None:
    p = NetworkParams(4, 4)
    rows = distance_rows(p, source="1234")
    assert len(rows) == vertex_count(p)
    assert all(set(r) == set(DISTANCE_FIELDS) for r in rows)
    by_dst = {r["dst"]: r["d"] for r in rows}
    assert by_dst["1234"] == 0
    assert max(by_dst.values()) == 4


def test_distance_rows_all_sources_tiny() -> None:
    p = NetworkParams(2, 2)
    rows = distance_rows(p)
    assert len(rows) == 36
    assert sum(1 for r in rows if r["d"] == 0) == 6


def test_distance_rows_all_sources_guard() -> None:
    # 2520^2 ordered pairs exceeds the row cap; a single source stays allowed
    p = NetworkParams(6, 5)
    with pytest.raises(InstanceTooLargeError):
        distance_rows(p)


def test_render_jsonl_deterministic() -> None:
    rows = [{"b": 2, "a": 1}, {"a": 3, "b": 4}]
    text = render_jsonl(rows)
    assert text == '{"a":1,"b":2}\n{"a":3,"b":4}\n'
    assert render_jsonl([]) == ""
    assert dumps_compact({"z": 1, "a": [1, 2]}) == '{"a":[1,2],"z":1}'
    # every line parses back
    for line in text.splitlines():
        json.loads(line)


def test_render_csv_shape() -> None:
    p = NetworkParams(2, 2)
    rows = arc_rows(p)
    text = render_csv(rows, ARC_FIELDS)
    lines = text.splitlines()
    assert lines[0] == "src,dst,op,kind"
    assert len(lines) == len(rows) + 1
    assert text.endswith("\n")


def test_render_dot_shape() -> None:
    p = NetworkParams(2, 2)
    rows = arc_rows(p)
    text = render_dot(rows, p)
    lines = text.splitlines()
    assert lines[0] == "digraph cycleprefix {"
    assert lines[1] == '  comment="delta=2 dee=2 r=0";'
    assert lines[-1] == "}"
    assert sum(1 for ln in lines if "->" in ln) == len(rows)
    assert '  "12" -> "21" [label="rotation:2"];' in lines


def test_hyphenated_vertex_text_in_rows() -> None:
    p = NetworkParams(9, 2)  # alphabet reaches 10: digits would be ambiguous
    rows = arc_rows(p)
    assert len(rows) == 90 * 9
    assert any("-" in r["src"] for r in rows)
    ten = [r for r in rows if r["src"] == "10-1"]
    assert ten and all(r["dst"].count("-") == 1 for r in ten)
