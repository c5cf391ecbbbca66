"""Deterministic table generation and rendering (JSONL, CSV, DOT).

Row generation is shared by the service and the test suite; rendering is done
client-side by the CLI.  All output is byte-identical across runs: vertices
are listed in lexicographic order, arcs in rotation-then-shift order, JSON
keys sorted, CSV rows newline-terminated.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .errors import InstanceTooLargeError
from .oracle import DEFAULT_MAX_VERTICES, GraphModel
from .topology import NetworkParams, arcs_from, vertex_from_text, vertex_to_text

ARC_FIELDS = ("src", "dst", "op", "kind")
DISTANCE_FIELDS = ("src", "dst", "d")

# All-sources distance tables produce n^2 rows; keep that bounded.
MAX_DISTANCE_ROWS = 4_000_000


def arc_rows(params: NetworkParams,
             max_vertices: int = DEFAULT_MAX_VERTICES) -> list[dict]:
    """Every arc as a ``{src, dst, op, kind}`` row.

    ``kind`` is ``rotation`` or ``shift``; ``op`` is the rotation position or
    the inserted symbol respectively.
    """
    model = GraphModel(params, max_vertices)
    rows = []
    for v in model.verts:
        src = vertex_to_text(v, params)
        for (kind, value), w in arcs_from(v, params):
            rows.append({
                "src": src,
                "dst": vertex_to_text(w, params),
                "op": value,
                "kind": kind,
            })
    return rows


def distance_rows(params: NetworkParams, source: str | None = None,
                  max_vertices: int = DEFAULT_MAX_VERTICES) -> list[dict]:
    """BFS distance table as ``{src, dst, d}`` rows.

    With ``source`` (vertex text), one row per destination; without it, all
    ordered pairs — guarded so the table stays below ``MAX_DISTANCE_ROWS``.
    """
    model = GraphModel(params, max_vertices)
    if source is not None:
        src_v = vertex_from_text(source, params)
        sources = [model.vid(src_v)]
    else:
        if model.n * model.n > MAX_DISTANCE_ROWS:
            raise InstanceTooLargeError(
                f"all-sources distance table would have {model.n * model.n} rows "
                f"(cap {MAX_DISTANCE_ROWS}); pass a single source instead"
            )
        sources = range(model.n)
    rows = []
    for si in sources:
        src = vertex_to_text(model.verts[si], params)
        dist = model.bfs(si)
        for ti, d in enumerate(dist):
            rows.append({
                "src": src,
                "dst": vertex_to_text(model.verts[ti], params),
                "d": d,
            })
    return rows


def dumps_compact(obj) -> str:
    """One deterministic JSON line: sorted keys, no whitespace padding."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_jsonl(rows: Iterable[dict]) -> str:
    """One JSON object per line, deterministic; ends with a newline when non-empty."""
    lines = [dumps_compact(row) for row in rows]
    return "\n".join(lines) + ("\n" if lines else "")


def render_csv(rows: Sequence[dict], fieldnames: Sequence[str]) -> str:
    """CSV with a header row and fixed column order, newline-terminated lines."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def render_dot(rows: Sequence[dict], params: NetworkParams) -> str:
    """DOT digraph: one edge per arc row, instance parameters in the comment."""
    lines = [
        "digraph cycleprefix {",
        f'  comment="delta={params.delta} dee={params.dee} r={params.r}";',
    ]
    for row in rows:
        lines.append(f'  "{row["src"]}" -> "{row["dst"]}" [label="{row["kind"]}:{row["op"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
