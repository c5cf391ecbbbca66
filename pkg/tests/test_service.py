"""Tests for the HTTP service layer."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from cycleprefix.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


# ---------------------------------------------------------------------------
# /params


def test_params_endpoint(client) -> None:
    resp = client.get("/params", params={"delta": 5, "dee": 4, "r": 1})
    assert resp.status_code == 200
    body = resp.json()
    assert body == {
        "delta": 5,
        "dee": 4,
        "r": 1,
        "alphabet_size": 6,
        "out_degree": 4,
        "vertex_count": 360,
        "arc_count": 1440,
        "origin": "1234",
        "diameter": 5,
        "reach_length": None,  # dee=4 < 2r+3: no exact-length guarantee
        "text_format": "digits",
    }


def test_params_regime_fields_none_when_out_of_range(client) -> None:
    resp = client.get("/params", params={"delta": 4, "dee": 4, "r": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["diameter"] is None  # dee < 2r+2
    assert body["reach_length"] is None


def test_params_rejects_bad_instance(client) -> None:
    resp = client.get("/params", params={"delta": 3, "dee": 4})
    assert resp.status_code == 422
    assert "detail" in resp.json()
    # missing required query parameters -> request validation error
    assert client.get("/params").status_code == 422


# ---------------------------------------------------------------------------
# /gen


def test_gen_arcs(client) -> None:
    resp = client.post("/gen", json={"delta": 2, "dee": 2, "r": 0, "table": "arcs"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["table"] == "arcs"
    assert body["vertex_count"] == 6
    assert body["row_count"] == 12 == len(body["rows"])
    assert body["rows"][0] == {"src": "12", "dst": "21", "op": 2, "kind": "rotation"}


def test_gen_distances_single_source(client) -> None:
    resp = client.post("/gen", json={
        "delta": 4, "dee": 4, "table": "distances", "source": "1234",
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["row_count"] == 120
    assert {r["d"] for r in body["rows"]} == {0, 1, 2, 3, 4}


def test_gen_too_large_maps_to_413(client) -> None:
    resp = client.post("/gen", json={
        "delta": 9, "dee": 9, "table": "arcs", "max_vertices": 1000,
    })
    assert resp.status_code == 413
    assert "vertices" in resp.json()["detail"]


def test_gen_determinism(client) -> None:
    body = {"delta": 3, "dee": 3, "r": 0, "table": "arcs"}
    first = client.post("/gen", json=body)
    second = client.post("/gen", json=body)
    assert first.content == second.content


# ---------------------------------------------------------------------------
# /route


def test_route_shortest(client) -> None:
    resp = client.post("/route", json={
        "delta": 8, "dee": 8, "source": "47285136", "target": "82164753",
        "mode": "shortest",
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["length"] == 4
    assert body["header"] == [8, 2, 1, 6]
    assert body["vertices"][0] == "47285136"
    assert body["vertices"][-1] == "82164753"
    assert body["simple"] is True
    assert len(body["ops"]) == 4


def test_route_restricted_displayed_example(client) -> None:
    resp = client.post("/route", json={
        "delta": 4, "dee": 4, "r": 1, "source": "1234", "target": "5214",
        "mode": "restricted",
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["vertices"] == ["1234", "5123", "4512", "1452", "2145", "5214"]
    assert body["length"] == 5
    assert body["header"] is None
    assert body["simple"] is True
    kinds = [op["kind"] for op in body["ops"]]
    assert kinds == ["shift", "shift", "rotation", "rotation", "rotation"]


def test_route_reach_walk_can_repeat_vertices(client) -> None:
    resp = client.post("/route", json={
        "delta": 3, "dee": 3, "source": "123", "target": "123", "mode": "reach",
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["length"] == 3
    assert body["vertices"] == ["123", "312", "231", "123"]
    assert body["simple"] is False


def test_route_domain_errors(client) -> None:
    same = client.post("/route", json={
        "delta": 4, "dee": 4, "source": "1234", "target": "1234",
        "mode": "shortest",
    })
    assert same.status_code == 422

    bad_vertex = client.post("/route", json={
        "delta": 4, "dee": 4, "source": "1224", "target": "2134",
        "mode": "shortest",
    })
    assert bad_vertex.status_code == 422

    out_of_regime = client.post("/route", json={
        "delta": 4, "dee": 4, "r": 2, "source": "1234", "target": "2134",
        "mode": "restricted",
    })
    assert out_of_regime.status_code == 422

    bad_mode = client.post("/route", json={
        "delta": 4, "dee": 4, "source": "1234", "target": "2134",
        "mode": "scenic",
    })
    assert bad_mode.status_code == 422


# ---------------------------------------------------------------------------
# /container


def test_container_frozen_example(client) -> None:
    resp = client.post("/container", json={
        "delta": 5, "dee": 4, "source": "1325", "target": "1234",
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["width"] == 5
    assert body["length"] == 6
    assert body["max_allowed"] == 6
    assert body["disjoint"] is True
    assert body["paths"] == [
        ["1325", "2135", "4213", "3421", "1342", "2134", "1234"],
        ["1325", "3125", "4312", "1432", "3142", "2314", "1234"],
        ["1325", "4132", "3412", "2341", "1234"],
        ["1325", "5132", "4513", "3451", "2345", "1234"],
        ["1325", "6132", "4613", "3461", "2346", "1234"],
    ]
    assert body["lengths"] == [6, 6, 4, 5, 5]
    assert [leg["symbol"] for leg in body["legs"]] == [2, 3, 4, 5, 6]
    assert [leg["predicted_length"] for leg in body["legs"]] == [4, 4, 2, 3, 3]


def test_container_rejects_restricted_instance(client) -> None:
    resp = client.post("/container", json={
        "delta": 4, "dee": 4, "r": 1, "source": "1234", "target": "2134",
    })
    assert resp.status_code == 422


# ---------------------------------------------------------------------------
# /verify


def test_verify_endpoint_witness(client) -> None:
    resp = client.post("/verify", json={"suite": "witness", "delta": 4, "dee": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["suite"] == "witness"
    assert body["passed"] is True
    assert body["summary"] == {"records": 1, "failed": 0}
    (rec,) = body["records"]
    assert rec["check"] == "extremal-pair-forces-length-dee-plus-2"
    assert rec["pass"] is True


def test_verify_rejects_partial_instance(client) -> None:
    resp = client.post("/verify", json={"suite": "witness", "delta": 4})
    assert resp.status_code == 422

    unknown = client.post("/verify", json={"suite": "nonsense"})
    assert unknown.status_code == 422
