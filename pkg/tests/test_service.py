import pytest
from fastapi.testclient import TestClient

from spincalc.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_presets(client):
    data = client.get("/presets").json()
    names = [row["name"] for row in data["presets"]]
    assert names == sorted(names)
    assert {"A", "C", "S", "U", "V", "E6"} <= set(names)


def test_enumerate(client):
    resp = client.post("/enumerate", json={"genus": 3, "r": 2})
    assert resp.status_code == 200
    assert resp.json() == {"genus": 3, "r": 2, "total": 64, "even": 36, "odd": 28}
    resp = client.post("/enumerate", json={"genus": 1, "r": 3})
    body = resp.json()
    assert body["total"] == 9 and body["even"] is None


def test_enumerate_validation(client):
    assert client.post("/enumerate", json={"genus": 0, "r": 2}).status_code == 422
    # r^(2g) above the enumeration bound surfaces as a 422
    assert client.post("/enumerate", json={"genus": 12, "r": 4}).status_code == 422


def test_verify_main2(client):
    resp = client.post("/verify/main2", json={"genus": 3, "parity": "odd"})
    body = resp.json()
    assert body["schema"] == "spincalc-report/1"
    assert body["verdict"] == "pass"
    assert body["order_computed"] == 51840
    assert body["inputs"]["preset"] == "C3"
    assert client.post("/verify/main2", json={"genus": 3, "parity": "even"}).status_code == 422
    assert client.post("/verify/main2", json={"genus": 3, "parity": "weird"}).status_code == 422


def test_verify_main3(client):
    body = client.post("/verify/main3", json={}).json()
    assert body["verdict"] == "pass"
    assert body["checks"]["orbit_is_singleton"]


def test_origami(client):
    body = client.post("/origami", json={"preset": "E6"}).json()
    assert body["origami"]["schema"] == "spincalc-origami/1"
    assert body["origami"]["squares"] == 5
    assert body["stratum"] == [4]
    assert body["spin_parity"] == "odd"
    body = client.post("/origami", json={"preset": "A", "genus": 5}).json()
    assert body["spin_parity"] is None
    assert "order" in body["spin_parity_error"]
    assert client.post("/origami", json={"preset": "Z", "genus": 3}).status_code == 422


def test_graph(client):
    body = client.post("/graph", json={"kind": "CG1plus", "genus": 3,
                                       "parity": "odd"}).json()
    assert body["schema"] == "spincalc-graph/1"
    assert body["connected"] is True
    assert body["vertex_count"] == 27
    assert body["dot"] is None
    body = client.post("/graph", json={"kind": "CG1", "genus": 2, "parity": "odd",
                                       "dot": True}).json()
    assert body["edge_count"] == 0
    assert body["dot"].startswith("graph ")
    resp = client.post("/graph", json={"kind": "CG0", "genus": 3, "parity": "odd",
                                       "max_vertices": 5})
    assert resp.status_code == 422


def test_determinism(client):
    one = client.post("/verify/main2", json={"genus": 3, "parity": "odd"}).content
    two = client.post("/verify/main2", json={"genus": 3, "parity": "odd"}).content
    assert one == two
