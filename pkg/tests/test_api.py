"""
HTTP API
"""
import json

import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.schemas import GraphFile
from tests import corpus


@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client


def graph_payload(name: str) -> dict:
    return json.loads(GraphFile.from_matrix(corpus.CORPUS[name]()).model_dump_json())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_fc(client):
    response = client.post("/api/fc", params={"node": "a"}, json=graph_payload("g6"))
    assert response.status_code == 200
    body = response.json()
    assert body["kind"] == "Visible"
    assert body["case"] == "D"
    assert body["J"] == ["a", "b"]


def test_classify(client):
    response = client.post("/api/classify", params={"subset": "a,b"}, json=graph_payload("affine_g2"))
    assert response.status_code == 200
    assert response.json()["components"][0]["type"] == "I2(6)"


def test_rigidity(client):
    response = client.post("/api/rigidity", json=graph_payload("affine_g2"))
    assert response.json()["verdict"] == "ReflectionsDetermined"


def test_analyze(client):
    response = client.post("/api/analyze", json=graph_payload("g5"))
    assert response.status_code == 200
    body = response.json()
    assert [r["case"] for r in body["results"]] == ["B", "C", "C", "C"]
    assert body["odd_components"][1]["foci"] == [["a", "b"]]


def test_oracle_fc(client):
    response = client.post("/api/oracle-fc", params={"node": "b", "max_length": 8}, json=graph_payload("i2_6"))
    assert response.status_code == 200
    assert response.json()["status"] == "MATCH"
    assert response.json()["oracle_size"] == 12


def test_oracle_fc_element_cap(client):
    response = client.post(
        "/api/oracle-fc",
        params={"node": "a", "max_length": 10, "element_cap": 30},
        json=graph_payload("affine_a2"),
    )
    assert response.status_code == 413
    detail = response.json()["detail"]
    assert detail["partial"]["status"] == "PARTIAL"


def test_export_dot(client):
    response = client.post("/api/export-dot", json=graph_payload("i2_6"))
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/vnd.graphviz")
    assert '"a" -- "b" [label="6", style=dashed];' in response.text


def test_domain_errors_map_to_400(client):
    response = client.post("/api/fc", params={"node": "z"}, json=graph_payload("g5"))
    assert response.status_code == 400
    assert "Unknown node" in response.json()["detail"]

    payload = {"nodes": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 7}]}
    response = client.post("/api/oracle-fc", params={"node": "a"}, json=payload)
    assert response.status_code == 400


def test_invalid_graph_is_rejected(client):
    response = client.post("/api/fc", params={"node": "a"}, json={"nodes": ["a", "a"], "edges": []})
    assert response.status_code == 422
