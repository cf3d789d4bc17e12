import pytest
from fastapi.testclient import TestClient

from app.main import app


@pytest.fixture
def client(clean_cache):
    return TestClient(app)


def test_dim(client):
    res = client.get("/algebra/dim", params={"n": 3})
    assert res.status_code == 200
    assert res.json()["dim"] == 30


def test_query_validation(client):
    assert client.get("/algebra/dim", params={"n": 0}).status_code == 422


def test_guard_maps_to_413(client):
    res = client.get("/tensor/faithful", params={"n": 5})
    assert res.status_code == 413


def test_syntax_error_maps_to_400(client):
    res = client.get("/algebra/eval", params={"n": 2, "expr": "T1 +"})
    assert res.status_code == 400
    assert "position" in res.json()["detail"]


def test_huge_exponent_is_rejected(client):
    res = client.get("/algebra/eval", params={"n": 2, "expr": "T1^999999999"})
    assert res.status_code == 400
    assert "exponent" in res.json()["detail"]


def test_eval_and_form(client):
    res = client.get("/algebra/eval", params={"n": 2, "expr": "T1*T1"})
    assert res.json()["result"] == "1 + (u-1)*E{1,2} + (u-1)*E{1,2}*T1"
    res = client.get("/algebra/form", params={"n": 2, "left": "E1", "right": "E1"})
    assert res.json()["form"] == "1"


def test_gram_rejects_bad_rationals(client):
    assert client.get("/algebra/gram", params={"n": 2, "at": "1/0"}).status_code == 400
    assert client.get("/algebra/gram", params={"n": 2}).json()["pass"]


def test_classification_is_cached(client, clean_cache):
    res = client.get("/specht/classification", params={"n": 2})
    assert res.json()["dims"] == [1, 1, 1, 1]
    assert clean_cache.get("specht:2:default") is not None


def test_module_and_labels(client):
    assert client.get("/specht/module", params={"n": 3, "label": 3}).json()["dim"] == 3
    assert client.get("/specht/module", params={"n": 3, "label": 99}).status_code == 400
    assert len(client.get("/specht/labels", params={"n": 3}).json()["labels"]) == 8


def test_act(client):
    res = client.post("/tensor/act", json={"n": 2, "expr": "E1", "tensor": [[1, 1], [2, 2]]})
    assert res.status_code == 200
    assert res.json()["terms"] == []
    bad = client.post("/tensor/act", json={"n": 2, "expr": "E1", "tensor": [[1, 1, 1], [2, 2]]})
    assert bad.status_code == 422


def test_quotient(client):
    assert client.get("/tensor/quotient", params={"n": 2}).json()["pass"]


def test_health(client):
    body = client.get("/health/app").json()
    assert set(body) == {"scheduler_running", "cached_reports", "structure_constants"}
