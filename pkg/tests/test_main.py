import inspect
import math

from app.routers import geometry
from tests.conftest import matrix_doc, vector_doc

API = "/api/v1/geometry"

def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert "verify" in response.json()["commands"]

def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"

def test_geometry_health_lists_services(client):
    data = client.get(f"{API}/health").json()
    assert {service["service"] for service in data["services"]} == {
        "hilbert", "projective", "probability", "verification", "command"
    }

def test_info(client):
    data = client.get(f"{API}/info").json()
    assert data["capabilities"] == ["dist", "prob", "seq-prob", "project", "geodesic", "verify"]
    assert data["tolerances"]["membership_tol"] == 1e-8

def test_dist(client):
    response = client.post(f"{API}/dist", json={"state": vector_doc(1, 0), "other": vector_doc(1, 1)})
    assert response.status_code == 200
    body = response.json()
    assert body["success"] is True
    assert body["data"]["distance_radians"] == 0.7853981633974483

def test_dist_needs_one_target(client):
    response = client.post(f"{API}/dist", json={"state": vector_doc(1, 0)})
    assert response.status_code == 422

def test_dist_dimension_mismatch(client):
    response = client.post(f"{API}/dist", json={"state": vector_doc(1, 0), "other": vector_doc(1, 0, 0)})
    assert response.status_code == 422
    assert response.json()["detail"]["error_code"] == "dimension_mismatch"

def test_prob(client):
    response = client.post(
        f"{API}/prob", json={"state": vector_doc(1, 1), "event": matrix_doc([[1, 0], [0, 0]]), "tol_report": True}
    )
    data = response.json()["data"]
    assert abs(data["geometric"] - 0.5) <= 1e-15
    assert "tolerances" in data

def test_invalid_event(client):
    response = client.post(f"{API}/prob", json={"state": vector_doc(1, 0), "event": matrix_doc([[1, 1], [0, 0]])})
    assert response.status_code == 422
    assert response.json()["detail"]["error_code"] == "invalid_event"

def test_seq_prob(client):
    events = [matrix_doc([[1, 0], [0, 0]]), {"frame": [vector_doc(0, 1)]}]
    data = client.post(f"{API}/seq-prob", json={"state": vector_doc(1, 1), "events": events}).json()["data"]
    assert data["total"] == 0.0
    assert data["orthogonal_at_step"] == 2

def test_project_zero_event(client):
    response = client.post(f"{API}/project", json={"state": vector_doc(1, 0), "event": matrix_doc([[0, 0], [0, 0]])})
    assert response.status_code == 422
    assert response.json()["detail"]["error_code"] == "empty_subspace"

def test_project(client):
    data = client.post(
        f"{API}/project", json={"state": vector_doc(0, 1), "event": {"frame": [vector_doc(1, 0)]}}
    ).json()["data"]
    assert data == {"whole_subspace": True, "distance": math.pi / 2}

def test_geodesic(client):
    data = client.post(
        f"{API}/geodesic", json={"start": vector_doc(1, 0), "end": vector_doc(0, 1), "steps": 4}
    ).json()["data"]
    assert data["unique"] is False
    assert len(data["samples"]) == 5

def test_verify(client):
    response = client.post(f"{API}/verify", json={"suite": "born", "trials": 4, "dims": [2, 3], "seed": 1})
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["suite"] == "born"
    assert data["passed"] is True

def test_verify_rejects_zero_trials(client):
    assert client.post(f"{API}/verify", json={"trials": 0}).status_code == 422

def test_geometry_handlers_are_coroutines():
    handlers = [route.endpoint for route in geometry.router.routes]
    assert handlers
    assert all(inspect.iscoroutinefunction(handler) for handler in handlers)
