import json
import math

import numpy as np
import pytest
from fastapi.testclient import TestClient

from app.models import RandomSource
from app.services.service_factory import ServiceFactory
from main import app

SQRT_HALF = 1 / math.sqrt(2)

@pytest.fixture(autouse=True)
def fresh_services():
    """Every test starts from freshly constructed services"""
    ServiceFactory.clear_cache()
    yield
    ServiceFactory.clear_cache()

@pytest.fixture
def hilbert():
    return ServiceFactory.get_service("hilbert")

@pytest.fixture
def geometry():
    return ServiceFactory.get_service("projective")

@pytest.fixture
def probability():
    return ServiceFactory.get_service("probability")

@pytest.fixture
def verification():
    return ServiceFactory.get_service("verification")

@pytest.fixture
def command():
    return ServiceFactory.get_service("command")

@pytest.fixture
def rng():
    return RandomSource(20240607)

@pytest.fixture
def client():
    return TestClient(app)

@pytest.fixture
def diag_subspace(geometry):
    """Subspace of the coordinate projection with the given diagonal"""
    def build(*diagonal):
        return geometry.subspace_from_event(np.diag(np.asarray(diagonal, dtype=np.complex128)))
    return build

def vector_doc(*values):
    """VectorDocument payload for the given complex amplitudes"""
    return {"dim": len(values), "entries": [[complex(v).real, complex(v).imag] for v in values]}

def matrix_doc(matrix):
    matrix = np.asarray(matrix, dtype=np.complex128)
    return {"matrix": [[[v.real, v.imag] for v in row] for row in matrix]}

@pytest.fixture
def write_document(tmp_path):
    """Write a JSON document and return its path"""
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return write
