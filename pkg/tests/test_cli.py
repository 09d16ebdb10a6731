import json
import math

import pytest
from click.testing import CliRunner

from app.cli import cli
from app.models import Observation, build_report
from app.schemas import VectorDocument
from tests.conftest import matrix_doc, vector_doc

@pytest.fixture
def runner():
    return CliRunner()

@pytest.fixture
def invoke(runner):
    def run(*args):
        return runner.invoke(cli, [str(arg) for arg in args])
    return run

@pytest.fixture
def docs(write_document):
    """Document files used across the commands"""
    return {
        "e1": write_document("e1.json", vector_doc(1, 0)),
        "e2": write_document("e2.json", vector_doc(0, 1)),
        "i_e1": write_document("i_e1.json", vector_doc(1j, 0)),
        "diagonal": write_document("diagonal.json", vector_doc(1, 1)),
        "e1_c3": write_document("e1_c3.json", vector_doc(1, 0, 0)),
        "first": write_document("first.json", matrix_doc([[1, 0], [0, 0]])),
        "second": write_document("second.json", {"frame": [vector_doc(0, 1)]}),
        "zero": write_document("zero.json", matrix_doc([[0, 0], [0, 0]])),
        "broken": write_document("broken.json", matrix_doc([[1, 0], [0, 0.5]])),
    }

def payload(result):
    return json.loads(result.stdout)

class TestDist:
    def test_orthogonal_states(self, invoke, docs):
        result = invoke("dist", docs["e1"], docs["e2"])
        assert result.exit_code == 0
        assert payload(result) == {"absolute_inner": 0.0, "distance_radians": math.pi / 2}

    def test_phase_invariance_end_to_end(self, invoke, docs):
        assert payload(invoke("dist", docs["e1"], docs["i_e1"]))["distance_radians"] == 0.0

    def test_quarter_pi_to_double_precision(self, invoke, docs):
        result = invoke("dist", docs["e1"], docs["diagonal"])
        assert '"distance_radians": 0.7853981633974483' in result.stdout

    def test_distance_to_event(self, invoke, docs):
        data = payload(invoke("dist", docs["diagonal"], docs["first"]))
        assert data["distance_radians"] == pytest.approx(math.pi / 4, abs=1e-15)
        assert data["projection_norm"] == pytest.approx(1 / math.sqrt(2))

    def test_dimension_mismatch_exit_code(self, invoke, docs):
        result = invoke("dist", docs["e1"], docs["e1_c3"])
        assert result.exit_code == 3
        assert result.stdout == ""
        assert "error" in result.stderr

    def test_malformed_json(self, invoke, docs, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert invoke("dist", docs["e1"], path).exit_code == 2

    def test_non_utf8_document(self, invoke, docs, tmp_path):
        path = tmp_path / "latin.json"
        path.write_bytes(b'{"dim": 2, "entries": [[1, 0], [0, 0]]} \xff\xfe')
        result = invoke("dist", path, docs["e1"])
        assert result.exit_code == 2
        assert "not UTF-8" in result.stderr

    def test_invalid_vector_document(self, invoke, docs, write_document):
        short = write_document("short.json", {"dim": 3, "entries": [[1, 0], [0, 0]]})
        assert invoke("dist", docs["e1"], short).exit_code == 2

    def test_tolerance_report(self, invoke, docs):
        data = payload(invoke("--tol-report", "dist", docs["e1"], docs["e2"]))
        assert data["tolerances"]["orth_tol"] == 1e-9
        assert data["tolerances"]["op_tol"] == 1e-9

class TestProb:
    def test_certain_event(self, invoke, docs):
        assert payload(invoke("prob", docs["e1"], docs["first"])) == {"abs_diff": 0.0, "geometric": 1.0, "oracle": 1.0}

    def test_impossible_event(self, invoke, docs):
        data = payload(invoke("prob", docs["e2"], docs["first"]))
        assert data["geometric"] == 0.0
        assert data["oracle"] == 0.0

    def test_half(self, invoke, docs):
        data = payload(invoke("prob", docs["diagonal"], docs["first"]))
        assert data["geometric"] == pytest.approx(0.5, abs=1e-15)
        assert data["oracle"] == pytest.approx(0.5, abs=1e-15)
        assert data["abs_diff"] <= 1e-15

    def test_invalid_event_exit_code(self, invoke, docs):
        assert invoke("prob", docs["e1"], docs["broken"]).exit_code == 4

    def test_vector_given_as_event(self, invoke, docs):
        assert invoke("prob", docs["e1"], docs["e2"]).exit_code == 2

class TestSeqProb:
    def test_empty_chain(self, invoke, docs):
        data = payload(invoke("seq-prob", docs["e1"]))
        assert data["steps"] == []
        assert data["total"] == 1.0
        assert data["oracle_total"] == 1.0

    def test_collapse_chain(self, invoke, docs):
        data = payload(invoke("seq-prob", docs["diagonal"], "--event", docs["first"], "--event", docs["second"]))
        assert data["total"] == 0.0
        assert data["oracle_total"] == 0.0
        assert data["orthogonal_at_step"] == 2
        assert data["steps"][0]["factor"] == pytest.approx(0.5)

    def test_single_event_matches_prob(self, invoke, docs):
        chained = payload(invoke("seq-prob", docs["diagonal"], "--event", docs["first"]))
        single = payload(invoke("prob", docs["diagonal"], docs["first"]))
        assert chained["total"] == single["geometric"]
        assert "orthogonal_at_step" not in chained

class TestProject:
    def test_point_in_subspace(self, invoke, docs):
        data = payload(invoke("project", docs["i_e1"], docs["first"]))
        assert data["distance"] == 0.0
        assert data["nearest_point"] == {"dim": 2, "entries": [[1.0, 0.0], [0.0, 0.0]]}

    def test_orthogonal_branch(self, invoke, docs):
        assert payload(invoke("project", docs["e2"], docs["first"])) == {
            "whole_subspace": True,
            "distance": 1.5707963267948966,
        }

    def test_quarter_pi_example(self, invoke, docs, geometry):
        data = payload(invoke("project", docs["diagonal"], docs["first"]))
        nearest = geometry.pi3_project(VectorDocument.model_validate(data["nearest_point"]).to_vector())
        assert nearest.equals(geometry.point([1, 0]), 1e-12)
        assert data["distance"] == pytest.approx(math.pi / 4, abs=1e-15)

    def test_emitted_point_round_trips(self, invoke, docs, geometry, write_document):
        state = write_document("state.json", vector_doc(0.3 - 0.2j, 1.7j, -0.4))
        event = write_document("plane.json", {"frame": [vector_doc(1, 1j, 0), vector_doc(0, 0, 1)]})
        emitted = payload(invoke("project", state, event))["nearest_point"]
        point = geometry.pi3_project(VectorDocument.model_validate(emitted).to_vector())
        reparsed = VectorDocument.from_point(point).model_dump(mode="json")
        assert max(abs(a - b) for pa, pb in zip(emitted["entries"], reparsed["entries"]) for a, b in zip(pa, pb)) <= 1e-12

    def test_zero_event_cites_hypothesis(self, invoke, docs):
        result = invoke("project", docs["e1"], docs["zero"])
        assert result.exit_code == 5
        assert "non-empty" in result.stderr

class TestGeodesic:
    def test_identical_endpoints(self, invoke, docs):
        data = payload(invoke("geodesic", docs["e1"], docs["i_e1"]))
        assert data["length"] == 0.0
        assert len(data["samples"]) == 1

    def test_orthogonal_endpoints(self, invoke, docs):
        data = payload(invoke("geodesic", docs["e1"], docs["e2"]))
        assert data["length"] == math.pi / 2
        assert data["unique"] is False
        assert len(data["samples"]) == 17

    def test_midpoint(self, invoke, docs, geometry):
        data = payload(invoke("geodesic", docs["e1"], docs["diagonal"], "--steps", 2))
        points = [geometry.pi3_project(VectorDocument.model_validate(s).to_vector()) for s in data["samples"]]
        assert len(points) == 3
        assert geometry.fs_distance(points[0], points[1]) == pytest.approx(math.pi / 8, abs=1e-12)
        assert geometry.fs_distance(points[1], points[2]) == pytest.approx(math.pi / 8, abs=1e-12)

class TestVerify:
    def strip_timing(self, data):
        data.pop("elapsed_seconds", None)
        for report in data.get("reports", []):
            report.pop("elapsed_seconds", None)
        return data

    def test_single_suite(self, invoke):
        result = invoke("verify", "--suite", "probability", "--trials", 3, "--dims", "2,3", "--max-chain", 4)
        assert result.exit_code == 0
        data = payload(result)
        assert data["suite"] == "probability"
        assert data["passed"] is True

    def test_zero_trials(self, invoke):
        assert invoke("verify", "--trials", 0).exit_code == 2

    def test_bad_dims(self, invoke):
        assert invoke("verify", "--dims", "2,x", "--trials", 1).exit_code == 2
        assert invoke("verify", "--dims", "1", "--trials", 1).exit_code == 2

    def test_unknown_suite(self, invoke):
        assert invoke("verify", "--suite", "everything").exit_code == 2

    def test_repeated_runs_are_identical(self, invoke):
        args = ("verify", "--suite", "all", "--seed", 5, "--trials", 2, "--dims", "2,3", "--max-chain", 3)
        first, second = payload(invoke(*args)), payload(invoke(*args))
        assert self.strip_timing(first) == self.strip_timing(second)
        assert [report["suite"] for report in first["reports"]] == ["projection", "probability", "born", "geometry"]

    def test_failures_exit_one(self, invoke, command, monkeypatch):
        monkeypatch.setattr(command, "verify", lambda **kwargs: {"suite": "all", "passed": False})
        result = invoke("verify", "--trials", 1)
        assert result.exit_code == 1
        assert payload(result)["passed"] is False

    def test_non_finite_errors_stay_strict_json(self, invoke, command, monkeypatch):
        broken = build_report("born", 0, 1, 1e-10, [Observation("born_rule", "dim=2", 0.5, float("nan"), 1e-10)], 0.0)
        monkeypatch.setattr(command.verification, "run_suites", lambda *args: [broken])
        result = invoke("verify", "--suite", "born", "--trials", 1)
        assert result.exit_code == 1

        def reject(token):
            raise ValueError(token)

        data = json.loads(result.stdout, parse_constant=reject)
        assert data["max_abs_error"] is None
        assert data["passed"] is False

    @pytest.mark.slow
    def test_acceptance_run(self, invoke):
        result = invoke("verify", "--suite", "all", "--seed", 0, "--trials", 100)
        assert result.exit_code == 0
        assert payload(result)["max_abs_error"] <= 1e-9
