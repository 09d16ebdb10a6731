import json
import math

import numpy as np
import pytest

from app.core.exceptions import EmptySubspaceError, VerificationInputError
from app.models import Event, Observation, RandomSource, build_report

class TestRandomSource:
    def test_same_seed_same_stream(self):
        np.testing.assert_array_equal(RandomSource(42).complex_gaussian(6), RandomSource(42).complex_gaussian(6))

    def test_children_depend_only_on_keys(self):
        parent = RandomSource(9)
        parent.complex_gaussian(100)
        assert parent.child(3, 1).seed == RandomSource(9).child(3, 1).seed
        assert parent.child(3, 1).seed != parent.child(3, 2).seed

    def test_seed_must_be_unsigned_64_bit(self):
        with pytest.raises(VerificationInputError):
            RandomSource(-1)
        with pytest.raises(VerificationInputError):
            RandomSource(2 ** 64)

    def test_integers_are_inclusive(self):
        source = RandomSource(5)
        draws = {source.integers(0, 2) for _ in range(200)}
        assert draws == {0, 1, 2}

class TestGenerators:
    def test_random_unit_vector(self, verification):
        for seed in range(10):
            psi = verification.random_unit_vector(RandomSource(seed), 2)
            assert abs(np.linalg.norm(psi.entries) - 1) <= 1e-12

    def test_random_unit_vector_is_reproducible(self, verification):
        first = verification.random_unit_vector(RandomSource(42), 4)
        second = verification.random_unit_vector(RandomSource(42), 4)
        np.testing.assert_array_equal(first.entries, second.entries)

    def test_random_unit_vector_needs_dimension_two(self, verification, rng):
        with pytest.raises(VerificationInputError):
            verification.random_unit_vector(rng, 1)

    @pytest.mark.parametrize("dim", [2, 4, 8])
    def test_haar_moment(self, verification, dim):
        samples = 100_000
        variance = (dim - 1) / (dim ** 2 * (dim + 1))
        sigma = math.sqrt(variance / samples)
        moment = verification.haar_moment(RandomSource(dim), dim, samples)
        assert abs(moment - 1 / dim) <= 4 * sigma

    def test_random_event_extremes(self, verification, rng):
        assert np.all(verification.random_event(rng, 3, 0).matrix == 0)
        np.testing.assert_array_equal(verification.random_event(rng, 3, 3).matrix, np.eye(3))

    def test_random_subspace_through_contains_the_points(self, verification, geometry, rng):
        core = [verification.random_point(rng, 5), verification.random_point(rng, 5)]
        subspace = verification.random_subspace_through(rng, core, 3)
        assert subspace.event.rank == 3
        assert all(geometry.point_in_subspace(point, subspace) for point in core)
        with pytest.raises(VerificationInputError):
            verification.random_subspace_through(rng, core, 1)

    def test_random_event_is_a_projection(self, verification):
        event = verification.random_event(RandomSource(11), 2, 1)
        validated = Event.from_matrix(event.matrix)
        assert validated.rank == 1

    def test_random_event_rank_range(self, verification, rng):
        with pytest.raises(VerificationInputError):
            verification.random_event(rng, 3, 4)
        with pytest.raises(VerificationInputError):
            verification.random_event(rng, 3, -1)

    def test_points_in_and_orthogonal_to_subspace(self, geometry, verification, rng):
        subspace = verification.random_subspace(rng, 4, 2)
        inside = verification.random_point_in(rng, subspace)
        outside = verification.random_point_orthogonal_to(rng, subspace)
        assert geometry.point_in_subspace(inside, subspace)
        assert geometry.project_onto_subspace(outside, subspace).is_whole_subspace

    def test_no_points_in_empty_sets(self, geometry, verification, rng):
        with pytest.raises(EmptySubspaceError):
            verification.random_point_in(rng, geometry.empty_subspace(3))
        with pytest.raises(EmptySubspaceError):
            verification.random_point_orthogonal_to(rng, geometry.whole_space(3))

class TestInfimumOracle:
    def test_point_inside_subspace(self, geometry, verification, rng, diag_subspace):
        plane = diag_subspace(1, 1, 0, 0)
        x = geometry.point([0.3, 1j, 0, 0])
        assert verification.infimum_oracle(x, plane, rng, samples=50) <= 1e-7

    def test_rank_one_subspace_is_exact(self, geometry, verification, rng, diag_subspace):
        line = diag_subspace(0, 1, 0)
        x = geometry.point([1, 2, 3j])
        expected = geometry.fs_distance(x, geometry.point([0, 1, 0]))
        assert verification.infimum_oracle(x, line, rng, samples=10) == pytest.approx(expected, abs=1e-12)

    def test_sampling_then_refinement(self, geometry, verification, rng, diag_subspace):
        plane = diag_subspace(1, 1, 0)
        x = geometry.point([1, 1j, 1])
        exact = geometry.distance_to_subspace(x, plane)
        sampled = verification.infimum_oracle(x, plane, rng, samples=10_000, refine=False)
        refined = verification.infimum_oracle(x, plane, rng, samples=10_000)
        assert exact - 1e-12 <= sampled <= exact + 1e-3
        assert abs(refined - exact) <= 1e-7

    def test_oracle_sandwich(self, geometry, verification, rng):
        for dim in (2, 3, 4, 8):
            for _ in range(10):
                subspace = verification.random_subspace(rng, dim, rng.integers(1, dim))
                x = verification.random_point(rng, dim)
                exact = geometry.distance_to_subspace(x, subspace)
                oracle = verification.infimum_oracle(x, subspace, rng, samples=2_000)
                assert exact - 1e-7 <= oracle <= exact + 1e-6

    def test_orthogonal_point_sees_pi_over_two(self, verification, rng):
        subspace = verification.random_subspace(rng, 4, 2)
        x = verification.random_point_orthogonal_to(rng, subspace)
        assert verification.infimum_oracle(x, subspace, rng, samples=500) == pytest.approx(math.pi / 2, abs=1e-9)

    def test_empty_subspace(self, geometry, verification, rng):
        with pytest.raises(EmptySubspaceError):
            verification.infimum_oracle(geometry.point([1, 0]), geometry.empty_subspace(2), rng)

    def test_needs_samples(self, geometry, verification, rng):
        with pytest.raises(VerificationInputError):
            verification.infimum_oracle(geometry.point([1, 0]), geometry.whole_space(2), rng, samples=0)

def assert_consistent(report):
    """Within every check, failures are recorded iff the error exceeds the tolerance"""
    for summary in report.checks.values():
        assert (summary.failures == 0) == (summary.max_abs_error <= summary.tolerance)
    assert report.passed == (not report.failures)

class TestSuites:
    def test_projection_theorem_single_trial(self, verification):
        report = verification.verify_projection_theorem(RandomSource(0), [2], 1)
        assert report.passed
        assert report.trials == 1
        assert_consistent(report)

    def test_projection_theorem_covers_both_branches(self, verification):
        report = verification.verify_projection_theorem(RandomSource(1), [2, 3, 4], 6, samples=2_000)
        assert report.passed, report.failures
        assert report.checks["nearest_point_membership"].count > 0
        assert report.checks["orthogonal_samples"].count > 0
        assert report.max_abs_error <= 1e-9
        assert_consistent(report)

    def test_trials_must_be_positive(self, verification):
        with pytest.raises(VerificationInputError):
            verification.verify_projection_theorem(RandomSource(0), [2], 0)
        with pytest.raises(VerificationInputError):
            verification.verify_born_rule(RandomSource(0), [1], 3)

    def test_probability_laws(self, verification):
        report = verification.verify_probability_laws(RandomSource(7), [2, 3, 8], 20, 8)
        assert report.passed, report.failures
        assert report.max_abs_error <= 1e-9
        assert report.checks["short_circuit_geometric"].max_abs_error == 0.0
        assert report.checks["short_circuit_oracle"].max_abs_error == 0.0
        assert report.checks["noncommutativity_oracle"].count == 1
        assert_consistent(report)

    def test_single_event_chains_only(self, verification):
        report = verification.verify_probability_laws(RandomSource(7), [2, 3], 5, 1)
        assert report.passed
        assert "conditional" not in report.checks
        assert "short_circuit_geometric" not in report.checks

    def test_max_chain_must_be_positive(self, verification):
        with pytest.raises(VerificationInputError):
            verification.verify_probability_laws(RandomSource(0), [2], 1, 0)

    def test_born_rule_and_invariance(self, verification):
        report = verification.verify_born_rule(RandomSource(3), [2, 16, 64], 30)
        assert report.passed, report.failures
        assert report.tolerance == 1e-10
        assert report.max_abs_error <= 1e-10
        assert set(report.checks) == {
            "born_rule",
            "scale_invariance_born",
            "scale_invariance_distance",
            "scale_invariance_event",
        }

    def test_geometry(self, verification):
        report = verification.verify_geometry(RandomSource(4), [2, 3, 5], 8)
        assert report.passed, report.failures
        assert report.checks["triangle_inequality"].count == 24
        assert report.checks["meet_associative"].count == 24
        assert report.checks["join_associative"].failures == 0
        assert_consistent(report)

    def test_reports_do_not_depend_on_worker_count(self, verification):
        serial = verification.verify_probability_laws(RandomSource(11), [2, 4], 6, 4, workers=1)
        threaded = verification.verify_probability_laws(RandomSource(11), [2, 4], 6, 4, workers=3)
        assert serial.to_dict(include_elapsed=False) == threaded.to_dict(include_elapsed=False)

    def test_run_suites(self, verification):
        reports = verification.run_suites("all", RandomSource(0), [2, 3], 2, 3)
        assert [report.suite for report in reports] == ["projection", "probability", "born", "geometry"]
        assert all(report.passed for report in reports)
        with pytest.raises(VerificationInputError):
            verification.run_suites("everything", RandomSource(0), [2], 1, 1)

    @pytest.mark.slow
    def test_probability_acceptance_run(self, verification):
        report = verification.verify_probability_laws(RandomSource(7), [2, 3, 8], 1000, 8)
        assert report.passed
        assert report.max_abs_error <= 1e-9

    @pytest.mark.slow
    def test_projection_acceptance_run(self, verification):
        report = verification.verify_projection_theorem(RandomSource(0), [2, 3, 4, 8], 1000)
        assert report.passed

class TestReport:
    def test_failures_follow_each_check_tolerance(self):
        observations = [
            Observation("tight", "a", 1.0, 1.0 + 1e-12, 1e-9),
            Observation("tight", "b", 1.0, 1.1, 1e-9),
            Observation("loose", "c", 0.0, 1e-7, 1e-6),
        ]
        report = build_report("demo", 5, 1, 1e-9, observations, 0.5)
        assert [failure.case for failure in report.failures] == ["tight: b"]
        assert report.max_abs_error == pytest.approx(0.1)
        assert report.checks["loose"].failures == 0
        assert report.checks["tight"].count == 2
        assert_consistent(report)

    def test_nan_is_a_failure(self):
        report = build_report("demo", 0, 1, 1e-9, [Observation("x", "nan", 0.0, float("nan"), 1e-9)], 0.0)
        assert not report.passed
        assert report.max_abs_error == float("inf")

    def test_to_dict(self):
        report = build_report("demo", 5, 2, 1e-9, [Observation("x", "a", 0.0, 0.0, 1e-9)], 1.25)
        payload = report.to_dict()
        assert payload["elapsed_seconds"] == 1.25
        assert payload["passed"] is True
        assert "elapsed_seconds" not in report.to_dict(include_elapsed=False)

    def test_non_finite_errors_serialize_as_null(self):
        observations = [Observation("x", "nan", 0.0, float("nan"), 1e-9), Observation("x", "ok", 0.0, 0.0, 1e-9)]
        payload = build_report("demo", 0, 1, 1e-9, observations, 0.0).to_dict()
        assert payload["max_abs_error"] is None
        assert payload["checks"]["x"]["max_abs_error"] is None
        assert payload["failures"][0]["got"] is None
        json.dumps(payload, allow_nan=False)
