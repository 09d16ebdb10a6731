"""
Seeded verification harness.

Random states and events are drawn from a RandomSource; every trial gets a
child stream keyed by (seed, dim, trial), so reports do not depend on the
number of worker threads. Each suite compares the geometric computation
with an independent derivation and records one Observation per compared
quantity.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.optimize

from app.core.config import Settings
from app.core.exceptions import EmptySubspaceError, VerificationInputError, require_same_dim
from app.models.hilbert import Event, HilbertVector, UnitVector
from app.models.probability import EventChain
from app.models.projective import Geodesic, ProjectivePoint, ProjectiveSubspace
from app.models.random_source import RandomSource
from app.models.report import Observation, VerificationReport, build_report
from app.services.base_service import BaseGeometryService
from app.services.hilbert_service import HilbertService
from app.services.probability_service import ProbabilityService
from app.services.projective_service import HALF_PI, ProjectiveGeometryService

logger = logging.getLogger(__name__)

SUITES = ("projection", "probability", "born", "geometry")

TrialFn = Callable[[RandomSource, int, int], List[Observation]]

class VerificationService(BaseGeometryService):
    """
    Random generators, the sampling infimum oracle and the verification suites
    """

    def __init__(
        self,
        config: Optional[Settings] = None,
        hilbert: Optional[HilbertService] = None,
        geometry: Optional[ProjectiveGeometryService] = None,
        probability: Optional[ProbabilityService] = None,
    ):
        super().__init__("verification", config)
        self.hilbert = hilbert or HilbertService(self.config)
        self.geometry = geometry or ProjectiveGeometryService(self.config, self.hilbert)
        self.probability = probability or ProbabilityService(self.config, self.hilbert, self.geometry)
        logger.info("Verification service configured")

    def capabilities(self) -> List[str]:
        return [
            "random_unit_vector",
            "random_event",
            "random_subspace",
            "random_point_in",
            "random_point_orthogonal_to",
            "haar_moment",
            "infimum_oracle",
            "verify_projection_theorem",
            "verify_probability_laws",
            "verify_born_rule",
            "verify_geometry",
        ]

    # ========================================
    # RANDOM GENERATORS
    # ========================================

    def _require_dim(self, dim: int) -> None:
        if dim < 2:
            raise VerificationInputError(f"Dimension must be at least 2, got {dim}")

    def random_unit_vector(self, rng: RandomSource, dim: int) -> UnitVector:
        """Haar-uniform point of S(C^dim): a normalized standard complex Gaussian"""
        self._require_dim(dim)
        return UnitVector.from_vector(HilbertVector(rng.complex_gaussian(dim)), self.config.ZERO_NORM)

    def random_point(self, rng: RandomSource, dim: int) -> ProjectivePoint:
        return self.geometry.pi2_project(self.random_unit_vector(rng, dim))

    def random_event(self, rng: RandomSource, dim: int, rank: int) -> Event:
        """Projection onto the span of ``rank`` random vectors"""
        self._require_dim(dim)
        if not 0 <= rank <= dim:
            raise VerificationInputError(f"Rank must lie in [0, {dim}], got {rank}")
        if rank == 0:
            return Event.zero(dim)
        if rank == dim:
            return Event.identity(dim)
        columns = [HilbertVector(rng.complex_gaussian(dim)) for _ in range(rank)]
        return self.hilbert.event_from_frame(columns, dim)

    def random_subspace(self, rng: RandomSource, dim: int, rank: int) -> ProjectiveSubspace:
        return self.geometry.subspace_from_event(self.random_event(rng, dim, rank))

    def random_subspace_through(
        self, rng: RandomSource, points: Sequence[ProjectivePoint], rank: int
    ) -> ProjectiveSubspace:
        """Span of ``points`` and random directions, of total rank ``rank``"""
        if not points:
            raise VerificationInputError("random_subspace_through needs at least one point")
        dim = points[0].dim
        if not len(points) <= rank <= dim:
            raise VerificationInputError(f"Rank must lie in [{len(points)}, {dim}], got {rank}")
        columns = [HilbertVector(point.entries) for point in points]
        columns += [HilbertVector(rng.complex_gaussian(dim)) for _ in range(rank - len(points))]
        return self.geometry.subspace_from_event(self.hilbert.event_from_frame(columns, dim))

    def random_point_in(self, rng: RandomSource, subspace: ProjectiveSubspace) -> ProjectivePoint:
        """Random unit combination of the frame of S"""
        if subspace.is_empty:
            raise EmptySubspaceError("Cannot draw a point from the empty projective subspace")
        basis = subspace.basis()
        coefficients = rng.complex_gaussian(basis.shape[1])
        return self.geometry.pi3_project(HilbertVector(basis @ coefficients))

    def random_point_orthogonal_to(self, rng: RandomSource, subspace: ProjectiveSubspace) -> ProjectivePoint:
        """Random point of S^perp, i.e. a case of the whole-subspace branch"""
        complement = self.geometry.orthogonal_complement(subspace)
        if complement.is_empty:
            raise EmptySubspaceError("S is the whole space; its orthogonal complement is empty")
        return self.random_point_in(rng, complement)

    def haar_moment(self, rng: RandomSource, dim: int, samples: int) -> float:
        """Empirical mean of |<e_1, psi>|^2 over Haar-random psi; tends to 1/dim"""
        self._require_dim(dim)
        if samples < 1:
            raise VerificationInputError(f"samples must be positive, got {samples}")
        draws = rng.complex_gaussian(samples, dim)
        draws /= np.linalg.norm(draws, axis=1, keepdims=True)
        return float(np.mean(np.abs(draws[:, 0]) ** 2))

    # ========================================
    # INFIMUM ORACLE
    # ========================================

    def infimum_oracle(
        self,
        x: ProjectivePoint,
        subspace: ProjectiveSubspace,
        rng: RandomSource,
        samples: Optional[int] = None,
        refine: bool = True,
    ) -> float:
        """
        Brute-force d(x, S): the minimum of d(x, s) over random unit
        combinations s of the frame of S, then a golden-section search along
        the geodesic joining the best sample to the candidate nearest point.
        Projective subspaces are totally geodesic, so the search stays in S.
        """
        if subspace.is_empty:
            raise EmptySubspaceError("infimum_oracle needs a non-empty projective subspace")
        require_same_dim(x.dim, subspace.dim, "infimum_oracle")
        samples = self.config.ORACLE_SAMPLES if samples is None else samples
        if samples < 1:
            raise VerificationInputError(f"samples must be positive, got {samples}")

        basis = subspace.basis()
        vectors = basis @ rng.complex_gaussian(basis.shape[1], samples)
        norms = np.linalg.norm(vectors, axis=0)
        keep = norms > self.config.ZERO_NORM
        vectors = vectors[:, keep] / norms[keep]
        inner = x.entries.conj() @ vectors
        residual = np.linalg.norm(vectors - np.outer(x.entries, inner), axis=0)
        distances = np.arctan2(residual, np.abs(inner))
        best = int(np.argmin(distances))
        best_distance = float(distances[best])
        if not refine:
            return best_distance

        projection = self.geometry.project_onto_subspace(x, subspace)
        if not projection.is_nearest_point:
            return best_distance
        best_point = self.geometry.pi3_project(HilbertVector(vectors[:, best]))
        geodesic = self.geometry.shortest_geodesic_projective(projection.nearest_point, best_point)
        if geodesic.length <= self.config.ORTH_TOL:
            return best_distance
        return min(best_distance, self._golden_refine(x, geodesic))

    def _golden_refine(self, x: ProjectivePoint, geodesic: Geodesic) -> float:
        def objective(t: float) -> float:
            return self.geometry.fs_distance(x, self.geometry.geodesic_point(geodesic, t))

        try:
            result = scipy.optimize.minimize_scalar(
                objective,
                bracket=(0.0, geodesic.length),
                method="golden",
                options={"xtol": 1e-12, "maxiter": self.config.GOLDEN_ITERATIONS},
            )
            return float(result.fun)
        except (RuntimeError, ValueError) as exc:
            logger.warning(f"Golden-section refinement could not bracket a minimum: {exc}")
            return min(objective(0.0), objective(geodesic.length))

    # ========================================
    # SUITE DRIVER
    # ========================================

    def _check_inputs(self, dims: Sequence[int], trials: int) -> Tuple[int, ...]:
        if trials < 1:
            raise VerificationInputError(f"trials must be at least 1, got {trials}")
        dims = tuple(int(d) for d in dims)
        if not dims:
            raise VerificationInputError("At least one dimension is required")
        for dim in dims:
            self._require_dim(dim)
        return dims

    def _run(
        self,
        suite: str,
        rng: RandomSource,
        dims: Sequence[int],
        trials: int,
        tolerance: float,
        trial: TrialFn,
        workers: Optional[int] = None,
        extra: Optional[List[Observation]] = None,
    ) -> VerificationReport:
        workers = self.config.VERIFY_WORKERS if workers is None else workers
        cases = [(dim, index) for dim in dims for index in range(trials)]
        logger.info(f"Starting {suite} suite: seed={rng.seed} dims={list(dims)} trials={trials} workers={workers}")
        started = time.perf_counter()

        def run_case(case: Tuple[int, int]) -> List[Observation]:
            dim, index = case
            return trial(rng.child(dim, index), dim, index)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(run_case, cases))
        else:
            results = [run_case(case) for case in cases]

        observations = [obs for result in results for obs in result]
        if extra:
            observations.extend(extra)
        report = build_report(suite, rng.seed, trials, tolerance, observations, time.perf_counter() - started)
        for failure in report.failures:
            logger.debug(f"{suite} failure: {failure.case} expected={failure.expected!r} got={failure.got!r}")
        if report.failures:
            logger.warning(f"{suite} suite recorded {len(report.failures)} failures")
        logger.info(
            f"Finished {suite} suite: {len(observations)} checks, "
            f"max_abs_error={report.max_abs_error:.3e}, elapsed={report.elapsed:.2f}s"
        )
        return report

    # ========================================
    # PROJECTION THEOREM
    # ========================================

    def verify_projection_theorem(
        self,
        rng: RandomSource,
        dims: Sequence[int],
        trials: int,
        samples: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        Per trial: the nearest point lies in S and attains d(x, S), the
        sampling oracle agrees, and a constructed x in S^perp sees every
        sampled point of S at pi/2.
        """
        dims = self._check_inputs(dims, trials)
        samples = self.config.ORACLE_SAMPLES if samples is None else samples

        def trial(source: RandomSource, dim: int, index: int) -> List[Observation]:
            return self._projection_trial(source, dim, index, samples)

        return self._run("projection", rng, dims, trials, self.config.VERIFY_TOL, trial, workers)

    def _projection_trial(self, rng: RandomSource, dim: int, index: int, samples: int) -> List[Observation]:
        cfg = self.config
        rank = rng.integers(1, dim)
        case = f"dim={dim} trial={index} rank={rank}"
        subspace = self.random_subspace(rng, dim, rank)
        x = self.random_point(rng, dim)
        distance = self.geometry.distance_to_subspace(x, subspace)
        projection = self.geometry.project_onto_subspace(x, subspace)
        observations = [
            Observation("projection_branch", case, 1.0, float(projection.is_nearest_point), 0.0),
        ]
        if projection.is_nearest_point:
            nearest = projection.nearest_point
            residual = float(np.linalg.norm(subspace.event.matrix @ nearest.entries - nearest.entries))
            observations.append(Observation("nearest_point_membership", case, 0.0, residual, cfg.MEMBERSHIP_TOL))
            observations.append(
                Observation("attained_distance", case, distance, self.geometry.fs_distance(x, nearest), cfg.VERIFY_TOL)
            )
        oracle = self.infimum_oracle(x, subspace, rng, samples)
        observations.append(Observation("infimum_oracle", case, distance, oracle, cfg.ORACLE_TOL))
        observations.append(Observation("oracle_lower_bound", case, 0.0, max(0.0, distance - oracle), cfg.ORACLE_FLOOR))

        if rank < dim:
            orthogonal = self.random_point_orthogonal_to(rng, subspace)
            branch = self.geometry.project_onto_subspace(orthogonal, subspace)
            observations.append(Observation("orthogonal_branch", case, 1.0, float(branch.is_whole_subspace), 0.0))
            observations.append(Observation("orthogonal_distance", case, HALF_PI, branch.distance, cfg.VERIFY_TOL))
            worst = max(
                abs(self.geometry.fs_distance(orthogonal, self.random_point_in(rng, subspace)) - HALF_PI)
                for _ in range(16)
            )
            observations.append(Observation("orthogonal_samples", case, HALF_PI, HALF_PI + worst, cfg.VERIFY_TOL))
        return observations

    # ========================================
    # PROBABILITY LAWS
    # ========================================

    def verify_probability_laws(
        self,
        rng: RandomSource,
        dims: Sequence[int],
        trials: int,
        max_chain: int,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        Geometric against operator values for the Born, single-event,
        consecutive and conditional laws. With max_chain == 1 only
        single-event chains are drawn.
        """
        dims = self._check_inputs(dims, trials)
        if max_chain < 1:
            raise VerificationInputError(f"max_chain must be at least 1, got {max_chain}")

        def trial(source: RandomSource, dim: int, index: int) -> List[Observation]:
            return self._probability_trial(source, dim, index, max_chain)

        extra = self._noncommutativity_witness() if max_chain >= 2 else None
        return self._run("probability", rng, dims, trials, self.config.VERIFY_TOL, trial, workers, extra)

    def _probability_trial(self, rng: RandomSource, dim: int, index: int, max_chain: int) -> List[Observation]:
        tol = self.config.VERIFY_TOL
        case = f"dim={dim} trial={index}"
        psi = self.random_unit_vector(rng, dim)
        x = self.geometry.pi2_project(psi)
        observations = []

        phi = self.random_unit_vector(rng, dim)
        born = self.probability.born_probability(x, self.geometry.pi2_project(phi)).value
        observations.append(Observation("born", case, self.hilbert.oracle_born(psi, phi), born, tol))

        subspace = self.random_subspace(rng, dim, rng.integers(0, dim))
        single = self.probability.single_event_probability(x, subspace).value
        observations.append(
            Observation("single_event", case, self.hilbert.oracle_event_prob(psi, subspace.event), single, tol)
        )

        length = rng.integers(1, max_chain)
        chain = EventChain.of([self.random_subspace(rng, dim, rng.integers(1, dim)) for _ in range(length)], dim)
        consecutive = self.probability.consecutive_probability(x, chain).value
        oracle = self.hilbert.oracle_consecutive_prob(psi, [s.event for s in chain.subspaces])
        observations.append(Observation("consecutive", f"{case} length={length}", oracle, consecutive, tol))

        if max_chain < 2:
            return observations

        given = self.random_subspace(rng, dim, rng.integers(1, dim))
        target = self.random_subspace(rng, dim, rng.integers(0, dim))
        denominator = self.hilbert.oracle_event_prob(psi, given.event)
        if denominator > self.config.COND_TOL:
            expected = self.hilbert.oracle_consecutive_prob(psi, [given.event, target.event]) / denominator
            got = self.probability.conditional_probability(x, given, target).value
            observations.append(Observation("conditional", case, expected, got, tol))

        observations.extend(self._short_circuit_trial(rng, dim, psi, x, max_chain, case))
        return observations

    def _short_circuit_trial(
        self,
        rng: RandomSource,
        dim: int,
        psi: UnitVector,
        x: ProjectivePoint,
        max_chain: int,
        case: str,
    ) -> List[Observation]:
        """
        Chain E, I - E, ... with E a coordinate projection: after the first
        step the point lies in Ran E, orthogonal to the second subspace, so
        both derivations must give exactly 0.
        """
        permutation = rng.generator.permutation(dim)
        split = rng.integers(1, dim - 1)
        mask = np.zeros(dim)
        mask[permutation[:split]] = 1.0
        first = Event(np.diag(mask), split)
        tail = [self.random_subspace(rng, dim, rng.integers(1, dim)) for _ in range(rng.integers(0, max_chain - 2))]
        subspaces = [self.geometry.subspace_from_event(first), self.geometry.subspace_from_event(first.complement())]
        chain = EventChain.of(subspaces + tail, dim)
        geometric = self.probability.consecutive_probability(x, chain).value
        oracle = self.hilbert.oracle_consecutive_prob(psi, [s.event for s in chain.subspaces])
        case = f"{case} short_circuit length={len(chain)}"
        return [
            Observation("short_circuit_geometric", case, 0.0, geometric, 0.0),
            Observation("short_circuit_oracle", case, 0.0, oracle, 0.0),
        ]

    def _noncommutativity_witness(self) -> List[Observation]:
        """
        x = e_1, S = {e_1}, S' = {(e_1 + e_2)/sqrt 2} in C^2:
        P_x(S, S') = 1/2 while P_x(S', S) = 1/4.
        """
        tol = self.config.VERIFY_TOL
        x = self.geometry.point([1, 0])
        first = self.geometry.subspace_from_event(self.hilbert.rank_one_event(UnitVector.of([1, 0])))
        second = self.geometry.subspace_from_event(self.hilbert.rank_one_event(UnitVector.of([1, 1])))
        forward = EventChain.of([first, second])
        backward = EventChain.of([second, first])
        geometric = (
            self.probability.consecutive_probability(x, forward).value
            - self.probability.consecutive_probability(x, backward).value
        )
        oracle = (
            self.probability.oracle_consecutive_probability(x, forward).value
            - self.probability.oracle_consecutive_probability(x, backward).value
        )
        case = "x=e1 S={e1} S'={(e1+e2)/sqrt2}"
        return [
            Observation("noncommutativity_geometric", case, 0.25, geometric, tol),
            Observation("noncommutativity_oracle", case, 0.25, oracle, tol),
        ]

    # ========================================
    # BORN RULE AND INVARIANCE
    # ========================================

    def verify_born_rule(
        self,
        rng: RandomSource,
        dims: Sequence[int],
        trials: int,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        cos^2 d(x, y) against |<psi, phi>|^2, and invariance of distances and
        probabilities under psi -> lambda psi with |lambda| in [1e-3, 1e3].
        """
        dims = self._check_inputs(dims, trials)
        return self._run("born", rng, dims, trials, self.config.BORN_TOL, self._born_trial, workers)

    def _born_trial(self, rng: RandomSource, dim: int, index: int) -> List[Observation]:
        tol = self.config.BORN_TOL
        case = f"dim={dim} trial={index}"
        psi = self.random_unit_vector(rng, dim)
        phi = self.random_unit_vector(rng, dim)
        x = self.geometry.pi2_project(psi)
        y = self.geometry.pi2_project(phi)
        born = self.probability.born_probability(x, y).value
        observations = [Observation("born_rule", case, self.hilbert.oracle_born(psi, phi), born, tol)]

        scale = 10.0 ** rng.uniform(-3.0, 3.0) * complex(np.exp(1j * rng.uniform(0.0, 2 * math.pi)))
        scaled = self.geometry.pi3_project(psi.vector.scaled(scale))
        subspace = self.random_subspace(rng, dim, rng.integers(0, dim))
        observations.extend(
            [
                Observation("scale_invariance_born", case, born, self.probability.born_probability(scaled, y).value, tol),
                Observation(
                    "scale_invariance_distance", case,
                    self.geometry.fs_distance(x, y), self.geometry.fs_distance(scaled, y), tol,
                ),
                Observation(
                    "scale_invariance_event", case,
                    self.probability.single_event_probability(x, subspace).value,
                    self.probability.single_event_probability(scaled, subspace).value,
                    tol,
                ),
            ]
        )
        return observations

    # ========================================
    # GEOMETRY AND LATTICE
    # ========================================

    def verify_geometry(
        self,
        rng: RandomSource,
        dims: Sequence[int],
        trials: int,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        Metric axioms, geodesics and horizontal lifts, totally geodesic
        subspaces, the complement law and orthomodular lattice identities.
        """
        dims = self._check_inputs(dims, trials)
        return self._run("geometry", rng, dims, trials, self.config.VERIFY_TOL, self._geometry_trial, workers)

    def _projector_gap(self, first: ProjectiveSubspace, second: ProjectiveSubspace) -> float:
        return float(np.max(np.abs(first.event.matrix - second.event.matrix)))

    def _geometry_trial(self, rng: RandomSource, dim: int, index: int) -> List[Observation]:
        cfg = self.config
        case = f"dim={dim} trial={index}"
        geo = self.geometry
        x, y, z = (self.random_point(rng, dim) for _ in range(3))
        d_xy, d_yz, d_xz = geo.fs_distance(x, y), geo.fs_distance(y, z), geo.fs_distance(x, z)
        observations = [
            Observation("triangle_inequality", case, 0.0, max(0.0, d_xz - d_xy - d_yz), cfg.VERIFY_TOL),
            Observation("symmetry", case, d_xy, geo.fs_distance(y, x), cfg.VERIFY_TOL),
            Observation("diameter", case, 0.0, max(0.0, d_xy - HALF_PI), cfg.DIAMETER_SLACK),
        ]

        geodesic = geo.shortest_geodesic_projective(x, y)
        middle = geo.geodesic_point(geodesic, rng.uniform(0.0, geodesic.length))
        observations.append(
            Observation(
                "arc_length_additivity", case, geodesic.length,
                geo.fs_distance(x, middle) + geo.fs_distance(middle, y), cfg.MEMBERSHIP_TOL,
            )
        )

        start_rep = x.rep.with_phase(complex(np.exp(1j * rng.uniform(0.0, 2 * math.pi))))
        lift = geo.horizontal_lift(geodesic, start_rep)
        t = rng.uniform(0.0, geodesic.length)
        observations.extend(
            [
                Observation("lift_length", case, geodesic.length, geo.sphere_distance(lift.start, lift.end), cfg.VERIFY_TOL),
                Observation("lift_endpoint", case, 0.0, geo.fs_distance(geo.pi2_project(lift.end), y), cfg.VERIFY_TOL),
                Observation(
                    "lift_horizontal", case, 0.0,
                    abs(complex(np.vdot(lift.lift_at(t), lift.velocity_at(t)))), cfg.VERIFY_TOL,
                ),
            ]
        )

        plane = self.random_subspace(rng, dim, rng.integers(2, dim))
        a, b = self.random_point_in(rng, plane), self.random_point_in(rng, plane)
        chord = geo.shortest_geodesic_projective(a, b)
        inside = geo.geodesic_point(chord, rng.uniform(0.0, chord.length))
        residual = float(np.linalg.norm(plane.event.matrix @ inside.entries - inside.entries))
        observations.append(Observation("totally_geodesic", case, 0.0, residual, cfg.MEMBERSHIP_TOL))

        first = self.random_subspace(rng, dim, rng.integers(0, dim))
        second = self.random_subspace(rng, dim, rng.integers(0, dim))
        complement = geo.orthogonal_complement(first)
        total = (
            self.probability.single_event_probability(x, first).value
            + self.probability.single_event_probability(x, complement).value
        )
        observations.extend(
            [
                Observation("complement_law", case, 1.0, total, cfg.BORN_TOL),
                Observation(
                    "complement_involution", case, 0.0,
                    self._projector_gap(geo.orthogonal_complement(complement), first), cfg.OP_TOL,
                ),
                Observation("meet_commutative", case, 0.0,
                            self._projector_gap(geo.meet(first, second), geo.meet(second, first)), cfg.OP_TOL),
                Observation("join_commutative", case, 0.0,
                            self._projector_gap(geo.join(first, second), geo.join(second, first)), cfg.OP_TOL),
                Observation("absorption_join", case, 0.0,
                            self._projector_gap(geo.join(first, geo.meet(first, second)), first), cfg.OP_TOL),
                Observation("absorption_meet", case, 0.0,
                            self._projector_gap(geo.meet(first, geo.join(first, second)), first), cfg.OP_TOL),
                Observation(
                    "de_morgan", case, 0.0,
                    self._projector_gap(
                        geo.orthogonal_complement(geo.join(first, second)),
                        geo.meet(complement, geo.orthogonal_complement(second)),
                    ),
                    cfg.OP_TOL,
                ),
                Observation("orthocomplement_meet", case, -1.0,
                            float(geo.meet(first, complement).projective_dim), 0.0),
                Observation("orthocomplement_join", case, float(dim - 1),
                            float(geo.join(first, complement).projective_dim), 0.0),
            ]
        )

        # triples through a common point, so meets are not trivially empty
        core = [self.random_point(rng, dim)]
        a, b, c = (self.random_subspace_through(rng, core, rng.integers(1, dim - 1)) for _ in range(3))
        observations.extend(
            [
                Observation("meet_associative", case, 0.0,
                            self._projector_gap(geo.meet(geo.meet(a, b), c), geo.meet(a, geo.meet(b, c))), cfg.OP_TOL),
                Observation("join_associative", case, 0.0,
                            self._projector_gap(geo.join(geo.join(a, b), c), geo.join(a, geo.join(b, c))), cfg.OP_TOL),
            ]
        )
        return observations

    # ========================================
    # SUITE SELECTION
    # ========================================

    def run_suites(
        self,
        suite: str,
        rng: RandomSource,
        dims: Sequence[int],
        trials: int,
        max_chain: int,
        workers: Optional[int] = None,
    ) -> List[VerificationReport]:
        """Run one named suite, or all of them in a fixed order"""
        if suite != "all" and suite not in SUITES:
            raise VerificationInputError(f"Unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
        if max_chain < 1:
            raise VerificationInputError(f"max_chain must be at least 1, got {max_chain}")
        selected = SUITES if suite == "all" else (suite,)
        reports = []
        for name in selected:
            if name == "projection":
                reports.append(self.verify_projection_theorem(rng, dims, trials, workers=workers))
            elif name == "probability":
                reports.append(self.verify_probability_laws(rng, dims, trials, max_chain, workers=workers))
            elif name == "born":
                reports.append(self.verify_born_rule(rng, dims, trials, workers=workers))
            else:
                reports.append(self.verify_geometry(rng, dims, trials, workers=workers))
        return reports
