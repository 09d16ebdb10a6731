"""
Command layer shared by the CLI and the HTTP router.

Each command takes wire documents, runs the geometric computation next to
its operator-side twin where one exists, and returns a JSON-ready dict.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from app.core.config import Settings
from app.core.exceptions import VerificationInputError
from app.models.probability import EventChain
from app.models.projective import ProjectivePoint, ProjectiveSubspace
from app.models.random_source import RandomSource
from app.models.report import json_float
from app.schemas.documents import Document, EventDocument, VectorDocument
from app.services.base_service import BaseGeometryService
from app.services.hilbert_service import HilbertService
from app.services.probability_service import ProbabilityService
from app.services.projective_service import ProjectiveGeometryService
from app.services.verification_service import VerificationService

logger = logging.getLogger(__name__)

def parse_dims(text: str) -> List[int]:
    """'2,3,4' -> [2, 3, 4]"""
    try:
        dims = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise VerificationInputError(f"Dimensions must be a comma-separated list of integers, got {text!r}")
    if not dims:
        raise VerificationInputError("At least one dimension is required")
    return dims

class CommandService(BaseGeometryService):
    """
    dist, prob, seq-prob, project, geodesic and verify
    """

    def __init__(
        self,
        config: Optional[Settings] = None,
        hilbert: Optional[HilbertService] = None,
        geometry: Optional[ProjectiveGeometryService] = None,
        probability: Optional[ProbabilityService] = None,
        verification: Optional[VerificationService] = None,
    ):
        super().__init__("command", config)
        self.hilbert = hilbert or HilbertService(self.config)
        self.geometry = geometry or ProjectiveGeometryService(self.config, self.hilbert)
        self.probability = probability or ProbabilityService(self.config, self.hilbert, self.geometry)
        self.verification = verification or VerificationService(
            self.config, self.hilbert, self.geometry, self.probability
        )
        logger.info("Command service configured")

    def capabilities(self) -> List[str]:
        return ["dist", "prob", "seq-prob", "project", "geodesic", "verify"]

    # ========================================
    # DOCUMENT CONVERSION
    # ========================================

    def point_of(self, document: VectorDocument) -> ProjectivePoint:
        return self.geometry.pi3_project(document.to_vector())

    def subspace_of(self, document: EventDocument) -> ProjectiveSubspace:
        return self.geometry.subspace_from_event(document.to_event(self.hilbert))

    def _finish(self, payload: Dict[str, Any], tol_report: bool) -> Dict[str, Any]:
        if tol_report:
            payload["tolerances"] = self.config.tolerances()
        return payload

    # ========================================
    # COMMANDS
    # ========================================

    def dist(self, first: VectorDocument, second: Document, tol_report: bool = False) -> Dict[str, Any]:
        """
        Fubini-Study distance between two states, or from a state to the
        subspace of an event (reported with the projection norm ||E psi||)
        """
        x = self.point_of(first)
        if isinstance(second, EventDocument):
            subspace = self.subspace_of(second)
            distance = self.geometry.distance_to_subspace(x, subspace)
            projection_norm = self.hilbert.oracle_event_prob(x.rep, subspace.event) ** 0.5
            payload = {"distance_radians": distance, "projection_norm": projection_norm}
        else:
            y = self.point_of(second)
            payload = {
                "distance_radians": self.geometry.fs_distance(x, y),
                "absolute_inner": self.geometry.absolute_inner(x, y),
            }
        return self._finish(payload, tol_report)

    def prob(self, state: VectorDocument, event: EventDocument, tol_report: bool = False) -> Dict[str, Any]:
        x = self.point_of(state)
        subspace = self.subspace_of(event)
        geometric = self.probability.single_event_probability(x, subspace).value
        oracle = self.probability.oracle_single_event_probability(x, subspace).value
        payload = {"geometric": geometric, "oracle": oracle, "abs_diff": abs(geometric - oracle)}
        return self._finish(payload, tol_report)

    def seq_prob(
        self,
        state: VectorDocument,
        events: Sequence[EventDocument],
        tol_report: bool = False,
    ) -> Dict[str, Any]:
        """
        Per-step factors of a time-ordered chain, the product and the
        operator total ||E_k ... E_1 psi||^2
        """
        x = self.point_of(state)
        chain = EventChain.of([self.subspace_of(event) for event in events], x.dim)
        steps = self.probability.chain_trace(x, chain)
        total = self.probability.consecutive_probability(x, chain).value
        oracle_total = self.probability.oracle_consecutive_probability(x, chain).value
        payload = {
            "steps": [{"step": s.step, "distance": s.distance, "factor": s.factor} for s in steps],
            "total": total,
            "oracle_total": oracle_total,
            "abs_diff": abs(total - oracle_total),
        }
        if steps and steps[-1].orthogonal:
            payload["orthogonal_at_step"] = steps[-1].step
        return self._finish(payload, tol_report)

    def project(self, state: VectorDocument, event: EventDocument, tol_report: bool = False) -> Dict[str, Any]:
        x = self.point_of(state)
        result = self.geometry.project_onto_subspace(x, self.subspace_of(event))
        if result.is_nearest_point:
            payload = {
                "nearest_point": VectorDocument.from_point(result.nearest_point).model_dump(mode="json"),
                "distance": result.distance,
            }
        else:
            payload = {"whole_subspace": True, "distance": result.distance}
        return self._finish(payload, tol_report)

    def geodesic(
        self,
        first: VectorDocument,
        second: VectorDocument,
        steps: Optional[int] = None,
        tol_report: bool = False,
    ) -> Dict[str, Any]:
        steps = self.config.GEODESIC_STEPS if steps is None else steps
        if steps < 1:
            raise VerificationInputError(f"steps must be at least 1, got {steps}")
        curve = self.geometry.shortest_geodesic_projective(self.point_of(first), self.point_of(second))
        samples = self.geometry.geodesic_samples(curve, steps)
        payload = {
            "length": curve.length,
            "unique": curve.unique,
            "samples": [VectorDocument.from_point(point).model_dump(mode="json") for point in samples],
        }
        return self._finish(payload, tol_report)

    def verify(
        self,
        seed: Optional[int] = None,
        dims: Optional[Sequence[int]] = None,
        trials: Optional[int] = None,
        max_chain: Optional[int] = None,
        suite: str = "all",
        workers: Optional[int] = None,
        tol_report: bool = False,
    ) -> Dict[str, Any]:
        """
        Run the seeded suites. One suite prints its report; ``all`` wraps
        the reports with an overall verdict.
        """
        cfg = self.config
        rng = RandomSource(cfg.DEFAULT_SEED if seed is None else seed)
        dims = parse_dims(cfg.DEFAULT_DIMS) if dims is None else list(dims)
        trials = cfg.DEFAULT_TRIALS if trials is None else trials
        max_chain = cfg.DEFAULT_MAX_CHAIN if max_chain is None else max_chain

        reports = self.verification.run_suites(suite, rng, dims, trials, max_chain, workers)
        if suite != "all":
            payload = reports[0].to_dict()
        else:
            payload = {
                "suite": "all",
                "seed": rng.seed,
                "trials": trials,
                "dims": dims,
                "max_abs_error": json_float(max(report.max_abs_error for report in reports)),
                "passed": all(report.passed for report in reports),
                "reports": [report.to_dict() for report in reports],
            }
        return self._finish(payload, tol_report)
