"""
Quantum probabilities written through Fubini-Study distances only.

    P(x | y)      = cos^2 d(x, y)
    P_x(S)        = cos^2 d(x, S)
    P_x(S1, ...)  = product of cos^2 d(c_i, S_i), c_{i+1} = Pj(c_i | S_i)

Each geometric law has an ``oracle_*`` twin evaluated with operators on
representatives, so callers can show both derivations side by side.
"""

import logging
import math
from typing import List, Optional, Sequence

from app.core.config import Settings
from app.core.exceptions import ConsistencyError, UndefinedConditionalError, require_same_dim
from app.models.hilbert import EventFamily, UnitVector
from app.models.probability import ChainStep, Derivation, EventChain, ProbabilityValue
from app.models.projective import ProjectivePoint, ProjectiveSubspace
from app.services.base_service import BaseGeometryService
from app.services.hilbert_service import HilbertService
from app.services.projective_service import HALF_PI, ProjectiveGeometryService

logger = logging.getLogger(__name__)

def _geometric(value: float) -> ProbabilityValue:
    return ProbabilityValue(value, Derivation.GEOMETRIC)

def _oracle(value: float) -> ProbabilityValue:
    return ProbabilityValue(value, Derivation.ORACLE)

class ProbabilityService(BaseGeometryService):
    """
    Born, single-event, consecutive and conditional probabilities
    """

    def __init__(
        self,
        config: Optional[Settings] = None,
        hilbert: Optional[HilbertService] = None,
        geometry: Optional[ProjectiveGeometryService] = None,
    ):
        super().__init__("probability", config)
        self.hilbert = hilbert or HilbertService(self.config)
        self.geometry = geometry or ProjectiveGeometryService(self.config, self.hilbert)
        logger.info("Probability service configured")

    def capabilities(self) -> List[str]:
        return [
            "born_probability",
            "single_event_probability",
            "consecutive_probability",
            "conditional_probability",
            "rank_one_check",
            "chain_trace",
            "transition_probability_hilbert",
        ]

    def _admit(self, subspaces: Sequence[ProjectiveSubspace], family: Optional[EventFamily]) -> None:
        if family is None:
            return
        for subspace in subspaces:
            family.require(subspace.event, self.config.OP_TOL)

    # ========================================
    # GEOMETRIC LAWS
    # ========================================

    def born_probability(self, x: ProjectivePoint, y: ProjectivePoint) -> ProbabilityValue:
        """P_Proj(x | y) = cos^2 d(x, y)"""
        return _geometric(math.cos(self.geometry.fs_distance(x, y)) ** 2)

    def single_event_probability(
        self,
        x: ProjectivePoint,
        subspace: ProjectiveSubspace,
        family: Optional[EventFamily] = None,
    ) -> ProbabilityValue:
        """
        P_x(S) = cos^2 d(x, S); the empty subspace (event 0) never occurs and
        x in S^perp gives exactly 0.
        """
        require_same_dim(x.dim, subspace.dim, "single_event_probability")
        self._admit([subspace], family)
        if subspace.is_empty:
            return _geometric(0.0)
        projection = self.geometry.project_onto_subspace(x, subspace)
        if projection.is_whole_subspace:
            return _geometric(0.0)
        return _geometric(math.cos(projection.distance) ** 2)

    def chain_trace(
        self,
        x: ProjectivePoint,
        chain: EventChain,
        family: Optional[EventFamily] = None,
    ) -> List[ChainStep]:
        """
        Per-step factors of a consecutive probability. The trace stops at the
        first step whose subspace is empty or orthogonal to the current point;
        that step carries factor 0.
        """
        require_same_dim(x.dim, chain.ambient_dim, "consecutive_probability")
        self._admit(chain.subspaces, family)
        steps: List[ChainStep] = []
        current = x
        for index, subspace in enumerate(chain.subspaces, start=1):
            if subspace.is_empty:
                steps.append(ChainStep(index, HALF_PI, 0.0, None, orthogonal=True))
                break
            projection = self.geometry.project_onto_subspace(current, subspace)
            if projection.is_whole_subspace:
                steps.append(ChainStep(index, HALF_PI, 0.0, None, orthogonal=True))
                break
            current = projection.nearest_point
            steps.append(ChainStep(index, projection.distance, math.cos(projection.distance) ** 2, current))
        return steps

    def consecutive_probability(
        self,
        x: ProjectivePoint,
        chain: EventChain,
        family: Optional[EventFamily] = None,
    ) -> ProbabilityValue:
        """
        Wigner's rule in geometric form: cos^2 d(y, S2) cos^2 d(x, S1) with
        y = Pj(x | S1), iterated along the chain. The empty chain gives 1.
        """
        steps = self.chain_trace(x, chain, family)
        if steps and steps[-1].orthogonal:
            return _geometric(0.0)
        value = 1.0
        for step in steps:
            value *= step.factor
        return _geometric(value)

    def conditional_probability(
        self,
        x: ProjectivePoint,
        given: ProjectiveSubspace,
        subspace: ProjectiveSubspace,
        family: Optional[EventFamily] = None,
    ) -> ProbabilityValue:
        """
        P_x(S2 | S1) = P_x(S1, S2) / P_x(S1), defined when P_x(S1) > COND_TOL
        """
        denominator = self.single_event_probability(x, given, family).value
        if denominator <= self.config.COND_TOL:
            raise UndefinedConditionalError(
                f"Conditioning event has probability {denominator:.3e} <= {self.config.COND_TOL:.0e}"
            )
        chain = EventChain.of([given, subspace], x.dim)
        numerator = self.consecutive_probability(x, chain, family).value
        return _geometric(numerator / denominator)

    def rank_one_check(self, x: ProjectivePoint, phi: UnitVector) -> ProbabilityValue:
        """
        Single-event probability of the one-point subspace {pi_2(phi)}, checked
        against cos^2 d(x, pi_2(phi)).
        """
        require_same_dim(x.dim, phi.dim, "rank_one_check")
        subspace = self.geometry.subspace_from_event(self.hilbert.rank_one_event(phi))
        single = self.single_event_probability(x, subspace)
        born = self.born_probability(x, self.geometry.pi2_project(phi))
        gap = abs(single.value - born.value)
        if gap > self.config.BORN_TOL:
            raise ConsistencyError(
                f"Rank-one event probability {single.value!r} differs from Born probability {born.value!r} by {gap:.3e}"
            )
        return single

    # ========================================
    # ORACLE TWINS
    # ========================================

    def transition_probability_hilbert(self, psi: UnitVector, phi: UnitVector) -> ProbabilityValue:
        """P_Hilb(psi | phi) = |<psi, phi>|^2"""
        return _oracle(self.hilbert.oracle_born(psi, phi))

    def oracle_single_event_probability(self, x: ProjectivePoint, subspace: ProjectiveSubspace) -> ProbabilityValue:
        return _oracle(self.hilbert.oracle_event_prob(x.rep, subspace.event))

    def oracle_consecutive_probability(self, x: ProjectivePoint, chain: EventChain) -> ProbabilityValue:
        require_same_dim(x.dim, chain.ambient_dim, "oracle_consecutive_probability")
        return _oracle(self.hilbert.oracle_consecutive_prob(x.rep, [s.event for s in chain.subspaces]))
