"""
Complex linear algebra substrate and the Hilbert-space probability oracle.

Every geometric formula elsewhere is checked against the plain operator
expressions computed here: |<psi, phi>|^2, ||E psi||^2 and ||E_k ... E_1 psi||^2.
"""

import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from app.core.config import Settings
from app.core.exceptions import RankDeficiencyError, require_same_dim
from app.models.hilbert import Event, HilbertVector, UnitVector
from app.services.base_service import BaseGeometryService

logger = logging.getLogger(__name__)

VectorLike = Union[HilbertVector, UnitVector]

def as_array(vector: VectorLike) -> np.ndarray:
    """Raw amplitudes of a HilbertVector or UnitVector"""
    return vector.entries

class HilbertService(BaseGeometryService):
    """
    Inner products, events and operator-side probabilities on C^n
    """

    def __init__(self, config: Optional[Settings] = None):
        super().__init__("hilbert", config)
        logger.info("Hilbert service configured")

    def capabilities(self) -> List[str]:
        return [
            "hermitian_inner",
            "real_inner",
            "apply_event",
            "event_from_frame",
            "rank_one_event",
            "oracle_born",
            "oracle_event_prob",
            "oracle_consecutive_prob",
        ]

    # ========================================
    # INNER PRODUCTS
    # ========================================

    def hermitian_inner(self, a: VectorLike, b: VectorLike) -> complex:
        """
        <a, b>, conjugate linear in the first entry and linear in the second
        """
        require_same_dim(a.dim, b.dim, "hermitian_inner")
        return complex(np.vdot(as_array(a), as_array(b)))

    def real_inner(self, a: VectorLike, b: VectorLike) -> float:
        """
        Re <a, b>, the inner product of H viewed as a real Hilbert space
        """
        return self.hermitian_inner(a, b).real

    # ========================================
    # EVENTS
    # ========================================

    def apply_event(self, event: Event, vector: VectorLike) -> HilbertVector:
        require_same_dim(event.dim, vector.dim, "apply_event")
        return HilbertVector(event.matrix @ as_array(vector))

    def orthonormalize(self, columns: np.ndarray) -> np.ndarray:
        """
        Classical Gram-Schmidt with re-orthogonalization (two passes per column).

        Raises RankDeficiencyError when a column lies in the span of the
        previous ones.
        """
        dim, count = columns.shape
        basis = np.zeros((dim, count), dtype=np.complex128)
        for k in range(count):
            column = columns[:, k].astype(np.complex128)
            original = np.linalg.norm(column)
            for _ in range(2):
                column = column - basis[:, :k] @ (basis[:, :k].conj().T @ column)
            residual = np.linalg.norm(column)
            if original == 0.0 or residual <= self.config.FRAME_TOL * original:
                raise RankDeficiencyError(
                    f"Frame column {k} is linearly dependent on the previous columns "
                    f"(residual {residual:.3e})"
                )
            basis[:, k] = column / residual
        return basis

    def event_from_frame(self, columns: Sequence[VectorLike], dim: Optional[int] = None) -> Event:
        """
        E = sum_k |c_k><c_k| over the re-orthonormalized frame, so Ran E = span(columns)
        """
        if not columns:
            if dim is None:
                raise RankDeficiencyError("An empty frame needs an explicit dimension")
            return Event.zero(dim)
        dim = columns[0].dim if dim is None else dim
        for column in columns:
            require_same_dim(dim, column.dim, "event_from_frame")
        basis = self.orthonormalize(np.column_stack([as_array(c) for c in columns]))
        return Event(basis @ basis.conj().T, basis.shape[1])

    def rank_one_event(self, phi: UnitVector) -> Event:
        """|phi><phi|"""
        entries = as_array(phi)
        return Event(np.outer(entries, entries.conj()), 1)

    # ========================================
    # HILBERT-SPACE ORACLE
    # ========================================

    def oracle_born(self, psi: UnitVector, phi: UnitVector) -> float:
        """P_Hilb(psi | phi) = |<psi, phi>|^2"""
        return abs(self.hermitian_inner(psi, phi)) ** 2

    def oracle_event_prob(self, psi: UnitVector, event: Event) -> float:
        """P_psi(E) = ||E psi||^2"""
        return float(np.linalg.norm(self.apply_event(event, psi).entries) ** 2)

    def oracle_consecutive_prob(self, psi: UnitVector, events: Sequence[Event]) -> float:
        """
        ||E_k ... E_2 E_1 psi||^2 with E_1 = events[0] applied first; 1 for no events
        """
        state = as_array(psi)
        for event in events:
            require_same_dim(event.dim, psi.dim, "oracle_consecutive_prob")
            state = event.matrix @ state
        return float(np.linalg.norm(state) ** 2)
