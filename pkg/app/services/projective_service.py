"""
Geometry of complex projective space CP(H) with the Fubini-Study metric.

Everything is computed through unit representatives: quotient maps, the
absolute inner product, distances, the projection of a point on a
subspace, geodesics and their horizontal lifts, and the subspace lattice.

Angles are evaluated as atan2(sin, cos) from an orthogonal decomposition
rather than arccos(cos). The values agree with arccos(clamp(cos, 0, 1)) and
stay accurate next to 0 and pi/2, where arccos loses about half the digits.
"""

import logging
import math
from typing import List, Optional, Sequence, Union

import numpy as np
import scipy.linalg

from app.core.config import Settings
from app.core.exceptions import (
    EmptySubspaceError,
    FiberMismatchError,
    require_same_dim,
)
from app.models.hilbert import Event, HilbertVector, UnitVector
from app.models.projective import (
    Geodesic,
    GeodesicSpace,
    ProjectionKind,
    ProjectionResult,
    ProjectivePoint,
    ProjectiveSubspace,
)
from app.services.base_service import BaseGeometryService
from app.services.hilbert_service import HilbertService, as_array

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2

class ProjectiveGeometryService(BaseGeometryService):
    """
    Fubini-Study geometry, the Projection Theorem and the subspace lattice
    """

    def __init__(self, config: Optional[Settings] = None, hilbert: Optional[HilbertService] = None):
        super().__init__("projective", config)
        self.hilbert = hilbert or HilbertService(self.config)
        logger.info("Projective geometry service configured")

    def capabilities(self) -> List[str]:
        return [
            "pi1_normalize",
            "pi2_project",
            "pi3_project",
            "absolute_inner",
            "fs_distance",
            "sphere_distance",
            "projective_angle",
            "euclidean_angle",
            "is_orthogonal",
            "subspace_from_event",
            "orthogonal_complement",
            "point_in_subspace",
            "distance_to_subspace",
            "project_onto_subspace",
            "shortest_geodesic_sphere",
            "shortest_geodesic_projective",
            "horizontal_lift",
            "meet",
            "join",
        ]

    # ========================================
    # QUOTIENT MAPS
    # ========================================

    def pi1_normalize(self, vector: HilbertVector) -> UnitVector:
        """pi_1(v) = v / ||v|| on H minus zero"""
        return UnitVector.from_vector(vector, self.config.ZERO_NORM)

    def pi2_project(self, psi: UnitVector) -> ProjectivePoint:
        """
        Equivalence class of psi modulo S^1, stored with canonical phase:
        the first component of modulus above PHASE_TOL is real and positive.
        """
        entries = np.array(as_array(psi), dtype=np.complex128)
        significant = np.flatnonzero(np.abs(entries) > self.config.PHASE_TOL)
        if significant.size:
            k = significant[0]
            modulus = abs(entries[k])
            entries = entries * (entries[k].conjugate() / modulus)
            entries[k] = modulus
        return ProjectivePoint(UnitVector(HilbertVector(entries)))

    def pi3_project(self, vector: HilbertVector) -> ProjectivePoint:
        """pi_3 = pi_2 pi_1"""
        return self.pi2_project(self.pi1_normalize(vector))

    def point(self, values: Sequence[complex]) -> ProjectivePoint:
        """Convenience: the projective point of a raw amplitude list"""
        return self.pi3_project(HilbertVector.of(values))

    # ========================================
    # ANGLES AND DISTANCES
    # ========================================

    def _projective_sin_cos(self, psi: np.ndarray, phi: np.ndarray):
        inner = np.vdot(psi, phi)
        residual = np.linalg.norm(phi - inner * psi)
        return residual, abs(inner)

    def absolute_inner(self, x: ProjectivePoint, y: ProjectivePoint) -> float:
        """|<x, y>| := |<psi, phi>| for any representatives; lies in [0, 1]"""
        require_same_dim(x.dim, y.dim, "absolute_inner")
        return min(abs(complex(np.vdot(x.entries, y.entries))), 1.0)

    def fs_distance(self, x: ProjectivePoint, y: ProjectivePoint) -> float:
        """
        Fubini-Study distance d(x, y) = arccos |<x, y>| in [0, pi/2]
        """
        require_same_dim(x.dim, y.dim, "fs_distance")
        sin_a, cos_a = self._projective_sin_cos(x.entries, y.entries)
        return float(np.arctan2(sin_a, cos_a))

    def sphere_distance(self, psi: UnitVector, phi: UnitVector) -> float:
        """
        Great-circle distance theta = arccos Re<psi, phi> in [0, pi] on S(H)
        """
        require_same_dim(psi.dim, phi.dim, "sphere_distance")
        cos_t = float(np.vdot(psi.entries, phi.entries).real)
        sin_t = np.linalg.norm(phi.entries - cos_t * psi.entries)
        return float(np.arctan2(sin_t, cos_t))

    def projective_angle(self, phi: HilbertVector, psi: HilbertVector) -> float:
        """arccos(|<phi, psi>| / (||phi|| ||psi||)) in [0, pi/2]; descends to CP(H)"""
        require_same_dim(phi.dim, psi.dim, "projective_angle")
        return self.fs_distance(self.pi3_project(phi), self.pi3_project(psi))

    def euclidean_angle(self, phi: HilbertVector, psi: HilbertVector) -> float:
        """arccos(Re<phi, psi> / (||phi|| ||psi||)) in [0, pi]; does not descend to CP(H)"""
        require_same_dim(phi.dim, psi.dim, "euclidean_angle")
        return self.sphere_distance(self.pi1_normalize(phi), self.pi1_normalize(psi))

    def is_orthogonal(self, x: ProjectivePoint, y: ProjectivePoint) -> bool:
        return self.absolute_inner(x, y) <= self.config.ORTH_TOL

    # ========================================
    # SUBSPACES
    # ========================================

    def empty_subspace(self, dim: int) -> ProjectiveSubspace:
        return ProjectiveSubspace((), Event.zero(dim))

    def whole_space(self, dim: int) -> ProjectiveSubspace:
        return self.subspace_from_event(Event.identity(dim))

    def _subspace_from_basis(self, basis: np.ndarray, dim: int) -> ProjectiveSubspace:
        frame = tuple(UnitVector.from_vector(HilbertVector(basis[:, k])) for k in range(basis.shape[1]))
        return ProjectiveSubspace(frame, self.hilbert.event_from_frame(list(frame), dim))

    def subspace_from_event(self, event: Union[Event, np.ndarray]) -> ProjectiveSubspace:
        """
        pi'(E): the projective subspace of Ran E. pi'(0) is empty, pi'(I) is CP(H).
        """
        if not isinstance(event, Event):
            event = Event.from_matrix(event, self.config.OP_TOL)
        if event.rank == 0:
            return self.empty_subspace(event.dim)
        _, vectors = np.linalg.eigh((event.matrix + event.matrix.conj().T) / 2)
        # eigh sorts ascending, so Ran E is spanned by the last rank columns
        basis = vectors[:, event.dim - event.rank:]
        frame = tuple(UnitVector.from_vector(HilbertVector(basis[:, k])) for k in range(event.rank))
        return ProjectiveSubspace(frame, event)

    def subspace_from_points(self, points: Sequence[ProjectivePoint], dim: Optional[int] = None) -> ProjectiveSubspace:
        """Smallest projective subspace containing the given points"""
        if not points:
            if dim is None:
                raise ValueError("dim is required when no points are given")
            return self.empty_subspace(dim)
        dim = points[0].dim if dim is None else dim
        for point in points:
            require_same_dim(dim, point.dim, "subspace_from_points")
        return self._span(np.column_stack([p.entries for p in points]), dim)

    def orthogonal_complement(self, subspace: ProjectiveSubspace) -> ProjectiveSubspace:
        """S^perp = pi'(I - E)"""
        return self.subspace_from_event(subspace.event.complement())

    def point_in_subspace(self, x: ProjectivePoint, subspace: ProjectiveSubspace) -> bool:
        require_same_dim(x.dim, subspace.dim, "point_in_subspace")
        residual = np.linalg.norm(subspace.event.matrix @ x.entries - x.entries)
        return bool(residual <= self.config.MEMBERSHIP_TOL)

    def subspace_equal(self, first: ProjectiveSubspace, second: ProjectiveSubspace) -> bool:
        """Equality of the underlying projections, max |E1 - E2| <= OP_TOL"""
        if first.dim != second.dim:
            return False
        return bool(np.max(np.abs(first.event.matrix - second.event.matrix)) <= self.config.OP_TOL)

    # ========================================
    # PROJECTION THEOREM
    # ========================================

    def _require_non_empty(self, subspace: ProjectiveSubspace, operation: str) -> None:
        if subspace.is_empty:
            raise EmptySubspaceError(
                f"{operation} needs a non-empty projective subspace; the empty subspace (dimension -1) was given"
            )

    def distance_to_subspace(self, x: ProjectivePoint, subspace: ProjectiveSubspace) -> float:
        """
        d(x, S) = inf over y in S of d(x, y) = arccos ||E psi||
        """
        self._require_non_empty(subspace, "distance_to_subspace")
        require_same_dim(x.dim, subspace.dim, "distance_to_subspace")
        projected = subspace.event.matrix @ x.entries
        return float(np.arctan2(np.linalg.norm(x.entries - projected), np.linalg.norm(projected)))

    def project_onto_subspace(self, x: ProjectivePoint, subspace: ProjectiveSubspace) -> ProjectionResult:
        """
        Pj(x | S): the unique nearest point pi_3(E psi) when x is not in S^perp,
        otherwise all of S, every point of which lies at distance pi/2.
        """
        self._require_non_empty(subspace, "project_onto_subspace")
        require_same_dim(x.dim, subspace.dim, "project_onto_subspace")
        projected = subspace.event.matrix @ x.entries
        length = np.linalg.norm(projected)
        if length <= self.config.ORTH_TOL:
            return ProjectionResult(ProjectionKind.WHOLE_SUBSPACE, HALF_PI, subspace=subspace)
        distance = float(np.arctan2(np.linalg.norm(x.entries - projected), length))
        return ProjectionResult(
            ProjectionKind.NEAREST_POINT,
            distance,
            nearest_point=self.pi3_project(HilbertVector(projected)),
        )

    # ========================================
    # GEODESICS
    # ========================================

    def _fallback_direction(self, psi: np.ndarray) -> np.ndarray:
        """
        Lowest-index coordinate direction with its psi-component removed.
        Some |psi_k|^2 <= 1/2, so the residual norm is at least 1/sqrt(2) there.
        """
        for k in range(psi.shape[0]):
            direction = -psi[k].conjugate() * psi
            direction[k] += 1.0
            norm = np.linalg.norm(direction)
            if norm >= 0.5:
                return direction / norm
        raise AssertionError("no coordinate direction transverse to a unit vector")

    def shortest_geodesic_sphere(self, psi: UnitVector, phi: UnitVector) -> Geodesic:
        """
        Great circle from psi towards phi of length theta. Unique iff theta < pi;
        for antipodal endpoints one deterministic half great circle is returned.
        """
        require_same_dim(psi.dim, phi.dim, "shortest_geodesic_sphere")
        cos_t = float(np.vdot(psi.entries, phi.entries).real)
        direction = phi.entries - cos_t * psi.entries
        sin_t = np.linalg.norm(direction)
        length = float(np.arctan2(sin_t, cos_t))
        if sin_t > self.config.ORTH_TOL:
            tangent = direction / sin_t
            unique = True
        else:
            tangent = self._fallback_direction(psi.entries)
            unique = cos_t > 0
        return Geodesic(GeodesicSpace.SPHERE, psi, phi, psi, tangent, length, unique)

    def shortest_geodesic_projective(self, x: ProjectivePoint, y: ProjectivePoint) -> Geodesic:
        """
        Horizontal great circle from rep(x) to the representative of y in phase
        with it (<psi, phi'> >= 0). Unique iff d(x, y) < pi/2; for orthogonal
        points the canonical representative of y fixes the curve.
        """
        require_same_dim(x.dim, y.dim, "shortest_geodesic_projective")
        psi = x.entries
        inner = complex(np.vdot(psi, y.entries))
        modulus = abs(inner)
        phi = y.entries * (inner.conjugate() / modulus) if modulus > self.config.ORTH_TOL else y.entries
        direction = phi - np.vdot(psi, phi) * psi
        sin_a = np.linalg.norm(direction)
        if sin_a > self.config.ORTH_TOL:
            tangent = direction / sin_a
            tangent = tangent - np.vdot(psi, tangent) * psi
            tangent = tangent / np.linalg.norm(tangent)
        else:
            tangent = self._fallback_direction(psi)
        length = float(np.arctan2(sin_a, modulus))
        unique = not self.is_orthogonal(x, y)
        return Geodesic(GeodesicSpace.PROJECTIVE, x, y, x.rep, tangent, length, unique)

    def geodesic_point(self, geodesic: Geodesic, t: float) -> Union[UnitVector, ProjectivePoint]:
        """Point at arc-length t: on S(H) for sphere geodesics, pi_2 of the lift otherwise"""
        lifted = UnitVector.from_vector(HilbertVector(geodesic.lift_at(t)), self.config.ZERO_NORM)
        if geodesic.space is GeodesicSpace.SPHERE:
            return lifted
        return self.pi2_project(lifted)

    def geodesic_samples(self, geodesic: Geodesic, steps: int) -> List[Union[UnitVector, ProjectivePoint]]:
        """
        steps + 1 points equally spaced in arc length; a single point for a
        zero-length curve
        """
        if steps < 1:
            raise ValueError(f"steps must be positive, got {steps}")
        if geodesic.length <= self.config.ORTH_TOL:
            return [self.geodesic_point(geodesic, 0.0)]
        return [self.geodesic_point(geodesic, geodesic.length * k / steps) for k in range(steps + 1)]

    def horizontal_lift(self, geodesic: Geodesic, start_rep: UnitVector) -> Geodesic:
        """
        Unique horizontal curve on S(H) through start_rep projecting onto the
        projective geodesic; it has the same length.
        """
        if geodesic.space is not GeodesicSpace.PROJECTIVE:
            raise ValueError("horizontal_lift expects a geodesic of projective space")
        require_same_dim(geodesic.start_rep.dim, start_rep.dim, "horizontal_lift")
        start = self.pi2_project(start_rep)
        if not start.equals(geodesic.start, self.config.MEMBERSHIP_TOL):
            raise FiberMismatchError("start_rep does not project to the start of the geodesic")
        phase = complex(np.vdot(geodesic.start_rep.entries, start_rep.entries))
        phase /= abs(phase)
        tangent = phase * geodesic.horizontal_unit_tangent
        end_entries = math.cos(geodesic.length) * start_rep.entries + math.sin(geodesic.length) * tangent
        end = UnitVector.from_vector(HilbertVector(end_entries), self.config.ZERO_NORM)
        return Geodesic(GeodesicSpace.SPHERE, start_rep, end, start_rep, tangent, geodesic.length, True)

    # ========================================
    # LATTICE
    # ========================================

    def _span(self, columns: np.ndarray, dim: int) -> ProjectiveSubspace:
        if columns.shape[1] == 0:
            return self.empty_subspace(dim)
        left, singular, _ = scipy.linalg.svd(columns, full_matrices=False)
        return self._subspace_from_basis(left[:, singular > self.config.RANK_TOL], dim)

    def meet(self, first: ProjectiveSubspace, second: ProjectiveSubspace) -> ProjectiveSubspace:
        """
        S1 ^ S2 = pi'(projection onto Ran E1 n Ran E2): the null space of the
        positive operator (I - E1) + (I - E2), singular values below RANK_TOL
        counted as zero.
        """
        require_same_dim(first.dim, second.dim, "meet")
        dim = first.dim
        identity = np.eye(dim, dtype=np.complex128)
        stacked = (identity - first.event.matrix) + (identity - second.event.matrix)
        _, singular, right = scipy.linalg.svd(stacked)
        null_basis = right[singular <= self.config.RANK_TOL].conj().T
        if null_basis.shape[1] == 0:
            return self.empty_subspace(dim)
        return self._subspace_from_basis(null_basis, dim)

    def join(self, first: ProjectiveSubspace, second: ProjectiveSubspace) -> ProjectiveSubspace:
        """S1 v S2 = pi'(projection onto span(Ran E1 u Ran E2))"""
        require_same_dim(first.dim, second.dim, "join")
        return self._span(np.hstack([first.basis(), second.basis()]), first.dim)
