"""
Values living in complex projective space CP(H) and on the unit sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from app.models.hilbert import Event, UnitVector

@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A ray of C^n stored through its phase-canonical unit representative"""

    rep: UnitVector

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def entries(self) -> np.ndarray:
        return self.rep.entries

    def equals(self, other: "ProjectivePoint", tol: float = 1e-9) -> bool:
        """Componentwise equality of canonical representatives"""
        return self.dim == other.dim and bool(np.max(np.abs(self.entries - other.entries)) <= tol)

@dataclass(frozen=True, eq=False)
class ProjectiveSubspace:
    """
    Image of an event in CP(H): an orthonormal frame spanning Ran E plus the
    cached projection. The empty frame is the empty subspace (dimension -1).
    """

    frame: Tuple[UnitVector, ...]
    event: Event

    @property
    def dim(self) -> int:
        return self.event.dim

    @property
    def projective_dim(self) -> int:
        return len(self.frame) - 1

    @property
    def is_empty(self) -> bool:
        return not self.frame

    def basis(self) -> np.ndarray:
        """Frame as an n x k matrix of columns"""
        if not self.frame:
            return np.zeros((self.dim, 0), dtype=np.complex128)
        return np.column_stack([column.entries for column in self.frame])

class GeodesicSpace(str, Enum):
    SPHERE = "sphere"
    PROJECTIVE = "projective"

@dataclass(frozen=True, eq=False)
class Geodesic:
    """
    Shortest curve t -> cos(t) psi + sin(t) u, t in [0, length].

    For projective geodesics the curve is the horizontal lift through
    ``start_rep`` and points are read off through pi_2.
    """

    space: GeodesicSpace
    start: Union[UnitVector, ProjectivePoint]
    end: Union[UnitVector, ProjectivePoint]
    start_rep: UnitVector
    horizontal_unit_tangent: np.ndarray
    length: float
    unique: bool

    def __post_init__(self):
        tangent = np.array(self.horizontal_unit_tangent, dtype=np.complex128, copy=True)
        tangent.setflags(write=False)
        object.__setattr__(self, "horizontal_unit_tangent", tangent)

    def lift_at(self, t: float) -> np.ndarray:
        """Point of the (lifted) great circle at parameter t"""
        return np.cos(t) * self.start_rep.entries + np.sin(t) * self.horizontal_unit_tangent

    def velocity_at(self, t: float) -> np.ndarray:
        return -np.sin(t) * self.start_rep.entries + np.cos(t) * self.horizontal_unit_tangent

class ProjectionKind(str, Enum):
    NEAREST_POINT = "nearest_point"
    WHOLE_SUBSPACE = "whole_subspace"

@dataclass(frozen=True, eq=False)
class ProjectionResult:
    """Projection of a point on a non-empty subspace: a unique point, or all of S"""

    kind: ProjectionKind
    distance: float
    nearest_point: Optional[ProjectivePoint] = None
    subspace: Optional[ProjectiveSubspace] = None

    @property
    def is_nearest_point(self) -> bool:
        return self.kind is ProjectionKind.NEAREST_POINT

    @property
    def is_whole_subspace(self) -> bool:
        return self.kind is ProjectionKind.WHOLE_SUBSPACE
