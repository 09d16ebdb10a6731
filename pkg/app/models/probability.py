from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import ConsistencyError, require_same_dim
from app.models.projective import ProjectivePoint, ProjectiveSubspace

class Derivation(str, Enum):
    GEOMETRIC = "geometric"
    ORACLE = "oracle"

@dataclass(frozen=True)
class ProbabilityValue:
    """
    A probability and how it was obtained. Geometric values lie in
    [0, 1 + PROBABILITY_SLACK]; operator values may overshoot by OP_TOL, the
    slack events are accepted with.
    """

    value: float
    derivation: Derivation

    def __post_init__(self):
        slack = settings.PROBABILITY_SLACK if self.derivation is Derivation.GEOMETRIC else settings.OP_TOL
        if not -slack <= self.value <= 1.0 + slack:
            raise ConsistencyError(f"{self.derivation.value} probability {self.value!r} lies outside [0, 1]")

@dataclass(frozen=True, eq=False)
class EventChain:
    """Time-ordered subspaces; the first entry is measured first"""

    subspaces: Tuple[ProjectiveSubspace, ...]
    ambient_dim: int

    @classmethod
    def of(cls, subspaces: Sequence[ProjectiveSubspace], ambient_dim: Optional[int] = None) -> "EventChain":
        subspaces = tuple(subspaces)
        if ambient_dim is None:
            if not subspaces:
                raise ValueError("ambient_dim is required for an empty chain")
            ambient_dim = subspaces[0].dim
        for subspace in subspaces:
            require_same_dim(ambient_dim, subspace.dim, "event chain")
        return cls(subspaces, ambient_dim)

    def __len__(self) -> int:
        return len(self.subspaces)

    def prefix(self, length: int) -> "EventChain":
        return EventChain(self.subspaces[:length], self.ambient_dim)

@dataclass(frozen=True, eq=False)
class ChainStep:
    """One factor of a consecutive probability"""

    step: int
    distance: float
    factor: float
    point: Optional[ProjectivePoint]
    orthogonal: bool = False
