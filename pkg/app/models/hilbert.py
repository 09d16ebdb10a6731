"""
Hilbert-space values: vectors, unit vectors, events and event families.

All values are immutable; their numpy buffers are flagged read-only at
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.exceptions import (
    InadmissibleEventError,
    InvalidEventError,
    InvalidVectorError,
    ZeroVectorError,
    require_same_dim,
)

def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array

@dataclass(frozen=True, eq=False)
class HilbertVector:
    """Element of C^n with n >= 2 and finite entries"""

    entries: np.ndarray

    def __post_init__(self):
        entries = _frozen(self.entries)
        if entries.ndim != 1:
            raise InvalidVectorError(f"Expected a 1-d array of amplitudes, got shape {entries.shape}")
        if entries.shape[0] < 2:
            raise InvalidVectorError(f"Dimension must be at least 2, got {entries.shape[0]}")
        if not np.all(np.isfinite(entries)):
            raise InvalidVectorError("Vector entries must be finite")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, values: Iterable[complex]) -> "HilbertVector":
        return cls(np.asarray(list(values), dtype=np.complex128))

    @classmethod
    def basis(cls, dim: int, index: int) -> "HilbertVector":
        """Standard basis vector e_{index+1} of C^dim"""
        entries = np.zeros(dim, dtype=np.complex128)
        entries[index] = 1.0
        return cls(entries)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def scaled(self, factor: complex) -> "HilbertVector":
        return HilbertVector(factor * self.entries)

    def __neg__(self) -> "HilbertVector":
        return HilbertVector(-self.entries)

@dataclass(frozen=True, eq=False)
class UnitVector:
    """Norm-one element of the unit sphere S(H)"""

    vector: HilbertVector

    def __post_init__(self):
        defect = abs(self.vector.norm() - 1.0)
        if defect > settings.UNIT_TOL:
            raise InvalidVectorError(
                f"Unit vector has norm {self.vector.norm()!r}; use UnitVector.from_vector to normalize"
            )

    @classmethod
    def from_vector(cls, vector: HilbertVector, zero_norm: float = None) -> "UnitVector":
        """
        Normalize ``vector``; norms at or below ``zero_norm`` have no direction
        """
        zero_norm = settings.ZERO_NORM if zero_norm is None else zero_norm
        norm = vector.norm()
        if norm <= zero_norm:
            raise ZeroVectorError(
                f"Vector norm {norm:.3e} is below {zero_norm:.0e}; zero has no direction"
            )
        return cls(HilbertVector(vector.entries / norm))

    @classmethod
    def of(cls, values: Iterable[complex]) -> "UnitVector":
        return cls.from_vector(HilbertVector.of(values))

    @classmethod
    def basis(cls, dim: int, index: int) -> "UnitVector":
        return cls(HilbertVector.basis(dim, index))

    @property
    def entries(self) -> np.ndarray:
        return self.vector.entries

    @property
    def dim(self) -> int:
        return self.vector.dim

    def with_phase(self, factor: complex) -> "UnitVector":
        """Multiply by a unimodular scalar (stays on the sphere)"""
        return UnitVector.from_vector(self.vector.scaled(factor))

    def __neg__(self) -> "UnitVector":
        return UnitVector(-self.vector)

@dataclass(frozen=True, eq=False)
class Event:
    """Orthogonal projection E = E^2 = E* on C^n"""

    matrix: np.ndarray
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, op_tol: float = None) -> "Event":
        """
        Validate self-adjointness and idempotence, then detect the rank
        """
        op_tol = settings.OP_TOL if op_tol is None else op_tol
        matrix = np.asarray(matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidEventError(f"Event matrix must be square, got shape {matrix.shape}")
        if matrix.shape[0] < 2:
            raise InvalidEventError(f"Dimension must be at least 2, got {matrix.shape[0]}")
        if not np.all(np.isfinite(matrix)):
            raise InvalidEventError("Event matrix entries must be finite")

        adjoint_defect = np.max(np.abs(matrix - matrix.conj().T))
        if adjoint_defect > op_tol:
            raise InvalidEventError(f"Event is not self-adjoint: max |E - E*| = {adjoint_defect:.3e}")
        idempotence_defect = np.max(np.abs(matrix @ matrix - matrix))
        if idempotence_defect > op_tol:
            raise InvalidEventError(f"Event is not idempotent: max |E^2 - E| = {idempotence_defect:.3e}")

        eigenvalues = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)
        rank = int(np.count_nonzero(np.abs(eigenvalues - 1.0) <= op_tol))
        return cls(matrix, rank)

    @classmethod
    def identity(cls, dim: int) -> "Event":
        return cls(np.eye(dim, dtype=np.complex128), dim)

    @classmethod
    def zero(cls, dim: int) -> "Event":
        return cls(np.zeros((dim, dim), dtype=np.complex128), 0)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def complement(self) -> "Event":
        """I - E"""
        return Event(np.eye(self.dim, dtype=np.complex128) - self.matrix, self.dim - self.rank)

@dataclass(frozen=True, eq=False)
class EventFamily:
    """
    Admissible events of a system: the projections commuting with every
    generator, i.e. the events of the commutant algebra. No generators
    means every event is admissible.
    """

    dim: int
    generators: Tuple[np.ndarray, ...] = field(default_factory=tuple)

    def __post_init__(self):
        frozen = []
        for generator in self.generators:
            generator = _frozen(generator)
            if generator.shape != (self.dim, self.dim):
                raise InvalidEventError(
                    f"Family generator has shape {generator.shape}, expected {(self.dim, self.dim)}"
                )
            if not np.allclose(generator, generator.conj().T, atol=settings.OP_TOL):
                raise InvalidEventError("Family generators must be self-adjoint")
            frozen.append(generator)
        object.__setattr__(self, "generators", tuple(frozen))

    @classmethod
    def full(cls, dim: int) -> "EventFamily":
        return cls(dim)

    @classmethod
    def commutant_of(cls, generators: Sequence[np.ndarray]) -> "EventFamily":
        generators = [np.asarray(g, dtype=np.complex128) for g in generators]
        if not generators:
            raise InvalidEventError("commutant_of needs at least one generator")
        return cls(generators[0].shape[0], tuple(generators))

    def admits(self, event: Event, op_tol: float = None) -> bool:
        op_tol = settings.OP_TOL if op_tol is None else op_tol
        if event.dim != self.dim:
            return False
        return all(
            np.max(np.abs(generator @ event.matrix - event.matrix @ generator)) <= op_tol
            for generator in self.generators
        )

    def require(self, event: Event, op_tol: float = None) -> Event:
        require_same_dim(self.dim, event.dim, "event family")
        if not self.admits(event, op_tol):
            raise InadmissibleEventError(
                f"Rank-{event.rank} event does not commute with the family generators"
            )
        return event
