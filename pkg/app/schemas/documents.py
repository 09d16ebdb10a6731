"""
JSON documents for states and events.

Complex numbers travel as [re, im] pairs. Structural problems (wrong
shapes, non-finite values, both or neither of frame/matrix) are pydantic
validation errors; mathematical ones (dimension mismatch, a matrix that is
not a projection, a dependent frame) surface as GeometryError subclasses
when the document is converted into a domain value.
"""

import math
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.exceptions import DimensionMismatchError, InvalidEventError
from app.models.hilbert import Event, HilbertVector
from app.models.projective import ProjectivePoint

Pair = Tuple[float, float]

def _check_finite(pairs: List[Pair]) -> List[Pair]:
    for re, im in pairs:
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError("entries must be finite")
    return pairs

def _to_complex(pairs: List[Pair]) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)

def _to_pairs(values: np.ndarray) -> List[Pair]:
    return [(float(v.real), float(v.imag)) for v in values]

class VectorDocument(BaseModel):
    """A vector of C^dim"""

    model_config = ConfigDict(extra="forbid")

    dim: int = Field(ge=2)
    entries: List[Pair]

    @field_validator("entries")
    @classmethod
    def entries_finite(cls, value: List[Pair]) -> List[Pair]:
        return _check_finite(value)

    @model_validator(mode="after")
    def length_matches_dim(self) -> "VectorDocument":
        if len(self.entries) != self.dim:
            raise ValueError(f"expected {self.dim} entries, got {len(self.entries)}")
        return self

    def to_vector(self) -> HilbertVector:
        return HilbertVector(_to_complex(self.entries))

    @classmethod
    def from_array(cls, values: np.ndarray) -> "VectorDocument":
        return cls(dim=int(values.shape[0]), entries=_to_pairs(values))

    @classmethod
    def from_point(cls, point: ProjectivePoint) -> "VectorDocument":
        """Document of the canonical representative"""
        return cls.from_array(point.entries)

class EventDocument(BaseModel):
    """An event given by a spanning frame or by its projection matrix"""

    model_config = ConfigDict(extra="forbid")

    dim: Optional[int] = Field(default=None, ge=2)
    frame: Optional[List[VectorDocument]] = None
    matrix: Optional[List[List[Pair]]] = None

    @field_validator("matrix")
    @classmethod
    def matrix_finite(cls, value: Optional[List[List[Pair]]]) -> Optional[List[List[Pair]]]:
        if value is not None:
            for row in value:
                _check_finite(row)
        return value

    @model_validator(mode="after")
    def exactly_one_form(self) -> "EventDocument":
        if (self.frame is None) == (self.matrix is None):
            raise ValueError("exactly one of 'frame' or 'matrix' must be given")
        if self.frame is not None and not self.frame and self.dim is None:
            raise ValueError("an empty frame needs 'dim'")
        return self

    def to_event(self, hilbert) -> Event:
        """
        Build the Event; ``hilbert`` (a HilbertService) orthonormalizes frames
        """
        if self.frame is not None:
            event = hilbert.event_from_frame([column.to_vector() for column in self.frame], self.dim)
        else:
            rows = [_to_complex(row) for row in self.matrix]
            if not rows or any(row.shape[0] != len(rows) for row in rows):
                raise InvalidEventError("Event matrix must be square")
            event = Event.from_matrix(np.vstack(rows), hilbert.config.OP_TOL)
        if self.dim is not None and self.dim != event.dim:
            raise DimensionMismatchError(f"Event document declares dim {self.dim} but has dimension {event.dim}")
        return event

    @classmethod
    def from_event(cls, event: Event) -> "EventDocument":
        return cls(dim=event.dim, matrix=[_to_pairs(row) for row in event.matrix])

Document = Union[VectorDocument, EventDocument]

def parse_document(data: Dict[str, Any]) -> Document:
    """Event documents carry 'frame' or 'matrix'; anything else is read as a vector"""
    if isinstance(data, dict) and ("frame" in data or "matrix" in data):
        return EventDocument.model_validate(data)
    return VectorDocument.model_validate(data)
