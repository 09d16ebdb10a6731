from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .documents import EventDocument, VectorDocument

class CommandRequest(BaseModel):
    """Fields shared by every command request"""
    tol_report: bool = False

class DistRequest(CommandRequest):
    """Distance from ``state`` to either ``other`` or the subspace of ``event``"""
    state: VectorDocument
    other: Optional[VectorDocument] = None
    event: Optional[EventDocument] = None

    @model_validator(mode="after")
    def one_target(self) -> "DistRequest":
        if (self.other is None) == (self.event is None):
            raise ValueError("exactly one of 'other' or 'event' must be given")
        return self

class ProbRequest(CommandRequest):
    state: VectorDocument
    event: EventDocument

class SeqProbRequest(CommandRequest):
    """Events are listed in time order"""
    state: VectorDocument
    events: List[EventDocument] = Field(default_factory=list)

class ProjectRequest(CommandRequest):
    state: VectorDocument
    event: EventDocument

class GeodesicRequest(CommandRequest):
    start: VectorDocument
    end: VectorDocument
    steps: Optional[int] = Field(default=None, ge=1)

class VerifyRequest(CommandRequest):
    seed: Optional[int] = Field(default=None, ge=0, lt=2 ** 64)
    dims: Optional[List[int]] = None
    trials: Optional[int] = Field(default=None, ge=1)
    max_chain: Optional[int] = Field(default=None, ge=1)
    suite: Literal["projection", "probability", "born", "geometry", "all"] = "all"
    workers: Optional[int] = Field(default=None, ge=1)
