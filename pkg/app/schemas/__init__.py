from .documents import VectorDocument, EventDocument, parse_document
from .requests import (
    DistRequest,
    ProbRequest,
    SeqProbRequest,
    ProjectRequest,
    GeodesicRequest,
    VerifyRequest,
)
from .responses import ServiceResponse

__all__ = [
    "VectorDocument",
    "EventDocument",
    "parse_document",
    "DistRequest",
    "ProbRequest",
    "SeqProbRequest",
    "ProjectRequest",
    "GeodesicRequest",
    "VerifyRequest",
    "ServiceResponse",
]
