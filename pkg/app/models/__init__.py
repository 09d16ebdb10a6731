from .hilbert import HilbertVector, UnitVector, Event, EventFamily
from .projective import (
    ProjectivePoint,
    ProjectiveSubspace,
    Geodesic,
    GeodesicSpace,
    ProjectionKind,
    ProjectionResult,
)
from .probability import Derivation, ProbabilityValue, EventChain, ChainStep
from .random_source import RandomSource
from .report import Observation, VerificationFailure, CheckSummary, VerificationReport, build_report, json_float

__all__ = [
    "HilbertVector",
    "UnitVector",
    "Event",
    "EventFamily",
    "ProjectivePoint",
    "ProjectiveSubspace",
    "Geodesic",
    "GeodesicSpace",
    "ProjectionKind",
    "ProjectionResult",
    "Derivation",
    "ProbabilityValue",
    "EventChain",
    "ChainStep",
    "RandomSource",
    "Observation",
    "VerificationFailure",
    "CheckSummary",
    "VerificationReport",
    "build_report",
    "json_float",
]
