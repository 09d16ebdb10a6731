from .config import settings, Settings
from .exceptions import (
    GeometryError,
    InvalidVectorError,
    ZeroVectorError,
    DimensionMismatchError,
    InvalidEventError,
    RankDeficiencyError,
    InadmissibleEventError,
    EmptySubspaceError,
    UndefinedConditionalError,
    VerificationInputError,
    FiberMismatchError,
    ConsistencyError,
)

__all__ = [
    "settings",
    "Settings",
    "GeometryError",
    "InvalidVectorError",
    "ZeroVectorError",
    "DimensionMismatchError",
    "InvalidEventError",
    "RankDeficiencyError",
    "InadmissibleEventError",
    "EmptySubspaceError",
    "UndefinedConditionalError",
    "VerificationInputError",
    "FiberMismatchError",
    "ConsistencyError",
]
