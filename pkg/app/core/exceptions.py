"""
Domain errors raised by the geometry services.

Each error carries a stable ``error_code``, the CLI ``exit_code`` and the
HTTP ``status_code`` used by the routers.
"""

from typing import Any, Dict

class GeometryError(ValueError):
    """Base class for all domain failures"""

    error_code: str = "geometry_error"
    exit_code: int = 2
    status_code: int = 422

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_detail(self) -> Dict[str, Any]:
        """Error payload for HTTP responses"""
        return {"error_code": self.error_code, "message": self.message}

class InvalidVectorError(GeometryError):
    """Vector with dim < 2 or non-finite entries"""
    error_code = "invalid_vector"
    exit_code = 2

class ZeroVectorError(GeometryError):
    """Vector too close to zero to have a direction"""
    error_code = "zero_vector"
    exit_code = 2

class DimensionMismatchError(GeometryError):
    """Operands live in incompatible spaces"""
    error_code = "dimension_mismatch"
    exit_code = 3

class InvalidEventError(GeometryError):
    """Matrix fails E = E^2 = E*"""
    error_code = "invalid_event"
    exit_code = 4

class RankDeficiencyError(InvalidEventError):
    """Frame columns are linearly dependent"""
    error_code = "rank_deficient_frame"

class InadmissibleEventError(InvalidEventError):
    """Event lies outside the configured event family"""
    error_code = "inadmissible_event"

class EmptySubspaceError(GeometryError):
    """Operation needs a non-empty projective subspace"""
    error_code = "empty_subspace"
    exit_code = 5

class UndefinedConditionalError(GeometryError):
    """Conditioning event has probability zero"""
    error_code = "undefined_conditional"
    exit_code = 5

class VerificationInputError(GeometryError):
    """Bad parameters for the random generators or verification suites"""
    error_code = "invalid_verification_input"
    exit_code = 2

class FiberMismatchError(GeometryError):
    """Representative does not lie over the expected projective point"""
    error_code = "fiber_mismatch"
    exit_code = 2

class ConsistencyError(GeometryError):
    """Two derivations of the same quantity disagree beyond tolerance"""
    error_code = "consistency_failure"
    exit_code = 1
    status_code = 500

def require_same_dim(left: int, right: int, what: str = "operands") -> None:
    """Raise DimensionMismatchError unless both dimensions agree"""
    if left != right:
        raise DimensionMismatchError(
            f"Incompatible spaces for {what}: dimension {left} vs {right}"
        )
