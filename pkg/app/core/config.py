from typing import Dict, List
from pydantic_settings import BaseSettings

class Settings(BaseSettings):
    """Application settings"""

    # Application
    APP_NAME: str = "Projective Probability"
    VERSION: str = "1.0.0"
    DESCRIPTION: str = "Quantum probabilities computed from the Fubini-Study geometry of complex projective space"

    # CORS
    ALLOWED_HOSTS: List[str] = ["*"]

    # API
    API_V1_STR: str = "/api/v1"

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Numerical tolerances (64-bit floating point throughout)
    UNIT_TOL: float = 1e-10
    OP_TOL: float = 1e-9
    FRAME_TOL: float = 1e-9
    ZERO_NORM: float = 1e-12
    ORTH_TOL: float = 1e-9
    PHASE_TOL: float = 1e-10
    MEMBERSHIP_TOL: float = 1e-8
    RANK_TOL: float = 1e-9
    COND_TOL: float = 1e-12
    PROBABILITY_SLACK: float = 1e-12

    # Verification harness
    VERIFY_TOL: float = 1e-9
    BORN_TOL: float = 1e-10
    DIAMETER_SLACK: float = 1e-12
    ORACLE_TOL: float = 1e-6
    ORACLE_FLOOR: float = 1e-7
    ORACLE_SAMPLES: int = 10000
    GOLDEN_ITERATIONS: int = 60
    VERIFY_WORKERS: int = 4

    # Command defaults
    DEFAULT_SEED: int = 0
    DEFAULT_DIMS: str = "2,3,4,8,16"
    DEFAULT_TRIALS: int = 1000
    DEFAULT_MAX_CHAIN: int = 8
    GEODESIC_STEPS: int = 16

    model_config = {"env_file": ".env", "case_sensitive": True, "env_prefix": "PROJECTIVE_"}

    def tolerances(self) -> Dict[str, float]:
        """
        Active tolerance values, as reported by --tol-report
        """
        return {
            "unit_tol": self.UNIT_TOL,
            "op_tol": self.OP_TOL,
            "frame_tol": self.FRAME_TOL,
            "zero_norm": self.ZERO_NORM,
            "orth_tol": self.ORTH_TOL,
            "membership_tol": self.MEMBERSHIP_TOL,
            "rank_tol": self.RANK_TOL,
            "cond_tol": self.COND_TOL,
            "verify_tol": self.VERIFY_TOL,
            "oracle_tol": self.ORACLE_TOL,
        }

# Create settings instance
settings = Settings()
