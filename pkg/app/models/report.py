from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

def json_float(value: float) -> Optional[float]:
    """Non-finite values have no JSON spelling and are reported as null"""
    return value if math.isfinite(value) else None

@dataclass(frozen=True)
class Observation:
    """One compared quantity inside a verification trial"""

    check: str
    case: str
    expected: float
    got: float
    tolerance: float

    @property
    def error(self) -> float:
        return abs(self.got - self.expected)

    @property
    def failed(self) -> bool:
        # NaN never passes
        return not self.error <= self.tolerance

@dataclass(frozen=True)
class VerificationFailure:
    case: str
    expected: float
    got: float
    error: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case,
            "expected": json_float(self.expected),
            "got": json_float(self.got),
            "error": json_float(self.error),
        }

@dataclass(frozen=True)
class CheckSummary:
    tolerance: float
    max_abs_error: float
    count: int
    failures: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tolerance": self.tolerance,
            "max_abs_error": json_float(self.max_abs_error),
            "count": self.count,
            "failures": self.failures,
        }

@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of one verification suite.

    ``max_abs_error`` covers the checks held to the suite ``tolerance``;
    checks with looser tolerances (membership residuals, the sampling
    oracle) are summarized under ``checks``. Within every check, failures
    are recorded exactly when an error exceeds that check's tolerance.
    """

    suite: str
    seed: int
    trials: int
    tolerance: float
    max_abs_error: float
    failures: List[VerificationFailure] = field(default_factory=list)
    checks: Dict[str, CheckSummary] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        payload = {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "max_abs_error": json_float(self.max_abs_error),
            "failures": [failure.to_dict() for failure in self.failures],
            "checks": {name: summary.to_dict() for name, summary in self.checks.items()},
            "passed": self.passed,
        }
        if include_elapsed:
            payload["elapsed_seconds"] = self.elapsed
        return payload

def _max_error(errors: List[float]) -> float:
    # NaN poisons the maximum
    return float("inf") if any(error != error for error in errors) else max(errors)

def build_report(
    suite: str,
    seed: int,
    trials: int,
    tolerance: float,
    observations: List[Observation],
    elapsed: float,
) -> VerificationReport:
    """Aggregate observations (already in deterministic order) into a report"""
    failures: List[VerificationFailure] = []
    errors: Dict[str, List[float]] = {}
    tolerances: Dict[str, float] = {}
    failed_counts: Dict[str, int] = {}
    max_abs_error = 0.0
    for observation in observations:
        error = observation.error
        errors.setdefault(observation.check, []).append(error)
        tolerances.setdefault(observation.check, observation.tolerance)
        failed_counts.setdefault(observation.check, 0)
        if observation.failed:
            failed_counts[observation.check] += 1
            failures.append(
                VerificationFailure(
                    f"{observation.check}: {observation.case}",
                    observation.expected,
                    observation.got,
                    error,
                )
            )
        if observation.tolerance <= tolerance:
            max_abs_error = max(max_abs_error, error) if error == error else float("inf")
    checks = {
        name: CheckSummary(tolerances[name], _max_error(values), len(values), failed_counts[name])
        for name, values in errors.items()
    }
    return VerificationReport(suite, seed, trials, tolerance, max_abs_error, failures, checks, elapsed)
