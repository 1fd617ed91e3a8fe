"""Result containers: evaluation outcomes, region verdicts, method identifiers."""

import enum
from dataclasses import dataclass


class MethodId(enum.Enum):
    """The seven computation routes exposed by the library."""

    MACLAURIN = "maclaurin"
    EULER = "euler-oracle"
    BUHRING = "buhring"
    ONEPOINT_HALF = "onepoint-half"
    ONEPOINT_W = "onepoint-w"
    TWOPOINT = "twopoint"
    THREEPOINT = "threepoint"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, name: str) -> "MethodId":
        for m in cls:
            if m.value == name:
                return m
        raise ValueError(f"unknown method {name!r}")


@dataclass(frozen=True)
class SeriesResult:
    """Computed value plus truncation bookkeeping.

    est_error is a relative error estimate (last-term ratio for series,
    quadrature error report for the integral oracle), floored at the
    double-precision rounding level of the summation.  converged is True
    exactly when est_error is at or below the tolerance the caller asked for.
    """

    value: complex
    terms_used: int
    est_error: float
    converged: bool

    def __post_init__(self) -> None:
        if self.est_error < 0:
            raise ValueError("est_error must be non-negative")


@dataclass(frozen=True)
class RegionVerdict:
    """Membership in a convergence region, with a signed margin.

    margin > 0 means strictly inside; the magnitude is the slack in the
    defining inequality (not a Euclidean distance).
    """

    inside: bool
    margin: float
