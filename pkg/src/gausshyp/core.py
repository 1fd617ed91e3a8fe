"""Scalar numerics shared by every evaluation route.

Principal-branch complex powers, rising factorials, real-argument gamma,
and the (a, b, c) parameter triple with its validity checks.  Parameters
are restricted to real values; complex parameters are out of scope.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, ParamDomainError, PoleError

#: Unit roundoff of IEEE double precision.
EPS = 2.220446049250313e-16

#: Tolerance for "is this float an integer" checks on parameters.
_INT_TOL = 1e-12


def require_finite_complex(z: complex, name: str = "z") -> complex:
    """Reject NaN/Inf components up front; comparisons with NaN are unordered
    and would otherwise slip past domain gates."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must have finite components, got {z}")
    return z


def cpow_principal(base: complex, exponent: float) -> complex:
    """Principal-branch power base**exponent = exp(exponent * Log base).

    Log is the principal logarithm with phase in (-pi, pi]; points on the
    negative real axis take the +pi side of the cut, so an imaginary part
    of -0.0 is collapsed to +0.0 before taking the logarithm.

    Raises DomainError for a zero base with non-positive exponent.
    """
    b = complex(base)
    if b.imag == 0.0:
        b = complex(b.real, 0.0)
    if b == 0:
        if exponent <= 0:
            raise DomainError("zero base with non-positive exponent")
        return 0j
    return cmath.exp(exponent * cmath.log(b))


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be non-negative")
    p = 1.0
    for k in range(n):
        p *= x + k
    return p


def gamma_real(x: float) -> float:
    """Euler gamma for real argument.

    Delegates to math.gamma (a Lanczos-type rational approximation with
    reflection for small arguments, accurate to ~1 ulp), adding an explicit
    pole check so non-positive integer arguments raise PoleError.
    """
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"gamma pole at {x}")
    try:
        return math.gamma(x)
    except ValueError as exc:  # pragma: no cover - guarded above
        raise PoleError(f"gamma pole at {x}") from exc


def recip_gamma_real(x: float) -> float:
    """1 / gamma(x), which is entire: returns 0.0 at the poles of gamma."""
    if x <= 0 and x == math.floor(x):
        return 0.0
    return 1.0 / math.gamma(x)


@dataclass(frozen=True)
class HypParams:
    """Real parameter triple (a, b, c) of 2F1(a, b, c; z).

    c must not be zero or a negative integer: (c)_n appears in series
    denominators.  euler_valid flags the constraint c > b > 0 required by
    the integral representation.
    """

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ParamDomainError(f"parameter {name} must be finite, got {v}")
        if self.c <= 0.5 and abs(self.c - round(self.c)) < _INT_TOL and round(self.c) <= 0:
            raise ParamDomainError(
                f"c = {self.c} is zero or a negative integer (pole of every series denominator)"
            )

    @property
    def euler_valid(self) -> bool:
        """True when c > b > 0, the validity condition of the Euler integral."""
        return self.c > self.b > 0
