"""Three-point rational expansion of 2F1 with base points t = 0, 1/2, 1.

The integrand factor f(t) = (1-zt)^(-a) has the three-point Taylor expansion

    f(t) = sum_n [A_n(a, z) + B_n(a, z) t + C_n(a, z) t^2] [t (t-1) (t-1/2)]^n,

convergent inside a Cassini oval |t(t-1)(t-1/2)| < r with three foci.  The
smallest oval containing (0, 1) has r = 1/(12 sqrt(3)) (the maximum of
|t(t-1)(t-1/2)| on the interval, attained at t = (3 +- sqrt(3))/6), and
keeping t = 1/z outside it yields the z-region |z|^3 < 6 sqrt(3) |(1-z)(2-z)|.
This region contains exp(+-i pi/3) with a wide margin and the expansion
stays well defined when b - a is an integer.

Starting from A_0 = 1, B_0 = 4(1-z/2)^(-a) - (1-z)^(-a) - 3 and
C_0 = 2 + 2(1-z)^(-a) - 4(1-z/2)^(-a) (so that A_0 + B_0 t + C_0 t^2
interpolates f at the three base points), the differential equation
(1-zt) f' = a z f gives a forward recursion for (A, B, C) whose B and C
lines divide by (z-1)(z-2).  Termwise integration produces

    2F1(a, b, c; z) = sum_n (-1)^n [ A_n Phi_n(b, c)
                                   + (b/c) B_n Phi_n(b+1, c+1)
                                   + (b(b+1)/(c(c+1))) C_n Phi_n(b+2, c+2) ],

with moments

    Phi_n(b, c) = (-1)^n (b)_n (c-b)_n / (2^n (c)_{2n}) 2F1(-n, b+n; c+2n; 2).

Phi_n can be computed two ways: "direct" evaluates the terminating closed
form, "recurrence" runs a three-term recurrence (Zeilberger-derived) with
polynomial coefficients X_n, Y_n, Z_n.  In double precision the direct sum
cancels heavily for n beyond ~12 (Phi_n decays superexponentially while
the 2^k terms do not), whereas the recurrence tracks Phi_n to machine
accuracy; the recurrence is therefore the default and the direct form is
the definitional oracle, evaluated in extended precision when comparing
the two routes at large n.
"""

import math
from dataclasses import dataclass

import mpmath

from .core import EPS, HypParams, cpow_principal, pochhammer, require_finite_complex
from .errors import (
    OutsideDomain,
    ParamDomainError,
    PoleError,
    RecurrenceBreakdown,
    SingularityError,
)
from .results import RegionVerdict, SeriesResult

DEFAULT_TERMS = 40

_SQRT3_6 = 6.0 * math.sqrt(3.0)


@dataclass(frozen=True)
class ThreePointCoeffs:
    """Coefficient streams A, B, C of the three-point expansion."""

    a: float
    z: complex
    A: tuple[complex, ...]
    B: tuple[complex, ...]
    C: tuple[complex, ...]


def threepoint_coeffs(a: float, z: complex, n_max: int) -> ThreePointCoeffs:
    """A, B, C streams up to n_max by forward recursion; z in {1, 2} is singular."""
    z = complex(z)
    if z == 1.0 or z == 2.0:
        raise SingularityError(f"z = {z}: recursion divides by (z-1)(z-2)")
    A = [1.0 + 0j]
    pow_half = cpow_principal(1.0 - z / 2.0, -a)
    pow_one = cpow_principal(1.0 - z, -a)
    B = [4.0 * pow_half - pow_one - 3.0]
    C = [2.0 + 2.0 * pow_one - 4.0 * pow_half]
    q = z * z - 3.0 * z + 2.0
    z2 = z * z
    z3 = z2 * z
    for n in range(n_max):
        An, Bn, Cn = A[-1], B[-1], C[-1]
        A.append(
            (
                2.0 * (3.0 * n * (z - 2.0) - 2.0) * Bn
                + 4.0 * z * (3.0 * n + a) * An
                + n * (5.0 * z - 6.0) * Cn
            )
            / (2.0 * (n + 1.0))
        )
        B.append(
            (
                4.0 * z * (3.0 * n + a) * (26.0 * z - 3.0 * z2 - 24.0) * An
                + 2.0
                * (
                    48.0
                    - 4.0 * z * (18.0 + 5.0 * a)
                    + 6.0 * z2 * (4.0 + 3.0 * a)
                    + 3.0 * n * (48.0 - 96.0 * z + 50.0 * z2 - 3.0 * z3)
                )
                * Bn
                + (
                    4.0 * (20.0 - 6.0 * z * (5.0 + a) + 5.0 * z2 * (2.0 + a))
                    + n * (264.0 - 516.0 * z + 262.0 * z2 - 15.0 * z3)
                )
                * Cn
            )
            / (2.0 * (n + 1.0) * q)
        )
        C.append(
            (
                4.0 * z * (3.0 * n + a) * (12.0 - 12.0 * z + z2) * An
                + 2.0
                * (
                    2.0 * (6.0 * (3.0 + a) * z - (6.0 + 5.0 * a) * z2 - 12.0)
                    + 3.0 * n * (z3 - 24.0 * z2 + 48.0 * z - 24.0)
                )
                * Bn
                + (
                    4.0 * (2.0 * z * (9.0 + 2.0 * a) - 3.0 * z2 * (2.0 + a) - 12.0)
                    + n * (5.0 * z3 - 132.0 * z2 + 276.0 * z - 144.0)
                )
                * Cn
            )
            / ((n + 1.0) * q)
        )
    return ThreePointCoeffs(a=a, z=z, A=tuple(A), B=tuple(B), C=tuple(C))


def _recurrence_xyz(n: int, b, c):
    """Coefficients X_n, Y_n, Z_n of X_n Phi_{n-1} + Y_n Phi_n + Z_n Phi_{n+1} = 0."""
    x = n * (-c - 2 * n - 5 * n * c - 6 * n * n - 4 * b * c + 4 * b * b) * (-n + b - c + 1) * (n + b - 1)
    p0 = 16 * b * (b - 1) * (b - c + 1) * (b - c)
    p1 = -4 + 21 * c + 40 * b * b - 17 * c * c - 32 * b * b * c + 32 * b * c * c - 40 * b * c
    p2 = 24 * b * c + 24 - 24 * b * b + 15 * c * c - 57 * c
    p3 = 18 * (c - 2)
    y = 2 * (2 * b - c) * (p0 + p1 * n + p2 * n * n + p3 * n**3)
    z = (
        16
        * (3 * n + c)
        * (3 * n + 1 + c)
        * (3 * n + 2 + c)
        * (-5 * n * c - 6 * n * n + 10 * n + 4 * b * b - 4 * b * c + 4 * c - 4)
    )
    return x, y, z


def _phi1_closed(b, c):
    den = 2 * c * (c + 1) * (c + 2)
    if den == 0:
        raise PoleError(f"c = {c}: pole of Phi_1")
    return -b * (b - c) * (2 * b - c) / den


def _phi3_recurrence_seq(n_max: int, b, c, one):
    """Forward recurrence from Phi_0 = 1, Phi_1; `one` fixes the arithmetic type."""
    vals = [one]
    if n_max >= 1:
        vals.append(_phi1_closed(b, c) * one)
    for n in range(1, n_max):
        x, y, z = _recurrence_xyz(n, b, c)
        if z == 0:
            raise RecurrenceBreakdown(f"Z_{n} = 0 for b={b}, c={c}")
        vals.append(-(x * vals[n - 1] + y * vals[n]) / z)
    return vals


def _phi3_direct(n: int, b, c, use_mp: bool):
    if use_mp:
        f = mpmath.mpf(1)
        term = mpmath.mpf(1)
        for k in range(n):
            term *= mpmath.mpf(2) * (-n + k) * (b + n + k) / ((c + 2 * n + k) * (k + 1))
            f += term
        pref = mpmath.rf(b, n) * mpmath.rf(c - b, n) / (mpmath.mpf(2) ** n * mpmath.rf(c, 2 * n))
        return (-1) ** n * pref * f
    den = pochhammer(c, 2 * n)
    if den == 0.0:
        raise PoleError(f"(c)_{2 * n} = 0 for c = {c}")
    f = 1.0
    term = 1.0
    for k in range(n):
        term *= 2.0 * (-n + k) * (b + n + k) / ((c + 2 * n + k) * (k + 1))
        f += term
    sign = -1.0 if n % 2 else 1.0
    return sign * pochhammer(b, n) * pochhammer(c - b, n) / (2.0**n * den) * f


def phi3_sequence(
    n_max: int, b: float, c: float, mode: str = "recurrence", dps: int | None = None
) -> list[float]:
    """Phi_0 .. Phi_{n_max} by the selected route.

    mode="recurrence" runs the three-term recurrence forward (machine
    accurate in double); mode="direct" evaluates the terminating closed
    form for each index (pass dps for extended precision beyond n ~ 12,
    where the direct sum cancels in double).
    """
    if mode not in ("recurrence", "direct"):
        raise ValueError(f"unknown phi3 mode {mode!r}")
    if mode == "recurrence":
        if dps is None:
            return _phi3_recurrence_seq(n_max, b, c, 1.0)
        with mpmath.workdps(dps):
            seq = _phi3_recurrence_seq(n_max, mpmath.mpf(b), mpmath.mpf(c), mpmath.mpf(1))
            return [float(v) for v in seq]
    if dps is None:
        return [_phi3_direct(n, b, c, use_mp=False) for n in range(n_max + 1)]
    with mpmath.workdps(dps):
        bm, cm = mpmath.mpf(b), mpmath.mpf(c)
        return [float(_phi3_direct(n, bm, cm, use_mp=True)) for n in range(n_max + 1)]


def phi3(n: int, b: float, c: float, mode: str = "recurrence", dps: int | None = None) -> float:
    """Moment Phi_n(b, c) of the three-point expansion."""
    if n < 0:
        raise ValueError("moment index must be non-negative")
    return phi3_sequence(n, b, c, mode=mode, dps=dps)[n]


def in_region_threepoint(z: complex) -> RegionVerdict:
    """Membership in |z|^3 < 6 sqrt(3) |(1-z)(2-z)|; margin is the difference."""
    z = complex(z)
    margin = _SQRT3_6 * abs((1.0 - z) * (2.0 - z)) - abs(z) ** 3
    return RegionVerdict(inside=margin > 0.0, margin=margin)


def eval_threepoint(
    params: HypParams,
    z: complex,
    n_terms: int = DEFAULT_TERMS,
    tol: float = 1e-12,
) -> SeriesResult:
    """Truncated three-point expansion, indices 0 .. n_terms inclusive.

    Uses recurrence-mode moments for the three shifted parameter pairs,
    falling back to the direct closed form if the recurrence breaks down.
    """
    z = require_finite_complex(z)
    if z == 1.0 or z == 2.0:
        raise SingularityError(f"z = {z}: coefficient recursion is singular")
    if not params.euler_valid:
        raise ParamDomainError(
            f"expansion derived under c > b > 0, got b={params.b}, c={params.c}"
        )
    verdict = in_region_threepoint(z)
    if not verdict.inside:
        raise OutsideDomain(
            f"z = {z} outside |z|^3 < 6 sqrt(3)|(1-z)(2-z)| (margin {verdict.margin})"
        )

    a, b, c = params.a, params.b, params.c
    coeffs = threepoint_coeffs(a, z, n_terms)
    shifted = []
    for j in range(3):
        try:
            shifted.append(phi3_sequence(n_terms, b + j, c + j, mode="recurrence"))
        except RecurrenceBreakdown:
            shifted.append(phi3_sequence(n_terms, b + j, c + j, mode="direct"))
    phi0, phi1, phi2 = shifted
    wb = b / c
    wc = b * (b + 1.0) / (c * (c + 1.0))

    s = 0j
    abs_sum = 0.0
    last = 0.0
    for n in range(n_terms + 1):
        sign = -1.0 if n % 2 else 1.0
        contrib = sign * (
            coeffs.A[n] * phi0[n] + wb * coeffs.B[n] * phi1[n] + wc * coeffs.C[n] * phi2[n]
        )
        s += contrib
        last = abs(contrib)
        abs_sum += last
    denom = abs(s)
    if denom == 0.0:
        est = math.inf
    else:
        cond = abs_sum / denom
        est = max(last / denom, EPS * (cond + n_terms + 1))
    return SeriesResult(value=s, terms_used=n_terms, est_error=est, converged=est <= tol)
