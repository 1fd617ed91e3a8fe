"""Two-point rational expansion of 2F1 with base points t = 0 and t = 1.

The integrand factor f(t) = (1-zt)^(-a) has the two-point Taylor expansion

    f(t) = sum_n [A_n(a, z) + B_n(a, z) t] [t (t-1)]^n,

convergent inside a Cassini oval |t(t-1)| < r with foci 0 and 1.  The
smallest oval containing the integration interval (0, 1) has r = 1/4, and
keeping the branch point t = 1/z outside it yields the z-region
|z|^2 < 4 |1-z|.  Termwise integration gives

    2F1(a, b, c; z) = sum_n (-1)^n (b)_n (c-b)_n / (c)_{2n+1}
                        [(c+2n) A_n(a, z) + (b+n) B_n(a, z)],

a series of elementary functions of z (linear combinations of 1 and
(1-z)^(-n-a) with polynomial coefficients).

Coefficients come from two routes.  The production route is the forward
recursion obtained from (1-zt) f' = a z f:

    A_{n+1} = (-z (a+2n) A_n + [1 + n(2-z)] B_n) / (n+1)
    B_{n+1} = (z (2-z)(a+2n) A_n + [z(a+2) + n(6z - z^2 - 4) - 2] B_n) / ((n+1)(1-z)).

The verification route is the explicit double sum (twopoint_coeffs_explicit).
Both routes are exact formula-wise, but at coefficient level both lose
relative accuracy in fixed precision as n grows: the explicit sum cancels
(its terms reach ~4^n |z|^n while A_n ~ |1/z (1/z - 1)|^(-n)), and the
recursion admits a parasitic solution growing like 4^n relative to A_n.
The series value is unaffected (the moments decay like 4^(-n)), so the
explicit route evaluates in extended precision and the dual-path
comparison is done at a matched precision.
"""

import math
from dataclasses import dataclass

import mpmath

from .core import EPS, HypParams, cpow_principal, pochhammer, require_finite_complex
from .errors import OutsideDomain, ParamDomainError, PoleError, SingularityError
from .results import RegionVerdict, SeriesResult

DEFAULT_TERMS = 40


@dataclass(frozen=True)
class TwoPointCoeffs:
    """Coefficient streams A_0..A_n, B_0..B_n of the two-point expansion."""

    a: float
    z: complex
    A: tuple[complex, ...]
    B: tuple[complex, ...]


def _initial_pair(a: float, z: complex) -> tuple[complex, complex]:
    return 1.0 + 0j, cpow_principal(1.0 - z, -a) - 1.0


def twopoint_coeffs_recursive(
    a: float, z: complex, n_max: int, dps: int | None = None
) -> TwoPointCoeffs:
    """A and B streams up to n_max by the forward recursion; z = 1 is singular.

    dps switches the recursion to extended precision; the returned values
    are rounded back to complex.  Used when comparing against the explicit
    route at large n, where double-precision coefficients of either route
    have lost relative accuracy.
    """
    z = complex(z)
    if z == 1.0:
        raise SingularityError("z = 1: recursion divides by 1 - z")
    if dps is not None:
        with mpmath.workdps(dps):
            am = mpmath.mpf(a)
            zm = mpmath.mpc(z.real, 0.0 if z.imag == 0.0 else z.imag)
            A = [mpmath.mpc(1)]
            B = [(1 - zm) ** (-am) - 1]
            for n in range(n_max):
                An, Bn = A[-1], B[-1]
                A.append((-zm * (am + 2 * n) * An + (1 + n * (2 - zm)) * Bn) / (n + 1))
                B.append(
                    (
                        zm * (2 - zm) * (am + 2 * n) * An
                        + (zm * (am + 2) + n * (6 * zm - zm * zm - 4) - 2) * Bn
                    )
                    / ((n + 1) * (1 - zm))
                )
            return TwoPointCoeffs(
                a=a, z=z, A=tuple(complex(v) for v in A), B=tuple(complex(v) for v in B)
            )
    A0, B0 = _initial_pair(a, z)
    A = [A0]
    B = [B0]
    for n in range(n_max):
        An, Bn = A[-1], B[-1]
        A.append((-z * (a + 2.0 * n) * An + (1.0 + n * (2.0 - z)) * Bn) / (n + 1.0))
        B.append(
            (
                z * (2.0 - z) * (a + 2.0 * n) * An
                + (z * (a + 2.0) + n * (6.0 * z - z * z - 4.0) - 2.0) * Bn
            )
            / ((n + 1.0) * (1.0 - z))
        )
    return TwoPointCoeffs(a=a, z=z, A=tuple(A), B=tuple(B))


def _auto_dps(z: complex, n: int) -> int:
    # Cancellation in the explicit sum is ~n * log10(4 R) digits, where
    # R = |1/z (1/z - 1)| is the coefficient decay rate.
    if z == 0:
        return 30
    r = abs(1.0 - z) / (abs(z) * abs(z))
    extra = max(0.0, math.log10(max(r, 1.0)))
    return min(300, 40 + int(n * (0.65 + extra)))


def twopoint_coeffs_explicit(
    a: float, z: complex, n: int, dps: int | None = None
) -> tuple[complex, complex]:
    """(A_n, B_n) by the explicit double sum, the verification route.

    Evaluated in extended precision (mpmath) because the sum cancels to
    roughly 4^n below its largest term; dps=None picks a working precision
    from n and z.  n = 0 returns the initial pair.
    """
    z = complex(z)
    if z == 1.0:
        raise SingularityError("z = 1 is a singular point of the coefficient formulas")
    if n < 0:
        raise ValueError("coefficient index must be non-negative")
    if n == 0:
        return _initial_pair(a, z)
    if dps is None:
        dps = _auto_dps(z, n)
    with mpmath.workdps(dps):
        am = mpmath.mpf(a)
        zm = mpmath.mpc(z.real, 0.0 if z.imag == 0.0 else z.imag)
        one_m_z = 1 - zm
        A = mpmath.mpc(0)
        B = mpmath.mpc(0)
        sign_n = (-1) ** n
        for k in range(n + 1):
            common = mpmath.rf(am, n - k) * zm ** (n - k)
            binA = mpmath.factorial(n + k - 1) / (mpmath.factorial(k) * mpmath.factorial(n - k))
            binB = binA * (n + k)
            pw = one_m_z ** (k - am - n)
            sign_k = (-1) ** k
            A += binA * (sign_n * n - sign_k * k * pw) * common
            B += binB * (sign_k * pw - sign_n) * common
        fact = mpmath.factorial(n)
        return complex(A / fact), complex(B / fact)


def phi_psi_moments(n: int, b: float, c: float) -> tuple[float, float]:
    """Closed-form moment pair for index n:

    Phi_n = (-1)^n (b)_n (c-b)_n / (c)_{2n},
    Psi_n = (-1)^n (b)_{n+1} (c-b)_n / (c)_{2n+1}.
    """
    if n < 0:
        raise ValueError("moment index must be non-negative")
    den = pochhammer(c, 2 * n + 1)
    if den == 0.0:
        raise PoleError(f"(c)_{2 * n + 1} = 0 for c = {c}")
    sign = -1.0 if n % 2 else 1.0
    cb = pochhammer(c - b, n)
    phi = sign * pochhammer(b, n) * cb / pochhammer(c, 2 * n)
    psi = sign * pochhammer(b, n + 1) * cb / den
    return phi, psi


def in_region_twopoint(z: complex) -> RegionVerdict:
    """Membership in |z|^2 < 4 |1-z|; margin is 4|1-z| - |z|^2.

    Equivalent to the Cassini condition 1/4 < |1/z (1/z - 1)| on the
    t-plane branch point.
    """
    z = complex(z)
    margin = 4.0 * abs(1.0 - z) - abs(z) * abs(z)
    return RegionVerdict(inside=margin > 0.0, margin=margin)


def eval_twopoint(
    params: HypParams,
    z: complex,
    n_terms: int = DEFAULT_TERMS,
    tol: float = 1e-12,
) -> SeriesResult:
    """Truncated two-point expansion, indices 0 .. n_terms inclusive."""
    z = require_finite_complex(z)
    if z == 1.0:
        raise SingularityError("z = 1: coefficient recursion is singular")
    if not params.euler_valid:
        raise ParamDomainError(
            f"expansion derived under c > b > 0, got b={params.b}, c={params.c}"
        )
    verdict = in_region_twopoint(z)
    if not verdict.inside:
        raise OutsideDomain(f"z = {z} outside |z|^2 < 4|1-z| (margin {verdict.margin})")

    b, c = params.b, params.c
    coeffs = twopoint_coeffs_recursive(params.a, z, n_terms)
    s = 0j
    moment = 1.0 / c  # (b)_0 (c-b)_0 / (c)_1
    abs_sum = 0.0
    last = 0.0
    for n in range(n_terms + 1):
        sign = -1.0 if n % 2 else 1.0
        contrib = sign * moment * ((c + 2.0 * n) * coeffs.A[n] + (b + n) * coeffs.B[n])
        s += contrib
        last = abs(contrib)
        abs_sum += last
        moment *= (b + n) * (c - b + n) / ((c + 2.0 * n + 1.0) * (c + 2.0 * n + 2.0))
    denom = abs(s)
    if denom == 0.0:
        est = math.inf
    else:
        cond = abs_sum / denom
        est = max(last / denom, EPS * (cond + n_terms + 1))
    return SeriesResult(value=s, terms_used=n_terms, est_error=est, converged=est <= tol)
