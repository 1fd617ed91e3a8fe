"""Single-point rational expansions of 2F1 from the Taylor series of (1-zt)^(-a).

Expanding the integrand factor f(t) = (1-zt)^(-a) at a point w (w = 1/2
being the symmetric choice) and integrating termwise gives

    2F1(a, b, c; z) = (1-wz)^(-a) sum_n (a)_n/n! (wz/(wz-1))^n Phi_n(b, c, w),

with moments Phi_n(b, c, w) = 2F1(-n, b, c; 1/w), a terminating series.
The expansion converges on S = { z : |1 - wz| > |z| max(|w|, |1-w|) }:
the half-plane Re z < 1 for w = 1/2, and in general a half-plane or disk
depending on Re w.  The moments satisfy the three-term recurrence

    (c+n) Phi_{n+1} + ((b+n)/w - 2n - c) Phi_n + n (1 - 1/w) Phi_{n-1} = 0

from Phi_0 = 1, Phi_1 = 1 - b/(cw), which at w = 1/2 reduces to
(c+n) Phi_{n+1} + (2b-c) Phi_n - n Phi_{n-1} = 0 with Phi_1 = 1 - 2b/c.
"""

import math

import mpmath

from .core import EPS, HypParams, cpow_principal, require_finite_complex
from .errors import DomainError, OutsideDomain, ParamDomainError, PoleError
from .results import RegionVerdict, SeriesResult

#: Default truncation index; forward recurrence accuracy is verified up to here.
DEFAULT_TERMS = 40


def phi_half_sequence(n_max: int, b: float, c: float) -> list[float]:
    """Phi_0 .. Phi_{n_max} at w = 1/2 by forward recurrence (real arithmetic)."""
    if c == 0.0:
        raise PoleError("c = 0 is a pole of Phi_1")
    vals = [1.0]
    if n_max >= 1:
        vals.append(1.0 - 2.0 * b / c)
    for n in range(1, n_max):
        if c + n == 0.0:
            raise PoleError(f"c + {n} = 0: recurrence pole")
        vals.append((n * vals[n - 1] - (2.0 * b - c) * vals[n]) / (c + n))
    return vals


def phi_half(n: int, b: float, c: float) -> float:
    """Phi_n(b, c) = 2F1(-n, b, c; 2) via the w = 1/2 recurrence."""
    if n < 0:
        raise ValueError("moment index must be non-negative")
    return phi_half_sequence(n, b, c)[n]


def phi_w_sequence(n_max: int, b: float, c: float, w: complex) -> list[complex]:
    """Phi_0 .. Phi_{n_max} at generic w by forward recurrence."""
    w = complex(w)
    if w == 0:
        raise DomainError("expansion point w must be nonzero")
    if c == 0.0:
        raise PoleError("c = 0 is a pole of Phi_1")
    vals: list[complex] = [1.0 + 0j]
    if n_max >= 1:
        vals.append(1.0 - b / (c * w))
    for n in range(1, n_max):
        if c + n == 0.0:
            raise PoleError(f"c + {n} = 0: recurrence pole")
        vals.append(
            -(((b + n) / w - 2.0 * n - c) * vals[n] + n * (1.0 - 1.0 / w) * vals[n - 1])
            / (c + n)
        )
    return vals


def phi_w(n: int, b: float, c: float, w: complex) -> complex:
    """Phi_n(b, c, w) = 2F1(-n, b, c; 1/w) via the generic-w recurrence."""
    if n < 0:
        raise ValueError("moment index must be non-negative")
    return phi_w_sequence(n, b, c, w)[n]


def phi_brute(n: int, b: float, c: float, w: complex = 0.5, dps: int | None = None) -> complex:
    """Terminating-series definition of Phi_n, the correctness oracle.

    Sums 2F1(-n, b, c; 1/w) = sum_{k<=n} (-n)_k (b)_k (1/w)^k / ((c)_k k!)
    directly.  The sum cancels heavily for large n (the terms reach
    ~(1+|1/w|)^n while the value stays O(1)), so pass dps to evaluate in
    extended precision when n is beyond ~15.
    """
    w = complex(w)
    if w == 0:
        raise DomainError("expansion point w must be nonzero")
    x = 1.0 / w
    if dps is None:
        s = 0j
        term = 1.0 + 0j
        for k in range(n + 1):
            s += term
            term *= (-n + k) * (b + k) * x / ((c + k) * (k + 1))
        return s
    with mpmath.workdps(dps):
        xm = mpmath.mpc(x)
        bm = mpmath.mpf(b)
        cm = mpmath.mpf(c)
        s = mpmath.mpc(0)
        term = mpmath.mpc(1)
        for k in range(n + 1):
            s += term
            term *= (-n + k) * (bm + k) * xm / ((cm + k) * (k + 1))
        return complex(s)


def in_region_onepoint(z: complex, w: complex = 0.5) -> RegionVerdict:
    """Membership in S via the fundamental inequality |1-wz| > |z| max(|w|, |1-w|).

    The margin is the difference of the two sides.  The derived geometric
    description (half-plane 2 Re(wz) < 1 for Re w >= 1/2, a disk otherwise)
    is equivalent; the single inequality avoids the case split.
    """
    z = complex(z)
    w = complex(w)
    margin = abs(1.0 - w * z) - abs(z) * max(abs(w), abs(1.0 - w))
    return RegionVerdict(inside=margin > 0.0, margin=margin)


def eval_onepoint(
    params: HypParams,
    z: complex,
    w: complex = 0.5,
    n_terms: int = DEFAULT_TERMS,
    tol: float = 1e-12,
    use_half_path: bool | None = None,
) -> SeriesResult:
    """Truncated single-point expansion, indices 0 .. n_terms inclusive.

    w = 1/2 is routed through the real-arithmetic moment recurrence unless
    use_half_path=False forces the generic complex path (the two agree to
    rounding; the flag exists so tests can compare them).
    """
    z = require_finite_complex(z)
    w = require_finite_complex(w, "w")
    if w == 0:
        raise DomainError("expansion point w must be nonzero")
    if not params.euler_valid:
        raise ParamDomainError(
            f"expansion derived under c > b > 0, got b={params.b}, c={params.c}"
        )
    verdict = in_region_onepoint(z, w)
    if not verdict.inside:
        raise OutsideDomain(f"z = {z} outside the w = {w} expansion region (margin {verdict.margin})")

    if use_half_path is None:
        use_half_path = w == 0.5
    if use_half_path and w != 0.5:
        raise DomainError("use_half_path requires w = 1/2")
    phis: list[complex] | list[float]
    if use_half_path:
        phis = phi_half_sequence(n_terms, params.b, params.c)
    else:
        phis = phi_w_sequence(n_terms, params.b, params.c, w)

    a = params.a
    ratio = w * z / (w * z - 1.0)
    s = 0j
    term = 1.0 + 0j
    abs_sum = 0.0
    last = 0.0
    for n in range(n_terms + 1):
        contrib = term * phis[n]
        s += contrib
        last = abs(contrib)
        abs_sum += last
        term *= (a + n) / (n + 1.0) * ratio
    value = cpow_principal(1.0 - w * z, -a) * s
    denom = abs(s)
    if denom == 0.0:
        est = math.inf
    else:
        cond = abs_sum / denom
        est = max(last / denom, EPS * (cond + n_terms + 1))
    return SeriesResult(value=value, terms_used=n_terms, est_error=est, converged=est <= tol)
