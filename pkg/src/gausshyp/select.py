"""Method selection and the one-call evaluation front end."""

from .buhring import DEFAULT_Z0, INTEGER_DIFF_TOL, buhring_eval
from .core import HypParams
from .errors import ConfigError, NoMethodError
from .onepoint import eval_onepoint, in_region_onepoint
from .reference import euler_integral, maclaurin
from .results import MethodId, SeriesResult
from .threepoint import eval_threepoint, in_region_threepoint
from .twopoint import eval_twopoint, in_region_twopoint

#: |z| below which the plain power series is preferred outright.
MACLAURIN_RADIUS = 0.5


def _buhring_applicable(params: HypParams, z: complex, z0: complex) -> bool:
    diff = params.b - params.a
    if abs(diff - round(diff)) < INTEGER_DIFF_TOL:
        return False
    return abs(z - z0) > max(abs(z0), abs(z0 - 1.0))


def select_method(params: HypParams, z: complex, z0: complex = DEFAULT_Z0) -> MethodId:
    """Deterministic route choice for a (params, z) pair.

    Preference order: power series in the safe disk |z| <= 1/2, then the
    three-point and two-point expansions (fast convergence, no integer
    b-a restriction), then the half-point expansion on Re z < 1, then the
    continuation around z0, and finally the quadrature oracle.  Raises
    NoMethodError when every predicate fails.
    """
    z = complex(z)
    if abs(z) <= MACLAURIN_RADIUS:
        return MethodId.MACLAURIN
    if in_region_threepoint(z).inside:
        return MethodId.THREEPOINT
    if in_region_twopoint(z).inside:
        return MethodId.TWOPOINT
    if z.real < 1.0:
        return MethodId.ONEPOINT_HALF
    if _buhring_applicable(params, z, complex(z0)):
        return MethodId.BUHRING
    if params.euler_valid:
        return MethodId.EULER
    raise NoMethodError(f"no evaluation method applies at z = {z} for {params}")


def method_margin(
    method: MethodId,
    z: complex,
    w: complex | None = None,
    z0: complex = DEFAULT_Z0,
) -> float:
    """Signed margin of the method's own region predicate at z."""
    z = complex(z)
    if method is MethodId.MACLAURIN:
        return 1.0 - abs(z)
    if method is MethodId.EULER:
        # distance from the cut [1, inf)
        return abs(z.imag) if z.real >= 1.0 else abs(z - 1.0)
    if method is MethodId.BUHRING:
        z0 = complex(z0)
        return abs(z - z0) - max(abs(z0), abs(z0 - 1.0))
    if method is MethodId.ONEPOINT_HALF:
        return in_region_onepoint(z, 0.5).margin
    if method is MethodId.ONEPOINT_W:
        if w is None:
            raise ConfigError("onepoint-w margin needs the expansion point w")
        return in_region_onepoint(z, w).margin
    if method is MethodId.TWOPOINT:
        return in_region_twopoint(z).margin
    if method is MethodId.THREEPOINT:
        return in_region_threepoint(z).margin
    raise ConfigError(f"unknown method {method}")


def evaluate(
    params: HypParams,
    z: complex,
    method: MethodId | str = "auto",
    n_terms: int = 40,
    tol: float = 1e-13,
    w: complex | None = None,
    z0: complex = DEFAULT_Z0,
    max_terms: int = 2000,
) -> tuple[SeriesResult, MethodId]:
    """Evaluate 2F1(params; z) by the chosen (or auto-selected) route."""
    z = complex(z)
    if isinstance(method, str):
        method_id = select_method(params, z, z0) if method == "auto" else MethodId.from_string(method)
    else:
        method_id = method

    if method_id is MethodId.MACLAURIN:
        res = maclaurin(params, z, tol=tol, max_terms=max_terms)
    elif method_id is MethodId.EULER:
        res = euler_integral(params, z, tol=tol)
    elif method_id is MethodId.BUHRING:
        res = buhring_eval(params, z, z0=z0, n_terms=n_terms, tol=max(tol, 1e-12))
    elif method_id is MethodId.ONEPOINT_HALF:
        res = eval_onepoint(params, z, w=0.5, n_terms=n_terms, tol=max(tol, 1e-12))
    elif method_id is MethodId.ONEPOINT_W:
        if w is None:
            raise ConfigError("method onepoint-w needs the expansion point w")
        res = eval_onepoint(params, z, w=w, n_terms=n_terms, tol=max(tol, 1e-12))
    elif method_id is MethodId.TWOPOINT:
        res = eval_twopoint(params, z, n_terms=n_terms, tol=max(tol, 1e-12))
    elif method_id is MethodId.THREEPOINT:
        res = eval_threepoint(params, z, n_terms=n_terms, tol=max(tol, 1e-12))
    else:  # pragma: no cover
        raise ConfigError(f"unknown method {method_id}")
    return res, method_id


def hyp2f1(
    a: float,
    b: float,
    c: float,
    z: complex,
    method: MethodId | str = "auto",
    **kwargs,
) -> complex:
    """Convenience wrapper returning just the value of 2F1(a, b, c; z)."""
    res, _ = evaluate(HypParams(a, b, c), z, method=method, **kwargs)
    return res.value
