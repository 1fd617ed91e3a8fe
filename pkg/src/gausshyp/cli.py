"""Command-line interface.

Subcommands:
  eval      single evaluation with explicit or auto-selected method
  table     reproduce one of the four built-in relative-error tables
  region    rasterize a method's convergence region to CSV
  selftest  run the quick invariant suite

Exit codes: 0 success, 2 usage/config error, 3 domain or region error,
4 numerical breakdown.
"""

import argparse
import cmath
import json
import math
import re
import sys

from . import __version__
from .buhring import buhring_eval, d_coeff
from .core import HypParams, cpow_principal, gamma_real, pochhammer
from .errors import (
    BranchCutError,
    ConfigError,
    DomainError,
    GaussHypError,
    IntegerDifferenceError,
    NoMethodError,
    OutsideDomain,
    ParamDomainError,
    PoleError,
    RecurrenceBreakdown,
    SingularityError,
)
from .onepoint import eval_onepoint, in_region_onepoint, phi_brute, phi_half, phi_w
from .raster import RasterSpec, raster_to_csv
from .reference import classify_region, euler_integral, maclaurin
from .results import MethodId
from .select import evaluate, method_margin
from .tables import TABLES, run_table, table_to_csv, table_to_json
from .threepoint import eval_threepoint, in_region_threepoint, phi3, threepoint_coeffs
from .twopoint import (
    eval_twopoint,
    in_region_twopoint,
    twopoint_coeffs_explicit,
    twopoint_coeffs_recursive,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NUMERIC = 4

_DOMAIN_ERRORS = (
    DomainError,
    OutsideDomain,
    ParamDomainError,
    BranchCutError,
    SingularityError,
    NoMethodError,
)
_NUMERIC_ERRORS = (PoleError, IntegerDifferenceError, RecurrenceBreakdown)

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"([+-]?{_NUM})([+-](?:{_NUM})?)[ij]\Z")
_IMAG_RE = re.compile(rf"([+-]?(?:{_NUM})?)[ij]\Z")


def parse_complex(text: str) -> complex:
    """Parse 'RE', 'RE+IMi', 'RE-IMi', 'IMi', or the tokens exp(+-i*pi/3).

    The exponential tokens exist so the exceptional points can be requested
    without decimal truncation.
    """
    s = text.strip().replace(" ", "")
    low = s.lower()
    if low in ("exp(i*pi/3)", "exp(+i*pi/3)"):
        return cmath.exp(1j * math.pi / 3.0)
    if low == "exp(-i*pi/3)":
        return cmath.exp(-1j * math.pi / 3.0)
    try:
        return complex(float(s), 0.0)
    except ValueError:
        pass
    m = _COMPLEX_RE.match(s)
    if m:
        re_part = float(m.group(1))
        im_text = m.group(2)
        im_part = float(im_text) if im_text not in ("+", "-") else float(im_text + "1")
        return complex(re_part, im_part)
    m = _IMAG_RE.match(s)
    if m:
        im_text = m.group(1)
        if im_text in ("", "+", "-"):
            im_text += "1"
        return complex(0.0, float(im_text))
    raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}")


def _method_arg(text: str) -> str:
    choices = ["auto"] + [m.value for m in MethodId]
    if text not in choices:
        raise argparse.ArgumentTypeError(f"method must be one of {', '.join(choices)}")
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gausshyp",
        description="Evaluate the Gauss hypergeometric function 2F1(a,b,c;z) for complex z.",
    )
    p.add_argument("--version", action="version", version=f"gausshyp {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate 2F1 at a single point")
    pe.add_argument("--a", type=float, required=True)
    pe.add_argument("--b", type=float, required=True)
    pe.add_argument("--c", type=float, required=True)
    pe.add_argument("--z", type=parse_complex, required=True)
    pe.add_argument("--method", type=_method_arg, default="auto")
    pe.add_argument("--terms", type=int, default=40, help="truncation index for series methods")
    pe.add_argument("--tol", type=float, default=1e-13)
    pe.add_argument("--w", type=parse_complex, default=None, help="expansion point for onepoint-w")
    pe.add_argument("--z0", type=parse_complex, default=0.5 + 0j, help="continuation expansion point")
    pe.add_argument("--format", choices=("json", "text"), default="json")
    pe.add_argument("--out", default=None)

    pt = sub.add_parser("table", help="reproduce a built-in relative-error table")
    pt.add_argument("--id", type=int, required=True, choices=sorted(TABLES))
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    pt.add_argument("--tol", type=float, default=1e-13, help="oracle tolerance")
    pt.add_argument("--out", default=None)

    pr = sub.add_parser("region", help="rasterize a convergence region")
    pr.add_argument("--method", type=_method_arg, required=True)
    pr.add_argument("--w", type=parse_complex, default=None)
    pr.add_argument("--rho", type=float, default=0.9)
    pr.add_argument("--xmin", type=float, required=True)
    pr.add_argument("--xmax", type=float, required=True)
    pr.add_argument("--ymin", type=float, required=True)
    pr.add_argument("--ymax", type=float, required=True)
    pr.add_argument("--res", type=int, required=True)
    pr.add_argument("--out", default=None)

    sub.add_parser("selftest", help="run the quick invariant suite")
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_eval(args) -> int:
    params = HypParams(args.a, args.b, args.c)
    res, method = evaluate(
        params,
        args.z,
        method=args.method,
        n_terms=args.terms,
        tol=args.tol,
        w=args.w,
        z0=args.z0,
    )
    margin = method_margin(method, args.z, w=args.w, z0=args.z0)
    if args.format == "json":
        payload = {
            "value": {"re": res.value.real, "im": res.value.imag},
            "method": method.value,
            "terms": res.terms_used,
            "est_error": res.est_error,
            "in_region_margin": margin,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        lines = [
            f"value      = {res.value.real!r} {'+' if res.value.imag >= 0 else '-'} {abs(res.value.imag)!r}i",
            f"method     = {method.value}",
            f"terms      = {res.terms_used}",
            f"est_error  = {res.est_error:.3e}",
            f"margin     = {margin:.6g}",
            f"converged  = {res.converged}",
        ]
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    result = run_table(args.id, oracle_tol=args.tol)
    text = table_to_csv(result) if args.format == "csv" else table_to_json(result)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_region(args) -> int:
    if args.method == "auto":
        raise ConfigError("region rasters need an explicit method, not 'auto'")
    spec = RasterSpec(
        method=MethodId.from_string(args.method),
        xmin=args.xmin,
        xmax=args.xmax,
        ymin=args.ymin,
        ymax=args.ymax,
        res=args.res,
        w=args.w,
        rho=args.rho,
    )
    _emit(raster_to_csv(spec), args.out)
    return EXIT_OK


def _selftest_checks():
    z_exc = cmath.exp(1j * math.pi / 3.0)
    params = HypParams(1.2, 2.1, 3.0)

    def gamma_recurrence():
        return all(
            abs(gamma_real(x + 1.0) - x * gamma_real(x)) <= 1e-13 * abs(gamma_real(x + 1.0))
            for x in (0.5, 1.7, 6.3, 14.9)
        )

    def cpow_additive():
        b = 1.3 - 0.4j
        lhs = cpow_principal(b, 0.7) * cpow_principal(b, -1.9)
        rhs = cpow_principal(b, -1.2)
        return abs(lhs - rhs) <= 1e-13 * abs(rhs)

    def poch_recurrence():
        return pochhammer(2.1, 6) == pochhammer(2.1, 5) * (2.1 + 5)

    def oracles_agree():
        z = 0.55 + 0.4j
        m = maclaurin(params, z).value
        e = euler_integral(params, z).value
        return abs(m - e) <= 1e-11 * abs(e)

    def phi_paths_agree():
        return all(
            abs(phi_w(n, 2.1, 3.0, 0.5 + 0j) - phi_half(n, 2.1, 3.0)) <= 1e-12 for n in range(12)
        )

    def phi_matches_definition():
        return all(
            abs(phi_half(n, 2.1, 3.0) - phi_brute(n, 2.1, 3.0, 0.5).real)
            <= 1e-10 * max(1.0, abs(phi_half(n, 2.1, 3.0)))
            for n in range(10)
        )

    def twopoint_paths_agree():
        co = twopoint_coeffs_recursive(1.2, -1.0 + 0j, 6)
        for n in range(1, 7):
            ae, be = twopoint_coeffs_explicit(1.2, -1.0 + 0j, n)
            if abs(ae - co.A[n]) > 1e-10 * max(1.0, abs(ae)):
                return False
            if abs(be - co.B[n]) > 1e-10 * max(1.0, abs(be)):
                return False
        return True

    def phi3_paths_agree():
        return all(
            abs(phi3(n, 2.1, 3.0, mode="recurrence") - phi3(n, 2.1, 3.0, mode="direct", dps=40))
            <= 1e-9 * abs(phi3(n, 2.1, 3.0, mode="direct", dps=40))
            for n in range(1, 16)
        )

    def threepoint_reconstructs():
        co = threepoint_coeffs(1.2, z_exc, 35)
        for t in (0.2, 0.5, 0.9):
            s = sum(
                (co.A[n] + co.B[n] * t + co.C[n] * t * t) * (t * (t - 1.0) * (t - 0.5)) ** n
                for n in range(36)
            )
            if abs(s - cpow_principal(1.0 - z_exc * t, -1.2)) > 1e-8:
                return False
        return True

    def exceptional_point_covered():
        return (
            in_region_onepoint(z_exc, 0.5).inside
            and in_region_twopoint(z_exc).inside
            and in_region_threepoint(z_exc).inside
            and not classify_region(z_exc, 0.95)
        )

    def expansions_match_oracle():
        ref = euler_integral(params, z_exc).value
        checks = [
            (eval_threepoint(params, z_exc, n_terms=20).value, 1e-10),
            (eval_twopoint(params, z_exc, n_terms=20).value, 1e-10),
            (eval_onepoint(params, z_exc, w=0.5, n_terms=25).value, 1e-5),
            (buhring_eval(params, z_exc, n_terms=25).value, 1e-1),
        ]
        return all(abs(v - ref) <= tol * abs(ref) for v, tol in checks)

    def d_coeff_hand_value():
        return abs(d_coeff(1.2, 0.5, params, 1) - (-10.2)) <= 1e-12 * 10.2

    return [
        ("gamma recurrence", gamma_recurrence),
        ("principal power exponent additivity", cpow_additive),
        ("pochhammer recurrence", poch_recurrence),
        ("maclaurin vs euler integral", oracles_agree),
        ("phi generic-w specializes to w=1/2", phi_paths_agree),
        ("phi recurrence matches terminating series", phi_matches_definition),
        ("twopoint explicit vs recursive", twopoint_paths_agree),
        ("phi3 recurrence vs direct", phi3_paths_agree),
        ("threepoint series reconstructs (1-zt)^-a", threepoint_reconstructs),
        ("exp(i*pi/3) covered by new regions only", exceptional_point_covered),
        ("expansions agree with the oracle", expansions_match_oracle),
        ("continuation coefficient hand value", d_coeff_hand_value),
    ]


def _cmd_selftest(_args) -> int:
    checks = _selftest_checks()
    failures = 0
    for name, check in checks:
        try:
            ok = check()
        except Exception as exc:  # a crash is a failure, keep going
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_NUMERIC


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return EXIT_OK if code in (0, None) else EXIT_USAGE
    dispatch = {
        "eval": _cmd_eval,
        "table": _cmd_table,
        "region": _cmd_region,
        "selftest": _cmd_selftest,
    }
    try:
        return dispatch[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _NUMERIC_ERRORS as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except _DOMAIN_ERRORS as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except GaussHypError as exc:  # any library error not classified above
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
