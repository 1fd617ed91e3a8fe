"""Benchmark tables: relative errors of the continuation vs. each new expansion.

Four built-in tables compare, row by row, the relative error of Buhring's
continuation and of one featured expansion against the quadrature oracle,
at truncation labels n = 0, 5, 10, 15, 20.

Truncation accounting: a label n normally means summation indices
0 .. n inclusive.  Table 4 is the exception: its reference error columns
correspond to series index ceil(n/2) for both methods (verified against
the reference convergence rates and individual cells), so its spec
carries index_rule="half", and run_table maps labels accordingly.
"""

import json
import math
from dataclasses import dataclass
from typing import Callable

from .buhring import buhring_eval
from .core import HypParams
from .errors import GaussHypError
from .onepoint import eval_onepoint
from .reference import euler_integral
from .results import MethodId
from .threepoint import eval_threepoint
from .twopoint import eval_twopoint

Z_EXC = complex(0.5, math.sqrt(3.0) / 2.0)  # exp(i pi/3)

N_LABELS = (0, 5, 10, 15, 20)

#: Cell labels for evaluation failures, keyed by exception class name.
ERROR_LABELS = {
    "IntegerDifferenceError": "INTEGER_DIFF",
    "OutsideDomain": "OUTSIDE_DOMAIN",
    "SingularityError": "SINGULARITY",
    "ParamDomainError": "PARAM_DOMAIN",
    "BranchCutError": "BRANCH_CUT",
    "PoleError": "POLE",
    "RecurrenceBreakdown": "RECURRENCE_BREAKDOWN",
}


@dataclass(frozen=True)
class TableRow:
    a: float
    b: float
    c: float
    z: complex
    z_label: str

    @property
    def params(self) -> HypParams:
        return HypParams(self.a, self.b, self.c)

    @property
    def caption(self) -> str:
        c = self.c if self.c != int(self.c) else int(self.c)
        return f"a={self.a}, b={self.b}, c={c}, z={self.z_label}, z0=1/2"


@dataclass(frozen=True)
class TableSpec:
    table_id: int
    rows: tuple[TableRow, ...]
    featured: MethodId
    w: complex | None = None
    index_rule: str = "identity"  # "identity" or "half" (index = ceil(n/2))
    n_values: tuple[int, ...] = N_LABELS

    def series_index(self, n: int) -> int:
        if self.index_rule == "half":
            return (n + 1) // 2
        return n


def _rows(entries) -> tuple[TableRow, ...]:
    return tuple(TableRow(*e) for e in entries)


TABLES: dict[int, TableSpec] = {
    1: TableSpec(
        table_id=1,
        featured=MethodId.ONEPOINT_HALF,
        rows=_rows(
            [
                (1.2, 2.1, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.5, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.1, 3.0, -1.0 + 0j, "-1"),
                (1.2, 2.1, 3.0, -1.0 + 1j, "-1+1i"),
                (1.2, 2.1, 3.5, -5.0 + 0j, "-5"),
            ]
        ),
    ),
    2: TableSpec(
        table_id=2,
        featured=MethodId.ONEPOINT_W,
        w=complex(0.5, 0.5),
        rows=_rows(
            [
                (1.2, 2.1, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.5, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.1, 3.0, -1.0 + 0j, "-1"),
                (1.2, 2.1, 3.0, -1.0 + 1j, "-1+1i"),
                (1.2, 2.1, 3.5, -5.0 + 0j, "-5"),
            ]
        ),
    ),
    3: TableSpec(
        table_id=3,
        featured=MethodId.TWOPOINT,
        rows=_rows(
            [
                (1.2, 2.1, 3.0, -1.0 + 0j, "-1"),
                (1.2, 2.5, 3.0, -2.0 + 0j, "-2"),
                (1.2, 2.1, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.5, 3.0, Z_EXC, "exp(i*pi/3)"),
            ]
        ),
    ),
    4: TableSpec(
        table_id=4,
        featured=MethodId.THREEPOINT,
        index_rule="half",
        rows=_rows(
            [
                (1.2, 2.1, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.5, 3.0, Z_EXC, "exp(i*pi/3)"),
                (1.2, 2.1, 3.0, -5.0 + 0j, "-5"),
                (1.2, 2.01, 3.0, -5.0 + 0j, "-5"),
            ]
        ),
    ),
}


@dataclass(frozen=True)
class TableResult:
    spec: TableSpec
    #: cells[row_index][method_value][n_label] -> float | str
    cells: tuple[dict, ...]


def _featured_eval(spec: TableSpec) -> Callable:
    if spec.featured is MethodId.ONEPOINT_HALF:
        return lambda p, z, n: eval_onepoint(p, z, w=0.5, n_terms=n)
    if spec.featured is MethodId.ONEPOINT_W:
        return lambda p, z, n: eval_onepoint(p, z, w=spec.w, n_terms=n)
    if spec.featured is MethodId.TWOPOINT:
        return lambda p, z, n: eval_twopoint(p, z, n_terms=n)
    if spec.featured is MethodId.THREEPOINT:
        return lambda p, z, n: eval_threepoint(p, z, n_terms=n)
    raise ValueError(f"table cannot feature method {spec.featured}")


def run_table(spec: TableSpec | int, oracle_tol: float = 1e-13) -> TableResult:
    """Relative errors of (buhring, featured expansion) against the oracle."""
    if isinstance(spec, int):
        spec = TABLES[spec]
    featured = _featured_eval(spec)
    cells = []
    for row in spec.rows:
        reference = euler_integral(row.params, row.z, tol=oracle_tol).value
        ref_abs = abs(reference)
        row_cells: dict = {MethodId.BUHRING.value: {}, spec.featured.value: {}}
        for n in spec.n_values:
            idx = spec.series_index(n)
            try:
                v = buhring_eval(row.params, row.z, n_terms=idx).value
                row_cells[MethodId.BUHRING.value][n] = abs(v - reference) / ref_abs
            except GaussHypError as exc:
                row_cells[MethodId.BUHRING.value][n] = ERROR_LABELS.get(
                    type(exc).__name__, type(exc).__name__
                )
            try:
                v = featured(row.params, row.z, idx).value
                row_cells[spec.featured.value][n] = abs(v - reference) / ref_abs
            except GaussHypError as exc:
                row_cells[spec.featured.value][n] = ERROR_LABELS.get(
                    type(exc).__name__, type(exc).__name__
                )
        cells.append(row_cells)
    return TableResult(spec=spec, cells=tuple(cells))


def format_rel_error(x: float, digits: int = 3) -> str:
    """Scientific notation with mantissa in [0.1, 1): 1.18e-6 -> '0.118E-5'."""
    if x == 0.0:
        return "0." + "0" * digits + "E+0"
    if not math.isfinite(x):
        return "INF"
    exp = math.floor(math.log10(abs(x))) + 1
    mant = abs(x) / 10.0**exp
    scaled = round(mant * 10**digits)
    if scaled >= 10**digits:  # rounding pushed the mantissa to 1.000
        scaled //= 10
        exp += 1
    sign = "-" if x < 0 else ""
    return f"{sign}0.{scaled:0{digits}d}E{exp:+d}"


def table_to_csv(result: TableResult) -> str:
    """Deterministic CSV: one line per (row, method), n-labels as columns."""
    header = "row,method," + ",".join(str(n) for n in result.spec.n_values)
    lines = [header]
    for row, row_cells in zip(result.spec.rows, result.cells):
        for method in (MethodId.BUHRING.value, result.spec.featured.value):
            vals = []
            for n in result.spec.n_values:
                cell = row_cells[method][n]
                vals.append(format_rel_error(cell) if isinstance(cell, float) else cell)
            lines.append(f'"{row.caption}",{method},' + ",".join(vals))
    return "\n".join(lines) + "\n"


def table_to_json(result: TableResult) -> str:
    """Deterministic JSON with raw float errors (or failure labels)."""
    payload = {
        "table": result.spec.table_id,
        "n_values": list(result.spec.n_values),
        "featured": result.spec.featured.value,
        "index_rule": result.spec.index_rule,
        "rows": [
            {
                "caption": row.caption,
                "a": row.a,
                "b": row.b,
                "c": row.c,
                "z": {"re": row.z.real, "im": row.z.imag},
                "errors": {
                    method: {str(n): row_cells[method][n] for n in result.spec.n_values}
                    for method in row_cells
                },
            }
            for row, row_cells in zip(result.spec.rows, result.cells)
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
