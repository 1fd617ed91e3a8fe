"""Convergence-region rasters over a rectangle of the z-plane.

Produces (x, y, inside, margin) records in row-major order (y outer,
x inner, both ascending), suitable for external plotting.  Margins follow
each method's own region predicate; for the classical-series
classification ("maclaurin" with a radius rho) the margin is
rho - min(six moduli), so inside means at least one classical expansion
applies at that rho.
"""

import math
from dataclasses import dataclass
from typing import Iterator

from .buhring import DEFAULT_Z0
from .errors import ConfigError
from .onepoint import in_region_onepoint
from .reference import region_moduli
from .results import MethodId
from .select import method_margin
from .threepoint import in_region_threepoint
from .twopoint import in_region_twopoint

MAX_RESOLUTION = 4096


@dataclass(frozen=True)
class RasterSpec:
    method: MethodId
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    res: int
    w: complex | None = None
    rho: float = 0.9
    z0: complex = DEFAULT_Z0

    def __post_init__(self) -> None:
        for v in (self.xmin, self.xmax, self.ymin, self.ymax):
            if not math.isfinite(v):
                raise ConfigError("grid bounds must be finite")
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise ConfigError("grid bounds must satisfy xmax > xmin and ymax > ymin")
        if not (2 <= self.res <= MAX_RESOLUTION):
            raise ConfigError(f"resolution must be in [2, {MAX_RESOLUTION}], got {self.res}")
        if self.method is MethodId.ONEPOINT_W and self.w is None:
            raise ConfigError("onepoint-w raster needs the expansion point w")
        if self.method is MethodId.MACLAURIN and not (0.0 < self.rho < 1.0):
            raise ConfigError(f"classification radius rho must be in (0, 1), got {self.rho}")


def _margin_fn(spec: RasterSpec):
    m = spec.method
    if m is MethodId.MACLAURIN:
        rho = spec.rho

        def f(z: complex) -> float:
            return rho - min(region_moduli(z).values())

        return f
    if m is MethodId.ONEPOINT_HALF:
        return lambda z: in_region_onepoint(z, 0.5).margin
    if m is MethodId.ONEPOINT_W:
        return lambda z: in_region_onepoint(z, spec.w).margin
    if m is MethodId.TWOPOINT:
        return lambda z: in_region_twopoint(z).margin
    if m is MethodId.THREEPOINT:
        return lambda z: in_region_threepoint(z).margin
    return lambda z: method_margin(m, z, w=spec.w, z0=spec.z0)


def region_raster(spec: RasterSpec) -> Iterator[tuple[float, float, bool, float]]:
    """Yield (x, y, inside, margin) over the res x res grid, row-major."""
    margin_of = _margin_fn(spec)
    dx = (spec.xmax - spec.xmin) / (spec.res - 1)
    dy = (spec.ymax - spec.ymin) / (spec.res - 1)
    for j in range(spec.res):
        y = spec.ymin + j * dy
        for i in range(spec.res):
            x = spec.xmin + i * dx
            margin = margin_of(complex(x, y))
            yield x, y, margin > 0.0, margin


def raster_to_csv(spec: RasterSpec) -> str:
    lines = ["x,y,inside,margin"]
    for x, y, inside, margin in region_raster(spec):
        lines.append(f"{x!r},{y!r},{int(inside)},{margin!r}")
    return "\n".join(lines) + "\n"
