"""Shared fixtures: benchmark parameter sets, the exceptional point, samplers."""

import cmath
import math
import random

import pytest

from gausshyp import HypParams

#: exp(i*pi/3), the intersection of |z| = 1 and |z-1| = 1.
Z_EXC = cmath.exp(1j * math.pi / 3.0)

#: The four parameter triples used across the benchmark tables.
TABLE_PARAM_SETS = (
    HypParams(1.2, 2.1, 3.0),
    HypParams(1.2, 2.5, 3.0),
    HypParams(1.2, 2.1, 3.5),
    HypParams(1.2, 2.01, 3.0),
)


@pytest.fixture
def z_exc() -> complex:
    return Z_EXC


@pytest.fixture
def params_main() -> HypParams:
    return HypParams(1.2, 2.1, 3.0)


def sample_in_region(predicate, count: int, seed: int, box: float = 3.0) -> list[complex]:
    """Deterministic rejection sampling of z with predicate(z) True."""
    rng = random.Random(seed)
    out: list[complex] = []
    while len(out) < count:
        z = complex(rng.uniform(-box, box), rng.uniform(-box, box))
        if predicate(z):
            out.append(z)
    return out


def rel_err(value: complex, reference: complex) -> float:
    return abs(value - reference) / abs(reference)


def within_factor(computed: float, expected: float, factor: float = 10.0) -> bool:
    return expected / factor <= computed <= expected * factor
