"""q-deformed integers, factorials and 6j symbols at a root of unity.

Spin labels are passed around as doubled integers ``2j`` so that admissibility
checks stay exact.  ``classical_six_j`` is the undeformed Racah formula and is
used as the q -> 1 reference.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

TOL = 1e-9
REAL_TOL = 1e-12


@dataclass(frozen=True)
class DeformationLevel:
    """Level ``k`` of SU(2)_k with ``q = exp(2 pi i/(k+2))``."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"level must be a non-negative integer, got {self.k!r}")

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi / (self.k + 2))

    @property
    def q_half(self) -> complex:
        return cmath.exp(1j * math.pi / (self.k + 2))

    def q_power(self, x: float) -> complex:
        """``q**x`` on the branch ``exp(2 pi i x/(k+2))``."""
        return cmath.exp(2j * math.pi * x / (self.k + 2))


def as_level(level: DeformationLevel | int) -> DeformationLevel:
    if isinstance(level, DeformationLevel):
        return level
    return DeformationLevel(int(level))


@dataclass(frozen=True, order=True)
class SpinLabel:
    """Half-integer spin stored as ``twice_j``."""

    twice_j: int

    def __post_init__(self) -> None:
        if self.twice_j < 0:
            raise ValueError("spin labels are non-negative")

    @classmethod
    def from_spin(cls, j: float) -> "SpinLabel":
        tj = round(2 * j)
        if abs(tj - 2 * j) > 1e-12:
            raise ValueError(f"{j} is not a half-integer")
        return cls(tj)

    @property
    def j(self) -> float:
        return self.twice_j / 2

    def __int__(self) -> int:
        return self.twice_j

    def __str__(self) -> str:
        return str(self.twice_j // 2) if self.twice_j % 2 == 0 else f"{self.twice_j}/2"


def _tj(label: SpinLabel | int) -> int:
    tj = int(label)
    if tj < 0:
        raise ValueError("spin labels are non-negative")
    return tj


def q_integer(n: int, level: DeformationLevel | int) -> complex:
    """Symmetric q-integer ``(q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})``."""
    if n == 0:
        return 0j
    if n == 1:
        return 1 + 0j
    lv = as_level(level)
    s = lv.q_half
    return (s**n - s ** (-n)) / (s - 1 / s)


@lru_cache(maxsize=None)
def _q_factorial(n: int, k: int) -> complex:
    out = 1 + 0j
    for m in range(1, n + 1):
        out *= q_integer(m, k)
    return out


def q_factorial(n: int, level: DeformationLevel | int) -> complex:
    if n < 0:
        raise ValueError(f"q-factorial of negative argument {n}")
    return _q_factorial(n, as_level(level).k)


def admissible(
    j1: SpinLabel | int,
    j2: SpinLabel | int,
    j3: SpinLabel | int,
    level: DeformationLevel | int | None = None,
) -> bool:
    """Triangle condition, integrality, and the level cutoff ``j1+j2+j3 <= k``.

    With ``level=None`` only the classical conditions are checked.
    """
    a, b, c = _tj(j1), _tj(j2), _tj(j3)
    if not abs(a - b) <= c <= a + b:
        return False
    if (a + b + c) % 2:
        return False
    if level is not None and a + b + c > 2 * as_level(level).k:
        return False
    return True


def q_delta(j1, j2, j3, level) -> complex:
    lv = as_level(level)
    if not admissible(j1, j2, j3, lv):
        raise ValueError(f"inadmissible triple {(int(j1), int(j2), int(j3))} at k={lv.k}")
    a, b, c = _tj(j1), _tj(j2), _tj(j3)
    num = (
        q_factorial((-a + b + c) // 2, lv)
        * q_factorial((a - b + c) // 2, lv)
        * q_factorial((a + b - c) // 2, lv)
    )
    return cmath.sqrt(num / q_factorial((a + b + c) // 2 + 1, lv))


def _tableau_bounds(j1, j2, j12, j3, j, j23):
    """Integer alpha (triangle sums) and beta (quadrilateral sums) for the z-range."""
    alphas = (
        (j1 + j2 + j12) // 2,
        (j12 + j3 + j) // 2,
        (j2 + j3 + j23) // 2,
        (j1 + j23 + j) // 2,
    )
    betas = (
        (j1 + j2 + j3 + j) // 2,
        (j1 + j12 + j3 + j23) // 2,
        (j2 + j12 + j + j23) // 2,
    )
    return alphas, betas


def _triangles(j1, j2, j12, j3, j, j23):
    return ((j1, j2, j12), (j12, j3, j), (j2, j3, j23), (j1, j23, j))


def q_six_j(j1, j2, j12, j3, j, j23, level) -> complex:
    """q-6j symbol ``{j1 j2 j12; j3 j j23}_q``; exactly 0 when any triangle fails."""
    lv = as_level(level)
    labels = tuple(_tj(x) for x in (j1, j2, j12, j3, j, j23))
    if not all(admissible(*t, lv) for t in _triangles(*labels)):
        return 0
    return _q_six_j(labels, lv.k)


@lru_cache(maxsize=None)
def _q_six_j(labels: tuple[int, ...], k: int) -> complex:
    alphas, betas = _tableau_bounds(*labels)
    total = 0j
    for z in range(max(alphas), min(betas) + 1):
        den = 1 + 0j
        for a in alphas:
            den *= _q_factorial(z - a, k)
        for b in betas:
            den *= _q_factorial(b - z, k)
        total += (-1) ** z * _q_factorial(z + 1, k) / den
    pref = 1 + 0j
    for t in _triangles(*labels):
        pref *= q_delta(*t, k)
    return pref * total


def _classical_delta(a: int, b: int, c: int) -> float:
    f = math.factorial
    return math.sqrt(
        f((a + b - c) // 2) * f((a - b + c) // 2) * f((-a + b + c) // 2) / f((a + b + c) // 2 + 1)
    )


def racah_w(a, b, c, d, e, f) -> float:
    """Racah coefficient ``W(abcd;ef)`` from ordinary factorials (doubled labels)."""
    a, b, c, d, e, f = (_tj(x) for x in (a, b, c, d, e, f))
    tri = ((a, b, e), (c, d, e), (a, c, f), (b, d, f))
    if not all(admissible(*t) for t in tri):
        return 0.0
    alphas = [sum(t) // 2 for t in tri]
    betas = [(a + b + c + d) // 2, (a + d + e + f) // 2, (b + c + e + f) // 2]
    fact = math.factorial
    omega = 0
    for z in range(max(alphas), min(betas) + 1):
        den = 1
        for al in alphas:
            den *= fact(z - al)
        for be in betas:
            den *= fact(be - z)
        omega += (-1) ** (z + betas[0]) * fact(z + 1) / den
    pref = 1.0
    for t in tri:
        pref *= _classical_delta(*t)
    return pref * omega


def classical_six_j(j1, j2, j12, j3, j, j23) -> float:
    """Wigner 6j ``{j1 j2 j12; j3 j j23}`` through ``(-1)^{a+b+c+d} W(abcd;ef)``."""
    a, b, c, d = _tj(j1), _tj(j2), _tj(j), _tj(j3)
    w = racah_w(a, b, c, d, j12, j23)
    return (-1) ** ((a + b + c + d) // 2) * w
