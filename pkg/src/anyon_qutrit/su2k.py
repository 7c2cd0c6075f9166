"""Topological data of SU(2)_k: fusion, F and R symbols, dimensions, twists, S.

All charges are doubled spins ``0..k``.
"""

from __future__ import annotations

import cmath
import math
import threading

import numpy as np

from .qdeform import DeformationLevel, admissible, as_level, q_integer, q_six_j


def _check_label(tj: int, lv: DeformationLevel) -> int:
    tj = int(tj)
    if not 0 <= tj <= lv.k:
        raise ValueError(f"charge 2j={tj} outside SU(2)_{lv.k}")
    return tj


def fusion_products(j1: int, j2: int, level) -> list[int]:
    """Channels ``|j1-j2| <= j <= min(j1+j2, k-j1-j2)`` as doubled spins."""
    lv = as_level(level)
    a, b = _check_label(j1, lv), _check_label(j2, lv)
    return list(range(abs(a - b), min(a + b, 2 * lv.k - a - b) + 1, 2))


def _sign(twice_exponent: int) -> int:
    if twice_exponent % 2:
        raise ArithmeticError(f"non-integer exponent {twice_exponent}/2 in sign factor")
    return -1 if (twice_exponent // 2) % 2 else 1


def f_symbol(j1, j2, j3, j, j12, j23, level) -> complex:
    """``[F^{j1 j2 j3}_j]_{j12, j23}``; zero for inadmissible channels."""
    lv = as_level(level)
    labels = [_check_label(x, lv) for x in (j1, j2, j3, j, j12, j23)]
    a, b, c, d, e, f = labels
    if not (
        admissible(a, b, e, lv)
        and admissible(e, c, d, lv)
        and admissible(b, c, f, lv)
        and admissible(a, f, d, lv)
    ):
        return 0
    sixj = q_six_j(a, b, e, c, d, f, lv)
    return _sign(a + b + c + d) * cmath.sqrt(q_integer(e + 1, lv) * q_integer(f + 1, lv)) * sixj


def r_symbol(j1, j2, j, level) -> complex:
    lv = as_level(level)
    if int(j) not in fusion_products(j1, j2, lv):
        raise ValueError(f"{int(j)} is not a fusion channel of {int(j1)} x {int(j2)}")
    a, b, c = int(j1), int(j2), int(j)
    # j(j+1) = tj(tj+2)/4, so the exponent of q is this over 8
    x = (c * (c + 2) - a * (a + 2) - b * (b + 2)) / 8
    return _sign(c - a - b) * lv.q_power(x)


def quantum_dim(j, level) -> float:
    lv = as_level(level)
    tj = _check_label(j, lv)
    return q_integer(tj + 1, lv).real


def quantum_dim_sine(j, level) -> float:
    lv = as_level(level)
    tj = _check_label(j, lv)
    return math.sin((tj + 1) * math.pi / (lv.k + 2)) / math.sin(math.pi / (lv.k + 2))


def total_dim(level) -> float:
    lv = as_level(level)
    return math.sqrt((lv.k + 2) / 2) / math.sin(math.pi / (lv.k + 2))


def twist(j, level) -> complex:
    lv = as_level(level)
    tj = _check_label(j, lv)
    return lv.q_power(tj * (tj + 2) / 4)


def s_matrix(j1, j2, level) -> float:
    lv = as_level(level)
    a, b = _check_label(j1, lv), _check_label(j2, lv)
    return math.sqrt(2 / (lv.k + 2)) * math.sin((a + 1) * (b + 1) * math.pi / (lv.k + 2))


def s_matrix_full(level) -> np.ndarray:
    lv = as_level(level)
    return np.array([[s_matrix(a, b, lv) for b in range(lv.k + 1)] for a in range(lv.k + 1)])


def f_matrix(j1, j2, j3, j, level) -> tuple[list[int], list[int], np.ndarray]:
    """F-matrix over admissible channels: rows ``j12``, columns ``j23``."""
    lv = as_level(level)
    rows = [e for e in fusion_products(j1, j2, lv) if j in fusion_products(e, j3, lv)]
    cols = [f for f in fusion_products(j2, j3, lv) if j in fusion_products(j1, f, lv)]
    mat = np.array(
        [[f_symbol(j1, j2, j3, j, e, f, lv) for f in cols] for e in rows], dtype=complex
    ).reshape(len(rows), len(cols))
    return rows, cols, mat


class Su2kData:
    """Memoized data block at one level.

    Values are pure functions of their keys, so concurrent readers at worst
    recompute an entry; the lock only keeps dict writes tidy.
    """

    def __init__(self, level) -> None:
        self.level = as_level(level)
        self.f_cache = {}
        self.r_cache = {}
        self._lock = threading.Lock()

    @property
    def charges(self) -> list[int]:
        return list(range(self.level.k + 1))

    def fusion(self, a: int, b: int) -> list[int]:
        return fusion_products(a, b, self.level)

    def f(self, a, b, c, d, e, f) -> complex:
        key = (a, b, c, d, e, f)
        val = self.f_cache.get(key)
        if val is None:
            val = f_symbol(a, b, c, d, e, f, self.level)
            with self._lock:
                self.f_cache[key] = val
        return val

    def r(self, a, b, c) -> complex:
        key = (a, b, c)
        val = self.r_cache.get(key)
        if val is None:
            val = r_symbol(a, b, c, self.level)
            with self._lock:
                self.r_cache[key] = val
        return val

    def dim(self, j) -> float:
        return quantum_dim(j, self.level)

    def twist(self, j) -> complex:
        return twist(j, self.level)

    def total_dim(self) -> float:
        return total_dim(self.level)

    def s_matrix(self) -> np.ndarray:
        return s_matrix_full(self.level)

    def as_dict(self) -> dict:
        """JSON-friendly dump of the data block."""
        k = self.level.k
        labels = [str(j // 2) if j % 2 == 0 else f"{j}/2" for j in self.charges]
        return {
            "level": k,
            "charges": labels,
            "quantum_dims": [self.dim(j) for j in self.charges],
            "total_dim": self.total_dim(),
            "twists": [[self.twist(j).real, self.twist(j).imag] for j in self.charges],
            "s_matrix": self.s_matrix().tolist(),
            "fusion": {
                f"{labels[a]}x{labels[b]}": [labels[c] for c in self.fusion(a, b)]
                for a in self.charges
                for b in self.charges
                if a <= b
            },
        }
