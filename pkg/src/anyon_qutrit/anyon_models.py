"""Multiplicity-free anyon models and their consistency checks.

A model is a set of labels with a fusion table, an F-tensor
``F[(a, b, c, d, e, f)] = [F^{abc}_d]_{ef}`` (``e`` in ``a x b``, ``f`` in ``b x c``),
an R-tensor ``R[(a, b, c)] = R^{ab}_c``, quantum dimensions and twists.
Basis convention::

    |((ab)_e c)_d> = sum_f [F^{abc}_d]_{ef} |(a(bc)_f)_d>
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import su2k

TOL = 1e-9

METAPLECTIC_NAMES = ("1", "X", "Y", "X'", "Z")
"""Metaplectic label for each doubled spin 0..4."""


@dataclass(frozen=True)
class LabelMap:
    """Bijection between doubled SU(2)_4 spins and metaplectic names."""

    names: tuple[str, ...] = METAPLECTIC_NAMES

    def name(self, twice_j: int) -> str:
        return self.names[twice_j]

    def spin(self, name: str) -> int:
        return self.names.index(normalize_label(name))


def normalize_label(name: str) -> str:
    aliases = {"Xp": "X'", "X′": "X'", "tau": "τ", "sigma": "σ", "psi": "ψ"}
    return aliases.get(name, name)


@dataclass
class AnyonModel:
    name: str
    labels: tuple[str, ...]
    fusion_rules: dict[tuple[str, str], tuple[str, ...]]
    f_tensor: dict[tuple[str, ...], complex]
    r_tensor: dict[tuple[str, str, str], complex]
    dims: dict[str, float]
    twists: dict[str, complex]
    dual: dict[str, str] = field(default_factory=dict)
    vacuum: str = "1"

    def __post_init__(self) -> None:
        if not self.dual:
            self.dual = {a: b for a in self.labels for b in self.labels if self.vacuum in self.fuse(a, b)}
        self._check()

    def fuse(self, a: str, b: str) -> tuple[str, ...]:
        return self.fusion_rules[(normalize_label(a), normalize_label(b))]

    def N(self, a: str, b: str, c: str) -> int:
        return int(normalize_label(c) in self.fuse(a, b))

    def F(self, a, b, c, d, e, f) -> complex:
        return self.f_tensor.get((a, b, c, d, e, f), 0)

    def R(self, a, b, c) -> complex:
        return self.r_tensor.get((a, b, c), 0)

    def f_matrix(self, a, b, c, d) -> tuple[list[str], list[str], np.ndarray]:
        rows = [e for e in self.fuse(a, b) if d in self.fuse(e, c)]
        cols = [f for f in self.fuse(b, c) if d in self.fuse(a, f)]
        mat = np.array([[self.F(a, b, c, d, e, f) for f in cols] for e in rows], dtype=complex)
        return rows, cols, mat.reshape(len(rows), len(cols))

    def _check(self) -> None:
        v = self.vacuum
        for a in self.labels:
            if self.fuse(a, v) != (a,) or self.fuse(v, a) != (a,):
                raise ValueError(f"{self.name}: vacuum is not the fusion identity for {a}")
            if self.N(a, self.dual[a], v) != 1:
                raise ValueError(f"{self.name}: {a} has no dual")
            for b in self.labels:
                if set(self.fuse(a, b)) != set(self.fuse(b, a)):
                    raise ValueError(f"{self.name}: fusion not commutative for {a}, {b}")
                lhs = self.dims[a] * self.dims[b]
                rhs = sum(self.dims[c] for c in self.fuse(a, b))
                if abs(lhs - rhs) > TOL:
                    raise ValueError(f"{self.name}: d_{a} d_{b} != sum d_c")
        for key in self.f_tensor:
            if len(key) != 6:
                raise ValueError("F-tensor keys must be (a, b, c, d, e, f); multiplicities unsupported")


def _complete_f(labels, fusion, given: dict) -> dict:
    """Fill every admissible F entry not in ``given`` with the trivial value 1."""
    out = {}
    for a, b, c, d in itertools.product(labels, repeat=4):
        rows = [e for e in fusion[(a, b)] if d in fusion[(e, c)]]
        cols = [f for f in fusion[(b, c)] if d in fusion[(a, f)]]
        if len(rows) != len(cols):
            raise ValueError(f"F^{a}{b}{c}_{d} is not square")
        for e in rows:
            for f in cols:
                key = (a, b, c, d, e, f)
                if key in given:
                    out[key] = given[key]
                elif len(rows) == 1:
                    out[key] = 1
                else:
                    raise ValueError(f"missing F entry {key}")
    return out


def fibonacci_model() -> AnyonModel:
    """Fibonacci anyons ``{1, τ}`` with ``τ x τ = 1 + τ``.

    The R phases are ``R^{ττ}_1 = e^{4πi/5}`` and ``R^{ττ}_τ = e^{-3πi/5}``:
    the pair compatible with the hexagon for the real golden-ratio F.
    """
    t = "τ"
    phi = (1 + math.sqrt(5)) / 2
    labels = ("1", t)
    fusion = {("1", "1"): ("1",), ("1", t): (t,), (t, "1"): (t,), (t, t): ("1", t)}
    fmat = np.array([[1 / phi, 1 / math.sqrt(phi)], [1 / math.sqrt(phi), -1 / phi]])
    given = {}
    for i, e in enumerate(("1", t)):
        for j, f in enumerate(("1", t)):
            given[(t, t, t, t, e, f)] = fmat[i, j]
    r = {
        ("1", "1", "1"): 1,
        ("1", t, t): 1,
        (t, "1", t): 1,
        (t, t, "1"): cmath.exp(4j * math.pi / 5),
        (t, t, t): cmath.exp(-3j * math.pi / 5),
    }
    return AnyonModel(
        name="fibonacci",
        labels=labels,
        fusion_rules=fusion,
        f_tensor=_complete_f(labels, fusion, given),
        r_tensor=r,
        dims={"1": 1.0, t: phi},
        twists={"1": 1, t: cmath.exp(-4j * math.pi / 5)},
    )


def ising_model() -> AnyonModel:
    """Ising anyons ``{1, σ, ψ}``."""
    s, p = "σ", "ψ"
    labels = ("1", s, p)
    fusion = {
        ("1", "1"): ("1",), ("1", s): (s,), ("1", p): (p,),
        (s, "1"): (s,), (s, s): ("1", p), (s, p): (s,),
        (p, "1"): (p,), (p, s): (s,), (p, p): ("1",),
    }  # fmt: skip
    h = 1 / math.sqrt(2)
    given = {
        (s, s, s, s, "1", "1"): h,
        (s, s, s, s, "1", p): h,
        (s, s, s, s, p, "1"): h,
        (s, s, s, s, p, p): -h,
        (s, p, s, p, s, s): -1,
        (p, s, p, s, s, s): -1,
    }
    r = {
        (s, s, "1"): cmath.exp(-1j * math.pi / 8),
        (s, s, p): cmath.exp(3j * math.pi / 8),
        (s, p, s): -1j,
        (p, s, s): -1j,
        (p, p, "1"): -1,
    }
    for a in labels:
        r[("1", a, a)] = 1
        r[(a, "1", a)] = 1
    return AnyonModel(
        name="ising",
        labels=labels,
        fusion_rules=fusion,
        f_tensor=_complete_f(labels, fusion, given),
        r_tensor=r,
        dims={"1": 1.0, s: math.sqrt(2), p: 1.0},
        twists={"1": 1, s: cmath.exp(1j * math.pi / 8), p: -1},
    )


def su2k_model(k: int, names: tuple[str, ...] | None = None) -> AnyonModel:
    """Model built verbatim from the SU(2)_k formulas."""
    data = su2k.Su2kData(k)
    if names is None:
        names = tuple(str(j // 2) if j % 2 == 0 else f"{j}/2" for j in data.charges)
    fusion = {
        (names[a], names[b]): tuple(names[c] for c in data.fusion(a, b))
        for a in data.charges
        for b in data.charges
    }
    f_tensor = {}
    for a, b, c, d in itertools.product(data.charges, repeat=4):
        for e in data.fusion(a, b):
            if d not in data.fusion(e, c):
                continue
            for f in data.fusion(b, c):
                if d in data.fusion(a, f):
                    f_tensor[tuple(names[x] for x in (a, b, c, d, e, f))] = data.f(a, b, c, d, e, f)
    r_tensor = {
        (names[a], names[b], names[c]): data.r(a, b, c)
        for a in data.charges
        for b in data.charges
        for c in data.fusion(a, b)
    }
    return AnyonModel(
        name=f"su2_{k}",
        labels=tuple(names),
        fusion_rules=fusion,
        f_tensor=f_tensor,
        r_tensor=r_tensor,
        dims={names[j]: data.dim(j) for j in data.charges},
        twists={names[j]: data.twist(j) for j in data.charges},
        vacuum=names[0],
    )


def metaplectic_model() -> AnyonModel:
    """SU(2)_4 under the labels ``1, X, Y, X', Z`` (doubled spins 0..4)."""
    model = su2k_model(4, METAPLECTIC_NAMES)
    model.name = "metaplectic"
    return model


def vacuum_model() -> AnyonModel:
    return AnyonModel(
        name="trivial",
        labels=("1",),
        fusion_rules={("1", "1"): ("1",)},
        f_tensor={("1",) * 6: 1},
        r_tensor={("1", "1", "1"): 1},
        dims={"1": 1.0},
        twists={"1": 1},
    )


BUILTIN_MODELS = {
    "fibonacci": fibonacci_model,
    "ising": ising_model,
    "metaplectic": metaplectic_model,
}


def get_model(name: str) -> AnyonModel:
    try:
        return BUILTIN_MODELS[name]()
    except KeyError:
        raise ValueError(f"unknown model {name!r}; choose from {sorted(BUILTIN_MODELS)}") from None


def verify_pentagon(model: AnyonModel) -> float:
    """Max residual of

    ``[F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}``.
    """
    F, fuse = model.F, model.fuse
    worst = 0.0
    for a, b, c, d in itertools.product(model.labels, repeat=4):
        for f in fuse(a, b):
            for g in fuse(f, c):
                for l in fuse(c, d):
                    for k in fuse(b, l):
                        for e in fuse(g, d):
                            if e not in fuse(f, l) or e not in fuse(a, k):
                                continue
                            lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k)
                            rhs = sum(
                                F(a, b, c, g, f, h) * F(a, h, d, e, g, k) * F(b, c, d, k, h, l)
                                for h in fuse(b, c)
                            )
                            worst = max(worst, abs(lhs - rhs))
    return worst


def verify_hexagon(model: AnyonModel) -> float:
    """Max residual over both hexagons (R and R^{-1})."""
    F, R, fuse = model.F, model.R, model.fuse
    worst = 0.0
    for a, b, c in itertools.product(model.labels, repeat=3):
        for e in fuse(c, a):
            for g in fuse(c, b):
                for d in fuse(e, b):
                    if d not in fuse(a, g):
                        continue
                    fs = [f for f in fuse(a, b) if d in fuse(c, f)]
                    lhs = R(c, a, e) * F(a, c, b, d, e, g) * R(c, b, g)
                    rhs = sum(F(c, a, b, d, e, f) * R(c, f, d) * F(a, b, c, d, f, g) for f in fs)
                    worst = max(worst, abs(lhs - rhs))
                    lhs = F(a, c, b, d, e, g) / (R(a, c, e) * R(b, c, g))
                    rhs = sum(F(c, a, b, d, e, f) / R(f, c, d) * F(a, b, c, d, f, g) for f in fs)
                    worst = max(worst, abs(lhs - rhs))
    return worst


def verify_ribbon(model: AnyonModel) -> float:
    """Max of ``|(R^{ab}_c)^2 - θ_c/(θ_a θ_b)|``."""
    th = model.twists
    worst = 0.0
    for a, b in itertools.product(model.labels, repeat=2):
        for c in model.fuse(a, b):
            worst = max(worst, abs(model.R(a, b, c) ** 2 - th[c] / (th[a] * th[b])))
    return worst


def verify_f_unitarity(model: AnyonModel) -> float:
    worst = 0.0
    for a, b, c, d in itertools.product(model.labels, repeat=4):
        _, _, m = model.f_matrix(a, b, c, d)
        if m.size:
            worst = max(worst, float(np.abs(m @ m.conj().T - np.eye(m.shape[0])).max()))
    return worst


def fusion_probabilities(model: AnyonModel, a: str, b: str) -> dict[str, float]:
    """``p_c = N_ab^c d_c / (d_a d_b)``."""
    a, b = normalize_label(a), normalize_label(b)
    norm = model.dims[a] * model.dims[b]
    return {c: model.dims[c] / norm for c in model.fuse(a, b)}
