"""Qutrit gates synthesized from metaplectic braids.

One qutrit lives in four X anyons with total charge Y, in the balanced-tree
basis ``(-|YY>, |1Y>, |Y1>)`` for ``(c12, c34)``.  Two qutrits use eight X
anyons with total Y, restricted to ``c14 = c58 = Y``.

Braid words are tuples of signed generator indices read as written, so
``(1, 2, 1)`` evaluates to ``σ1 @ σ2 @ σ1`` and ``-3`` means ``σ3^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .anyon_models import AnyonModel, metaplectic_model
from .fusion_space import FusionTree, braid_generator, enumerate_basis

TOL = 1e-9

OMEGA = np.exp(2j * np.pi / 3)
GAMMA = np.exp(1j * np.pi / 12)

ONE_QUTRIT_SHAPE = ((0, 1), (2, 3))
TWO_QUTRIT_SHAPE = (((0, 1), (2, 3)), ((4, 5), (6, 7)))
# (c12, c34) and the sign attached to each computational state |0>, |1>, |2>
QUTRIT_STATES = ((("Y", "Y"), -1), (("1", "Y"), 1), (("Y", "1"), 1))


class SubspaceLeakageError(RuntimeError):
    """An operator moved amplitude out of the computational subspace."""


def _perm(*cols: int) -> np.ndarray:
    """Permutation matrix sending ``|j>`` to ``|cols[j]>``."""
    m = np.zeros((len(cols), len(cols)))
    for j, i in enumerate(cols):
        m[i, j] = 1
    return m


SHIFT_1 = _perm(1, 2, 0)
SHIFT_2 = _perm(2, 0, 1)
PERM_01 = _perm(1, 0, 2)
PERM_12 = _perm(0, 2, 1)
PERM_02 = _perm(2, 1, 0)

_I3 = np.eye(3)


def _block_diag(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=complex)
    i = 0
    for b in blocks:
        out[i : i + b.shape[0], i : i + b.shape[0]] = b
        i += b.shape[0]
    return out


PRINTED = {
    "sigma1": GAMMA * np.diag([1, OMEGA, 1]),
    "sigma3": GAMMA * np.diag([1, 1, OMEGA]),
    "sigma2": GAMMA**3 / np.sqrt(3) * np.array([[1, OMEGA, OMEGA], [OMEGA, 1, OMEGA], [OMEGA, OMEGA, 1]]),
    "p2": -PERM_01,
    "q2": -PERM_02,
    "perm12": PERM_12,
    "shift+1": SHIFT_1,
    "shift+2": SHIFT_2,
    "z": np.diag([1, OMEGA, OMEGA**2]),
    "hadamard": 1 / (np.sqrt(3) * 1j) * np.array([[1, 1, 1], [1, OMEGA, OMEGA**2], [1, OMEGA**2, OMEGA]]),
    "sum1": _block_diag(_I3, SHIFT_1, SHIFT_1 @ SHIFT_1),
    "sum2": _block_diag(_I3, SHIFT_1 @ SHIFT_1, SHIFT_1),
}
"""Reference matrices in the computational basis."""

PRINTED["sigma2_expanded"] = GAMMA * np.array(
    [
        [0.5 + np.sqrt(3) * 1j / 6, -0.5 + np.sqrt(3) * 1j / 6, -0.5 + np.sqrt(3) * 1j / 6],
        [-0.5 + np.sqrt(3) * 1j / 6, 0.5 + np.sqrt(3) * 1j / 6, -0.5 + np.sqrt(3) * 1j / 6],
        [-0.5 + np.sqrt(3) * 1j / 6, -0.5 + np.sqrt(3) * 1j / 6, 0.5 + np.sqrt(3) * 1j / 6],
    ]
)


def align_phase(computed: np.ndarray, reference: np.ndarray) -> tuple[complex, float]:
    """Global phase ``c`` with ``c * computed ~ reference`` and the residual after alignment.

    The phase is fixed by the largest-modulus entry of ``computed``.
    """
    computed = np.asarray(computed)
    reference = np.asarray(reference)
    idx = np.unravel_index(np.argmax(np.abs(computed)), computed.shape)
    ratio = reference[idx] / computed[idx]
    phase = ratio / abs(ratio) if abs(ratio) > 0 else 1.0
    return phase, float(np.abs(phase * computed - reference).max())


def phase_deviation(computed: np.ndarray, reference: np.ndarray) -> float:
    return align_phase(computed, reference)[1]


def invert_word(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(word))


def shift_word(word: tuple[int, ...], offset: int) -> tuple[int, ...]:
    return tuple(g + offset if g > 0 else g - offset for g in word)


def power_word(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    return word * n if n >= 0 else invert_word(word) * (-n)


def evaluate_word(generators: list[np.ndarray], word: tuple[int, ...]) -> np.ndarray:
    dim = generators[0].shape[0]
    out = np.eye(dim, dtype=complex)
    for g in word:
        m = generators[abs(g) - 1]
        out = out @ (m if g > 0 else m.conj().T)
    return out


# One-qutrit words
P_WORD = (1, 2, 1)
Q_WORD = (2, 3, 2)
Z_WORD = (1, -3)
H_WORD = Q_WORD * 2 + P_WORD + Q_WORD * 2

# Two-qutrit words on eight strands
S1_WORD = (2, 1, 3, 2)
S2_WORD = (4, 3, 5, 4)
S3_WORD = (6, 5, 7, 6)
LAMBDA_Z_WORD = invert_word(S1_WORD) + S2_WORD * 2 + S1_WORD + invert_word(S3_WORD) + S2_WORD * 2 + S3_WORD


def sum_word(inverse_cz: bool = False, control_second: bool = False) -> tuple[int, ...]:
    """``(I⊗H) Λ(Z)^{±1} (I⊗H^{-1})``, or with ``H`` on the first qutrit."""
    h = H_WORD if control_second else shift_word(H_WORD, 4)
    lz = invert_word(LAMBDA_Z_WORD) if inverse_cz else LAMBDA_Z_WORD
    return h + lz + invert_word(h)


@dataclass(frozen=True)
class OneQutritGates:
    sigma: tuple[np.ndarray, np.ndarray, np.ndarray]
    basis_change: np.ndarray = field(repr=False)
    p: np.ndarray = field(repr=False)
    qb: np.ndarray = field(repr=False)
    z_phase: np.ndarray = field(repr=False)
    hadamard: np.ndarray = field(repr=False)
    permutations: dict[str, np.ndarray] = field(repr=False)

    def evaluate(self, word: tuple[int, ...], strip_gamma: bool = True) -> np.ndarray:
        gens = [s / GAMMA for s in self.sigma] if strip_gamma else list(self.sigma)
        return evaluate_word(gens, word)


def _isometry(rows, signs) -> np.ndarray:
    v = np.zeros((27, len(rows)), dtype=complex)
    for col, (row, sign) in enumerate(zip(rows, signs)):
        v[row, col] = sign
    return v


def restrict(op: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``v^† op v``, refusing operators that do not preserve ``range(v)``."""
    out = v.conj().T @ op @ v
    leak = float(np.abs(op @ v - v @ out).max())
    if leak > TOL:
        raise SubspaceLeakageError(f"operator leaks {leak:.3e} out of the qutrit subspace")
    return out


@dataclass(frozen=True)
class TwoQutritGates:
    sigma: tuple[np.ndarray, ...]
    subspace_index: tuple[int, ...]
    subspace_sign: tuple[int, ...]
    s1: np.ndarray = field(repr=False)
    s2: np.ndarray = field(repr=False)
    s3: np.ndarray = field(repr=False)
    lambda_z_full: np.ndarray = field(repr=False)
    lambda_z: np.ndarray = field(repr=False)
    sum_formula: np.ndarray = field(repr=False)
    sum1: np.ndarray = field(repr=False)
    sum2: np.ndarray = field(repr=False)
    sum1_control_second: np.ndarray = field(repr=False)
    swap: np.ndarray = field(repr=False)

    @property
    def isometry(self) -> np.ndarray:
        """27x9 embedding of the computational subspace."""
        return _isometry(self.subspace_index, self.subspace_sign)

    def restrict(self, op: np.ndarray) -> np.ndarray:
        return restrict(op, self.isometry)

    def evaluate(self, word: tuple[int, ...]) -> np.ndarray:
        """Restricted 9x9 matrix of an eight-strand braid word."""
        return self.restrict(evaluate_word(list(self.sigma), word))


@dataclass(frozen=True)
class GateLibrary:
    one: OneQutritGates
    two: TwoQutritGates


def _qutrit_change(basis) -> np.ndarray:
    """Columns: computational states in the balanced-tree basis."""
    idx = {t.internals: i for i, t in enumerate(basis.trees)}
    v = np.zeros((len(basis), 3), dtype=complex)
    for col, (key, sign) in enumerate(QUTRIT_STATES):
        v[idx[key], col] = sign
    return v


def build_one_qutrit_library(model: AnyonModel | None = None) -> OneQutritGates:
    model = model or metaplectic_model()
    basis = enumerate_basis(model, "X", 4, "Y", shape=ONE_QUTRIT_SHAPE)
    if len(basis) != 3:
        raise ValueError("model does not give a qutrit on four X anyons")
    v = _qutrit_change(basis)
    sigma = tuple(v.conj().T @ braid_generator(model, basis, i) @ v for i in (1, 2, 3))
    s = [m / GAMMA for m in sigma]
    p = evaluate_word(s, P_WORD)
    qb = evaluate_word(s, Q_WORD)
    h = evaluate_word(s, H_WORD)
    z = evaluate_word(s, Z_WORD)
    hinv = h.conj().T
    perms = {
        "p2": p @ p,
        "q2": qb @ qb,
        "perm12": -(h @ h),
        "shift+1": h @ z.conj() @ hinv,
        "shift+2": h @ z @ hinv,
    }
    return OneQutritGates(sigma, v, p, qb, z, h, perms)


def _two_qutrit_subspace(basis) -> tuple[tuple[int, ...], tuple[int, ...]]:
    leaves = basis.trees[0].leaves
    rows, signs = [], []
    for (k1, g1) in QUTRIT_STATES:
        for (k2, g2) in QUTRIT_STATES:
            # post-order internals: c12, c34, c14, c56, c78, c58
            tree = FusionTree(leaves, (k1[0], k1[1], "Y", k2[0], k2[1], "Y"), "Y")
            rows.append(basis.index[tree])
            signs.append(g1 * g2)
    return tuple(rows), tuple(signs)


def build_two_qutrit_library(model: AnyonModel | None = None) -> TwoQutritGates:
    model = model or metaplectic_model()
    basis = enumerate_basis(model, "X", 8, "Y", shape=TWO_QUTRIT_SHAPE)
    sigma = tuple(braid_generator(model, basis, i) for i in range(1, 8))
    rows, signs = _two_qutrit_subspace(basis)
    gens = list(sigma)
    s1, s2, s3 = (evaluate_word(gens, w) for w in (S1_WORD, S2_WORD, S3_WORD))
    lam = evaluate_word(gens, LAMBDA_Z_WORD)
    v = _isometry(rows, signs)
    lam9 = restrict(lam, v)
    formula, sum1, sum1_rev = (
        restrict(evaluate_word(gens, w), v)
        for w in (sum_word(), sum_word(inverse_cz=True), sum_word(inverse_cz=True, control_second=True))
    )
    swap = np.kron(PERM_12, _I3) @ sum1 @ sum1_rev @ sum1_rev @ sum1
    return TwoQutritGates(
        sigma, rows, signs, s1, s2, s3, lam, lam9, formula, sum1, sum1 @ sum1, sum1_rev, swap
    )


def build_swap(library: TwoQutritGates | None = None) -> np.ndarray:
    """``(Z3(12)⊗I) SUM_{1,2} SUM_{2,1} SUM_{2,1} SUM_{1,2}`` from braided SUM gates."""
    return (library or build_two_qutrit_library()).swap


def build_gate_library(model: AnyonModel | None = None) -> GateLibrary:
    model = model or metaplectic_model()
    return GateLibrary(build_one_qutrit_library(model), build_two_qutrit_library(model))


def synthesized_gates(library: GateLibrary) -> dict[str, np.ndarray]:
    """Named gate matrices as produced by braiding (up to global phase)."""
    one, two = library.one, library.two
    out = {
        "sigma1": one.sigma[0],
        "sigma2": one.sigma[1],
        "sigma3": one.sigma[2],
        "p": one.p,
        "q": one.qb,
        "z": one.z_phase,
        "hadamard": one.hadamard,
        "lambda-z": two.lambda_z,
        "sum": two.sum1,
        "sum1": two.sum1,
        "sum2": two.sum2,
        "sum-formula": two.sum_formula,
        "swap": two.swap,
    }
    out.update(one.permutations)
    out["perm01"] = -one.permutations["q2"]
    out["perm02"] = -one.permutations["p2"]
    return out


def reference_gates() -> dict[str, np.ndarray]:
    ref = dict(PRINTED)
    ref["perm01"] = PERM_01
    ref["perm02"] = PERM_02
    ref["sum"] = PRINTED["sum1"]
    ref["sum-formula"] = PRINTED["sum1"]
    ref["swap"] = _perm(*[3 * (k % 3) + k // 3 for k in range(9)])
    ref["lambda-z"] = np.diag([1, 1, 1, 1, OMEGA, OMEGA**2, 1, OMEGA**2, OMEGA])
    return ref
