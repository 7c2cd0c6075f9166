"""Fusion-tree bases and braid-group representations.

The canonical basis is the left-associated chain
``(((a1 a2)_{e1} a3)_{e2} ... a_n)_{total}``.  Other tree shapes are described
by nested tuples of leaf positions, e.g. ``((0, 1), (2, 3))`` for the balanced
four-leaf tree, and are related to the chain by F-moves computed mechanically.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .anyon_models import AnyonModel, normalize_label

Shape = Union[int, tuple]


def chain_shape(n: int) -> Shape:
    shape: Shape = 0
    for i in range(1, n):
        shape = (shape, i)
    return shape


def _leaf_count(shape: Shape) -> int:
    return 1 if isinstance(shape, int) else _leaf_count(shape[0]) + _leaf_count(shape[1])


def _leaves_in_order(shape: Shape) -> list[int]:
    return [shape] if isinstance(shape, int) else _leaves_in_order(shape[0]) + _leaves_in_order(shape[1])


@dataclass(frozen=True)
class FusionTree:
    """Labeled tree; ``internals`` lists non-root node charges in post-order.

    For the chain shape these are ``e_1 .. e_{n-2}``.
    """

    leaves: tuple[str, ...]
    internals: tuple[str, ...]
    total: str


@dataclass
class FusionBasis:
    model: AnyonModel
    shape: Shape
    trees: list[FusionTree]
    index: dict[FusionTree, int] = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.index = {t: i for i, t in enumerate(self.trees)}
        if len(self.index) != len(self.trees):
            raise ValueError("duplicate fusion trees")

    def __len__(self) -> int:
        return len(self.trees)

    @property
    def n(self) -> int:
        return len(self.trees[0].leaves) if self.trees else _leaf_count(self.shape)

    @property
    def is_chain(self) -> bool:
        return self.shape == chain_shape(_leaf_count(self.shape))


def _label_trees(model: AnyonModel, shape: Shape, leaves: tuple[str, ...]):
    """Yield ``(charge, post-order labels)`` for every admissible labeling of ``shape``."""
    if isinstance(shape, int):
        yield leaves[shape], ()
        return
    for lc, ll in _label_trees(model, shape[0], leaves):
        for rc, rl in _label_trees(model, shape[1], leaves):
            for c in model.fuse(lc, rc):
                yield c, ll + rl + (c,)


def enumerate_basis(
    model: AnyonModel, leaf_label: str, n: int, total_label: str, shape: Shape | None = None
) -> FusionBasis:
    """All admissible trees of ``n`` identical leaves fusing to ``total_label``.

    Ordered lexicographically by internal labels in the model's label order.
    """
    if n < 2:
        raise ValueError("need at least two anyons")
    leaf, total = normalize_label(leaf_label), normalize_label(total_label)
    if shape is None:
        shape = chain_shape(n)
    if sorted(_leaves_in_order(shape)) != list(range(n)) or _leaves_in_order(shape) != list(range(n)):
        raise ValueError("shape must contain leaf positions 0..n-1 in planar order")
    leaves = (leaf,) * n
    rank = {a: i for i, a in enumerate(model.labels)}
    trees = [
        FusionTree(leaves, labels[:-1], total)
        for charge, labels in _label_trees(model, shape, leaves)
        if charge == total
    ]
    trees.sort(key=lambda t: [rank[x] for x in t.internals])
    return FusionBasis(model, shape, trees)


# Nested labeled trees: a leaf is ``(label,)``; a node is ``(left, right, charge)``.


def _nest(shape: Shape, tree: FusionTree) -> tuple:
    labels = iter(tree.internals + (tree.total,))

    def build(s):
        if isinstance(s, int):
            return (tree.leaves[s],)
        left = build(s[0])
        right = build(s[1])
        return (left, right, next(labels))

    return build(shape)


def _charge(node: tuple) -> str:
    return node[0] if len(node) == 1 else node[2]


def _attach(model: AnyonModel, left: tuple, right: tuple, c: str) -> dict[tuple, complex]:
    """Rewrite ``(left right)_c`` (both left combs) as a sum of left combs."""
    if len(right) == 1:
        return {(left, right, c): 1.0}
    inner, x, f = right
    out: dict[tuple, complex] = defaultdict(complex)
    a, b = _charge(left), _charge(inner)
    # |(a(b x)_f)_c> = sum_e conj(F^{abx}_c[e, f]) |((ab)_e x)_c>
    for e in model.fuse(a, b):
        if c not in model.fuse(e, _charge(x)):
            continue
        coef = np.conj(model.F(a, b, _charge(x), c, e, f))
        if coef == 0:
            continue
        for comb, amp in _attach(model, left, inner, e).items():
            out[(comb, x, c)] += coef * amp
    return out


def _to_comb(model: AnyonModel, node: tuple) -> dict[tuple, complex]:
    if len(node) == 1:
        return {node: 1.0}
    out: dict[tuple, complex] = defaultdict(complex)
    for lc, la in _to_comb(model, node[0]).items():
        for rc, ra in _to_comb(model, node[1]).items():
            for comb, amp in _attach(model, lc, rc, node[2]).items():
                out[comb] += la * ra * amp
    return out


def _comb_internals(comb: tuple) -> tuple[str, ...]:
    labels = []
    node = comb
    while len(node) == 3:
        labels.append(node[2])
        node = node[0]
    return tuple(reversed(labels))[:-1]


def chain_coordinates(basis: FusionBasis, chain: FusionBasis | None = None) -> np.ndarray:
    """Columns are the trees of ``basis`` written in the chain basis."""
    if chain is None:
        t0 = basis.trees[0]
        chain = enumerate_basis(basis.model, t0.leaves[0], len(t0.leaves), t0.total)
    if basis.is_chain:
        return np.eye(len(basis), dtype=complex)
    v = np.zeros((len(chain), len(basis)), dtype=complex)
    for j, tree in enumerate(basis.trees):
        for comb, amp in _to_comb(basis.model, _nest(basis.shape, tree)).items():
            key = FusionTree(tree.leaves, _comb_internals(comb), tree.total)
            v[chain.index[key], j] += amp
    return v


def f_move(model: AnyonModel, basis_left: FusionBasis, basis_right: FusionBasis) -> np.ndarray:
    """Matrix taking coordinates in ``basis_left`` to coordinates in ``basis_right``."""
    t0 = basis_left.trees[0]
    t1 = basis_right.trees[0]
    if (t0.leaves, t0.total) != (t1.leaves, t1.total) or len(basis_left) != len(basis_right):
        raise ValueError("bases do not span the same fusion space")
    chain = enumerate_basis(model, t0.leaves[0], len(t0.leaves), t0.total)
    vl = chain_coordinates(basis_left, chain)
    vr = chain_coordinates(basis_right, chain)
    return vr.conj().T @ vl


def _chain_generator(model: AnyonModel, basis: FusionBasis, i: int) -> np.ndarray:
    dim = len(basis)
    u = np.zeros((dim, dim), dtype=complex)
    for col, tree in enumerate(basis.trees):
        leaves = tree.leaves
        chain = (leaves[0],) + tree.internals + (tree.total,)
        a, b = leaves[i - 1], leaves[i]
        if i == 1:
            u[col, col] = model.R(a, b, chain[1])
            continue
        x, m, y = chain[i - 2], chain[i - 1], chain[i]
        # |((x a)_m b)_y> -> sum_f F^{xab}_y[m,f] R^{ab}_f |(x (ba)_f)_y>
        #                -> sum_m' conj(F^{xba}_y[m',f]) |((x b)_m' a)_y>
        for f in model.fuse(a, b):
            if y not in model.fuse(x, f):
                continue
            w = model.F(x, a, b, y, m, f) * model.R(a, b, f)
            if w == 0:
                continue
            for m2 in model.fuse(x, b):
                if y not in model.fuse(m2, a):
                    continue
                coef = w * np.conj(model.F(x, b, a, y, m2, f))
                new_int = list(tree.internals)
                new_int[i - 2] = m2
                new = FusionTree(leaves[: i - 1] + (b, a) + leaves[i + 1 :], tuple(new_int), tree.total)
                u[basis.index[new], col] += coef
    return u


def braid_generator(model: AnyonModel, basis: FusionBasis, i: int) -> np.ndarray:
    """Counter-clockwise exchange of leaves ``i`` and ``i+1`` (1-based)."""
    n = basis.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range 1..{n - 1}")
    key = ("sigma", i)
    if key in basis._cache:
        return basis._cache[key]
    if basis.is_chain:
        u = _chain_generator(model, basis, i)
    else:
        t0 = basis.trees[0]
        chain = enumerate_basis(model, t0.leaves[0], n, t0.total)
        v = chain_coordinates(basis, chain)
        u = v.conj().T @ braid_generator(model, chain, i) @ v
    basis._cache[key] = u
    return u


def b_matrix(model: AnyonModel, a: str, b: str, c: str, d: str) -> np.ndarray:
    """Exchange of ``b`` and ``c`` acting on ``|((ab)_e c)_d>``, indexed by ``e``.

    Equals ``F^{-1} R F`` with the F-matrices ``F^{abc}_d`` and ``F^{acb}_d``.
    """
    a, b, c, d = (normalize_label(x) for x in (a, b, c, d))
    rows_in, cols, f1 = model.f_matrix(a, b, c, d)
    rows_out, cols2, f2 = model.f_matrix(a, c, b, d)
    if cols != cols2:
        raise ValueError("channel spaces differ")
    r = np.diag([model.R(b, c, f) for f in cols])
    return f2.conj() @ r @ f1.T


def dimension_by_walks(model: AnyonModel, leaf: str, n: int, total: str) -> int:
    """Fusion-space dimension from iterated fusion multiplicities (independent of trees)."""
    counts = {model.vacuum: 1}
    for _ in range(n):
        nxt: dict[str, int] = defaultdict(int)
        for x, m in counts.items():
            for y in model.fuse(x, leaf):
                nxt[y] += m
        counts = nxt
    return counts.get(normalize_label(total), 0)
