"""Kauffman bracket and Jones polynomial of braid closures.

Each crossing ``σ_i`` is resolved as ``A·(identity) + A^{-1}·(cup-cap)``; for
``σ_i^{-1}`` the weights swap.  Closed loops are counted with union-find and
each loop beyond the first contributes ``d = -(A^2 + A^-2)``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "LaurentPoly",
    "BraidWord",
    "A",
    "LOOP_VALUE",
    "MAX_LETTERS",
    "bracket",
    "writhe",
    "jones",
    "history_overlap",
    "parse_braid",
]

MAX_LETTERS = 20


class LaurentPoly:
    """Integer Laurent polynomial in ``A``; immutable, zero terms dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None) -> None:
        self._c = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _lift(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_lift(other))

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _lift(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have integer inverses")
            return LaurentPoly({-e * -n: c ** (-n)})
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def substitute_inverse(self) -> "LaurentPoly":
        """``A -> A^{-1}``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def __call__(self, a: complex) -> complex:
        return sum(c * a**e for e, c in self._c.items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            terms.append(str(c) if e == 0 else f"{c}*A^{e}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"


def _lift(x: "LaurentPoly | int") -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly({0: int(x)})


A = LaurentPoly.monomial(1)
LOOP_VALUE = -(LaurentPoly.monomial(2) + LaurentPoly.monomial(-2))


@dataclass(frozen=True)
class BraidWord:
    n_strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n_strands < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) > self.n_strands - 1:
                raise ValueError(f"generator {g} invalid on {self.n_strands} strands")


def parse_braid(text: str, n_strands: int) -> BraidWord:
    """Whitespace- or comma-separated signed generator indices, e.g. ``"1 -2 1"``."""
    tokens = text.replace(",", " ").split()
    return BraidWord(n_strands, tuple(int(t) for t in tokens))


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.count -= 1

    def copy(self) -> "_UnionFind":
        out = _UnionFind.__new__(_UnionFind)
        out.parent = self.parent[:]
        out.count = self.count
        return out


def _closure_arcs(n: int, letters: Sequence[int]) -> tuple[list[tuple[int, int]], list[tuple[int, int, int, int]]]:
    """Fixed arcs and per-crossing endpoints of the trace closure.

    Point ``p + n*t`` sits on strand ``p`` just above letter ``t``; level ``m``
    is identified with level ``0`` by the closure.
    """
    m = len(letters)

    def node(p: int, t: int) -> int:
        return p + n * (t % m)

    fixed = []
    ends = []
    for t, g in enumerate(letters):
        i = abs(g) - 1
        fixed.extend((node(p, t), node(p, t + 1)) for p in range(n) if p not in (i, i + 1))
        ends.append((node(i, t), node(i + 1, t), node(i, t + 1), node(i + 1, t + 1)))
    return fixed, ends


def _loops(n: int, letters: Sequence[int], smoothing: Sequence[bool]) -> int:
    """Loops of the trace closure; ``smoothing[t]`` True means identity resolution."""
    if not letters:
        return n
    fixed, ends = _closure_arcs(n, letters)
    uf = _UnionFind(n * len(letters))
    for a, b in fixed:
        uf.union(a, b)
    for (top_l, top_r, bot_l, bot_r), ident in zip(ends, smoothing):
        if ident:
            uf.union(top_l, bot_l)
            uf.union(top_r, bot_r)
        else:
            uf.union(top_l, top_r)
            uf.union(bot_l, bot_r)
    return uf.count


def _state_counts(n: int, letters: Sequence[int]) -> Counter:
    """Tally ``(A-exponent, loops)`` over all smoothings by depth-first branching."""
    counts: Counter = Counter()
    if not letters:
        counts[(0, n)] += 1
        return counts
    fixed, ends = _closure_arcs(n, letters)
    base = _UnionFind(n * len(letters))
    for a, b in fixed:
        base.union(a, b)
    signs = [1 if g > 0 else -1 for g in letters]

    def walk(t: int, uf: _UnionFind, exp: int) -> None:
        if t == len(ends):
            counts[(exp, uf.count)] += 1
            return
        top_l, top_r, bot_l, bot_r = ends[t]
        for ident in (True, False):
            child = uf.copy()
            if ident:
                child.union(top_l, bot_l)
                child.union(top_r, bot_r)
            else:
                child.union(top_l, top_r)
                child.union(bot_l, bot_r)
            walk(t + 1, child, exp + (signs[t] if ident else -signs[t]))

    walk(0, base, 0)
    return counts


def bracket(word: BraidWord) -> LaurentPoly:
    """Kauffman bracket of the trace closure, normalized so the unknot is 1."""
    if len(word.letters) > MAX_LETTERS:
        raise ValueError(f"state sum capped at {MAX_LETTERS} crossings")
    total = LaurentPoly()
    d_pow: dict[int, LaurentPoly] = {}
    for (exp, loops), mult in sorted(_state_counts(word.n_strands, word.letters).items()):
        if loops not in d_pow:
            d_pow[loops] = LOOP_VALUE ** (loops - 1)
        total = total + LaurentPoly.monomial(exp, mult) * d_pow[loops]
    return total


def writhe(word: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in word.letters)


def jones(word: BraidWord) -> LaurentPoly:
    """``V(A) = (-A^3)^{-w} <L>``."""
    w = writhe(word)
    factor = LaurentPoly.monomial(-3 * w, (-1) ** (w % 2))
    return factor * bracket(word)


def _pairing_loops(top: Iterable[tuple[int, int]], bottom: Iterable[tuple[int, int]], n: int) -> int:
    uf = _UnionFind(n)
    for a, b in itertools.chain(top, bottom):
        uf.union(a, b)
    return uf.count


# Two ways to create two pairs of anyons from the vacuum on four points:
# adjacent cups (0,1)(2,3) and nested cups (0,3)(1,2).
HISTORY_1 = ((0, 1), (2, 3))
HISTORY_2 = ((0, 3), (1, 2))


def history_overlap() -> tuple[LaurentPoly, LaurentPoly]:
    """``(<1|1>, <2|1>)``: each closed loop of the glued diagram weighs ``d``."""
    d = LOOP_VALUE
    same = _pairing_loops(HISTORY_1, HISTORY_1, 4)
    mixed = _pairing_loops(HISTORY_2, HISTORY_1, 4)
    return d**same, d**mixed
