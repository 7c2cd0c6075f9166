import itertools
import math

import pytest
from hypothesis import given, strategies as st

from anyon_qutrit.qdeform import (
    REAL_TOL,
    TOL,
    DeformationLevel,
    SpinLabel,
    admissible,
    classical_six_j,
    q_delta,
    q_factorial,
    q_integer,
    q_six_j,
)

sympy_wigner = pytest.importorskip("sympy.physics.wigner")
from sympy import Rational  # noqa: E402


def test_level_roots():
    lv = DeformationLevel(4)
    assert abs(lv.q - complex(math.cos(math.pi / 3), math.sin(math.pi / 3))) < TOL
    assert abs(lv.q_half**2 - lv.q) < TOL
    assert abs(lv.q_power(0.5) - lv.q_half) < TOL


def test_level_rejects_negative():
    with pytest.raises(ValueError):
        DeformationLevel(-1)


def test_spin_label_roundtrip():
    s = SpinLabel.from_spin(1.5)
    assert int(s) == 3 and s.j == 1.5
    with pytest.raises(ValueError):
        SpinLabel.from_spin(0.3)


@pytest.mark.parametrize("n, expected", [(0, 0.0), (1, 1.0), (2, math.sqrt(3)), (3, 2.0)])
def test_q_integer_examples(n, expected):
    assert abs(q_integer(n, 4) - expected) < TOL


@given(st.integers(-40, 40), st.integers(1, 30))
def test_q_integer_real_and_odd(n, k):
    v = q_integer(n, k)
    assert abs(v.imag) < REAL_TOL
    assert abs(q_integer(-n, k) + v) < REAL_TOL


@pytest.mark.parametrize("n, expected", [(0, 1.0), (2, math.sqrt(3)), (3, 2 * math.sqrt(3))])
def test_q_factorial(n, expected):
    assert abs(q_factorial(n, 4) - expected) < TOL


def test_q_factorial_negative():
    with pytest.raises(ValueError):
        q_factorial(-1, 4)


def test_admissible_examples():
    assert admissible(1, 1, 2, 4)
    assert not admissible(1, 1, 4, 4)
    assert not admissible(4, 4, 4, 4)
    assert admissible(4, 4, 4)  # no cutoff without a level
    assert not admissible(1, 1, 1)  # parity


def test_q_delta_examples():
    assert abs(q_delta(0, 0, 0, 7) - 1) < TOL
    assert abs(q_delta(1, 1, 0, 4) - 3 ** -0.25) < TOL
    assert abs(q_delta(1, 1, 2, 4) - 0.5372849659) < 1e-9
    with pytest.raises(ValueError):
        q_delta(1, 1, 4, 4)


def test_q_six_j_inadmissible_is_exact_zero():
    v = q_six_j(1, 1, 4, 1, 1, 0, 4)
    assert v == 0 and isinstance(v, int)


def test_q_six_j_large_level_matches_classical():
    assert abs(q_six_j(2, 2, 2, 2, 2, 2, 1000) - classical_six_j(2, 2, 2, 2, 2, 2)) < 1e-4


def test_q_six_j_fibonacci_magnitudes():
    phi = (1 + math.sqrt(5)) / 2
    # F^{111}_1 at k=3 via the 6j symbols, spin-1 playing the role of tau
    from anyon_qutrit.su2k import f_matrix

    rows, cols, m = f_matrix(2, 2, 2, 2, 3)
    assert rows == cols == [0, 2]
    mags = sorted(abs(x) for x in m.ravel())
    assert mags == pytest.approx(sorted([1 / phi, 1 / phi, phi**-0.5, phi**-0.5]), abs=TOL)


def test_classical_examples():
    assert abs(classical_six_j(1, 1, 0, 1, 1, 0) + 0.5) < TOL
    assert classical_six_j(1, 1, 4, 1, 1, 0) == 0.0


def _sympy_6j(t):
    half = [Rational(x, 2) for x in t]
    try:
        return float(sympy_wigner.wigner_6j(*half))
    except ValueError:
        return 0.0


SMALL_TABLEAUX = list(itertools.product(range(4), repeat=6))


def test_classical_six_j_against_sympy():
    worst = 0.0
    for t in SMALL_TABLEAUX[::7]:
        worst = max(worst, abs(classical_six_j(*t) - _sympy_6j(t)))
    assert worst < 1e-12


def _column_perms(t):
    cols = [(t[0], t[3]), (t[1], t[4]), (t[2], t[5])]
    for p in itertools.permutations(cols):
        yield (p[0][0], p[1][0], p[2][0], p[0][1], p[1][1], p[2][1])


def _swap_rows_two_cols(t):
    # {a b c; d e f} = {d e c; a b f}
    a, b, c, d, e, f = t
    return (d, e, c, a, b, f)


def test_q_six_j_symmetries_su2_4():
    checked = 0
    for t in itertools.product(range(5), repeat=6):
        v = q_six_j(*t, 4)
        if v == 0:
            continue
        checked += 1
        for p in _column_perms(t):
            assert abs(q_six_j(*p, 4) - v) < TOL
        assert abs(q_six_j(*_swap_rows_two_cols(t), 4) - v) < TOL
    assert checked > 50


def test_convergence_toward_classical():
    t = (2, 2, 2, 2, 2, 2)
    c = classical_six_j(*t)
    errs = [abs(q_six_j(*t, k) - c) for k in (200, 1000)]
    assert errs[1] < errs[0]
