"""Ternary reversible arithmetic circuits and their reference truth tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .circuit import (
    ControlledSum,
    Gate,
    HardControlled,
    QutritCircuit,
    Sum,
    Swap,
    TruthTable,
    gate_counts,
    truth_table,
)


@dataclass(frozen=True)
class CircuitBlueprint:
    name: str
    circuit: QutritCircuit
    input_wires: tuple[int, ...]
    output_wires: tuple[int, ...]
    constant_wires: dict[int, int] = field(default_factory=dict)
    garbage_wires: tuple[int, ...] = ()
    input_names: tuple[str, ...] = ()
    output_names: tuple[str, ...] = ()
    domain: tuple[tuple[int, ...], ...] | None = None
    description: str = ""

    def __post_init__(self) -> None:
        used = list(self.input_wires) + list(self.constant_wires)
        if sorted(used) != list(range(self.circuit.n_wires)):
            raise ValueError(f"{self.name}: inputs and constants must partition the wires")
        outs = list(self.output_wires) + list(self.garbage_wires)
        if sorted(outs) != list(range(self.circuit.n_wires)):
            raise ValueError(f"{self.name}: outputs and garbage must partition the wires")

    def truth_table(self) -> TruthTable:
        return truth_table(
            self.circuit,
            self.input_wires,
            self.output_wires,
            self.constant_wires,
            self.domain,
            names=(self.input_names, self.output_names),
        )

    def gate_counts(self) -> dict[str, int]:
        return gate_counts(self.circuit)


def _hard(inner: str, target: int, *controls: tuple[int, int]) -> HardControlled:
    return HardControlled(inner, tuple(controls), target)


def _half_adder_gates(a: int, b: int, anc: int) -> list[Gate]:
    return [
        ControlledSum(a, 2, b, anc),
        _hard("perm12", anc, (b, 2)),
        _hard("shift+1", anc, (a, 1), (b, 2)),
        Sum(b, a),
    ]


def _full_adder_gates(a: int, b: int, c: int, anc: int) -> list[Gate]:
    return _half_adder_gates(a, b, anc) + [
        ControlledSum(a, 2, c, anc),
        _hard("shift+2", anc, (a, 2), (c, 2)),
        _hard("shift+1", anc, (a, 1), (c, 2)),
        Sum(c, a),
    ]


def _tppg_gates(a: int, b: int, p: int, cp: int) -> list[Gate]:
    return [
        Sum(b, p),
        _hard("perm12", p, (a, 2)),
        ControlledSum(a, 0, b, p, power=2),
        _hard("shift+1", cp, (a, 2), (b, 2)),
    ]


def _block1_gates(a: int, b: int, cin: int, anc: int) -> list[Gate]:
    return [
        _hard("shift+1", anc, (b, 2)),
        _hard("shift+1", anc, (a, 2), (b, 1)),
        _hard("perm01", anc, (a, 0), (b, 2)),
        Sum(b, a),
        Sum(cin, a),
        _hard("shift+1", anc, (a, 0), (cin, 1)),
    ]


def _block2_gates(a: int, b: int, cin: int, anc: int) -> list[Gate]:
    return [
        _hard("shift+1", anc, (a, 2), (b, 1)),
        Sum(b, a),
        Sum(cin, a),
        _hard("shift+1", anc, (a, 0), (cin, 1)),
    ]


def _block3_gates(a: int, b: int, cin: int, anc: int) -> list[Gate]:
    return [Sum(b, a), Sum(cin, a), _hard("shift+1", anc, (a, 0), (cin, 1))]


def _block4_gates(a: int, cin: int, anc: int) -> list[Gate]:
    return [_hard("shift+1", anc, (a, 2), (cin, 1)), Sum(cin, a)]


def build_half_adder() -> CircuitBlueprint:
    labels = ("A", "B", "0")
    return CircuitBlueprint(
        "half-adder",
        QutritCircuit(3, tuple(_half_adder_gates(0, 1, 2)), labels),
        input_wires=(0, 1),
        output_wires=(0, 2),
        constant_wires={2: 0},
        garbage_wires=(1,),
        input_names=("A", "B"),
        output_names=("S", "c_out"),
        description="C_2(SUM) into the ancilla, C_2(12) and C_{1,2}(+1) fix the carry, then SUM B into A.",
    )


def build_full_adder() -> CircuitBlueprint:
    return CircuitBlueprint(
        "full-adder",
        QutritCircuit(4, tuple(_full_adder_gates(0, 1, 2, 3)), ("A", "B", "C", "0")),
        input_wires=(0, 1, 2),
        output_wires=(0, 3),
        constant_wires={3: 0},
        garbage_wires=(1, 2),
        input_names=("A", "B", "C"),
        output_names=("S", "c_out"),
        description=(
            "Half adder on (A, B), then C_2(SUM) from C, C_{2,2}(+2) and C_{1,2}(+1) on the carry, "
            "then SUM C into A. The two carry corrections attach to A and C; this reading reproduces the table."
        ),
    )


def build_two_qutrit_adder() -> CircuitBlueprint:
    gates = _half_adder_gates(0, 1, 2) + [Swap(2, 5)] + _full_adder_gates(3, 4, 5, 6)
    return CircuitBlueprint(
        "adder2",
        QutritCircuit(7, tuple(gates), ("A0", "B0", "0", "A1", "B1", "0", "0")),
        input_wires=(0, 1, 3, 4),
        output_wires=(0, 3, 6),
        constant_wires={2: 0, 5: 0, 6: 0},
        garbage_wires=(1, 2, 4, 5),
        input_names=("A0", "B0", "A1", "B1"),
        output_names=("S0", "S1", "c_out"),
        description="Half adder on the low digits; its carry is swapped into the full adder's carry-in.",
    )


def build_half_subtractor() -> CircuitBlueprint:
    gates = [
        ControlledSum(0, 0, 1, 2),
        _hard("perm12", 2, (1, 2)),
        _hard("shift+1", 2, (0, 1), (1, 2)),
        Sum(1, 0, power=2),
    ]
    return CircuitBlueprint(
        "half-sub",
        QutritCircuit(3, tuple(gates), ("A", "B", "0")),
        input_wires=(0, 1),
        output_wires=(0, 2),
        constant_wires={2: 0},
        garbage_wires=(1,),
        input_names=("A", "B"),
        output_names=("D", "b_out"),
        description="Borrow from C_0(SUM), C_2(12), C_{1,2}(+1); difference from SUM2 of B into A.",
    )


def build_full_subtractor() -> CircuitBlueprint:
    gates = [
        _hard("shift+1", 3, (1, 2)),
        _hard("shift+1", 3, (0, 0), (1, 1)),
        _hard("shift+2", 3, (0, 2), (1, 2)),
        Sum(1, 0, power=2),
        Sum(2, 0, power=2),
        _hard("shift+1", 3, (0, 2), (2, 2)),
        _hard("shift+1", 3, (0, 2), (2, 1)),
        _hard("shift+1", 3, (0, 1), (2, 2)),
    ]
    return CircuitBlueprint(
        "full-sub",
        QutritCircuit(4, tuple(gates), ("A", "B", "C", "0")),
        input_wires=(0, 1, 2),
        output_wires=(0, 3),
        constant_wires={3: 0},
        garbage_wires=(1, 2),
        input_names=("A", "B", "C"),
        output_names=("D", "b_out"),
        description="Borrow from B, then SUM2 of B and C into A, then borrow corrections keyed on (A, C).",
    )


def build_tppg() -> CircuitBlueprint:
    return CircuitBlueprint(
        "tppg",
        QutritCircuit(4, tuple(_tppg_gates(0, 1, 2, 3)), ("A", "B", "0", "0")),
        input_wires=(0, 1),
        output_wires=(2, 3),
        constant_wires={2: 0, 3: 0},
        garbage_wires=(0, 1),
        input_names=("A", "B"),
        output_names=("P", "cp"),
        description="P = A*B mod 3 via SUM, C_2(12), C_0(SUM2); cp from C_{2,2}(+1).",
    )


_BIT = (0, 1)
_TRIT = (0, 1, 2)


def build_adder_block(n: int) -> CircuitBlueprint:
    if n == 1:
        gates, wires, domain = _block1_gates(0, 1, 2, 3), 4, (_TRIT, _TRIT, _BIT)
    elif n == 2:
        gates, wires, domain = _block2_gates(0, 1, 2, 3), 4, (_TRIT, _BIT, _BIT)
    elif n == 3:
        gates, wires, domain = _block3_gates(0, 1, 2, 3), 4, (_BIT, _BIT, _BIT)
    elif n == 4:
        gates, wires, domain = _block4_gates(0, 1, 2), 3, (_TRIT, _BIT)
    else:
        raise ValueError("adder blocks are numbered 1..4")
    ins = ("A", "B", "c_in") if wires == 4 else ("A", "c_in")
    anc = wires - 1
    return CircuitBlueprint(
        f"block{n}",
        QutritCircuit(wires, tuple(gates), ins + ("0",)),
        input_wires=tuple(range(anc)),
        output_wires=(0, anc),
        constant_wires={anc: 0},
        garbage_wires=tuple(range(1, anc)),
        input_names=ins,
        output_names=("Sum", "c_out"),
        # the tables list the first input fastest
        domain=domain,
        description=f"Restricted-domain adder block {n}.",
    )


# Multiplier wire layout, top to bottom
MULT_WIRES = (
    "A0", "P0", "cp0", "B0", "p10", "cp1", "A1", "p11",
    "cp3", "B1", "p01", "cp2", "c0", "c1", "c2", "c_out",
)  # fmt: skip


def build_multiplier() -> CircuitBlueprint:
    w = {name: i for i, name in enumerate(MULT_WIRES)}
    gates: list[Gate] = []
    gates += _tppg_gates(w["A0"], w["B0"], w["P0"], w["cp0"])
    gates += _tppg_gates(w["A1"], w["B1"], w["p11"], w["cp3"])
    gates += _tppg_gates(w["A1"], w["B0"], w["p10"], w["cp1"])
    gates += _tppg_gates(w["A0"], w["B1"], w["p01"], w["cp2"])
    gates += _block1_gates(w["p01"], w["p10"], w["cp0"], w["c0"])
    gates += _block2_gates(w["p11"], w["cp1"], w["cp2"], w["c1"])
    gates += _block4_gates(w["p11"], w["c0"], w["c2"])
    gates += _block3_gates(w["c2"], w["cp3"], w["c1"], w["c_out"])
    inputs = (w["A0"], w["A1"], w["B0"], w["B1"])
    outputs = (w["P0"], w["p01"], w["p11"], w["c2"], w["c_out"])
    return CircuitBlueprint(
        "multiplier",
        QutritCircuit(16, tuple(gates), MULT_WIRES),
        input_wires=inputs,
        output_wires=outputs,
        constant_wires={i: 0 for i in range(16) if i not in inputs},
        garbage_wires=tuple(i for i in range(16) if i not in outputs),
        input_names=("A0", "A1", "B0", "B1"),
        output_names=("P0", "P1", "P2", "P3", "c_out"),
        description=(
            "Four TPPGs, then Block 1 (P1 = A0B1 + A1B0 + cp0), Block 2 (A1B1 + cp1 + cp2), "
            "Block 4 (adds c0, giving P2) and Block 3 (c2 + cp3 + c1, giving P3 and c_out)."
        ),
    )


BLUEPRINTS: dict[str, Callable[[], CircuitBlueprint]] = {
    "half-adder": build_half_adder,
    "full-adder": build_full_adder,
    "adder2": build_two_qutrit_adder,
    "half-sub": build_half_subtractor,
    "full-sub": build_full_subtractor,
    "tppg": build_tppg,
    "block1": lambda: build_adder_block(1),
    "block2": lambda: build_adder_block(2),
    "block3": lambda: build_adder_block(3),
    "block4": lambda: build_adder_block(4),
    "multiplier": build_multiplier,
}


def get_blueprint(name: str) -> CircuitBlueprint:
    try:
        return BLUEPRINTS[name]()
    except KeyError:
        raise ValueError(f"unknown circuit {name!r}; choose from {sorted(BLUEPRINTS)}") from None


def _rows(text: str, n_in: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    out = []
    for token in text.split():
        digits = tuple(int(ch) for ch in token)
        out.append((digits[:n_in], digits[n_in:]))
    return tuple(out)


# Reference tables, rows in printed order; each token is inputs then outputs.
PRINTED_TABLES: dict[str, TruthTable] = {
    "half-adder": TruthTable(
        ("A", "B"), ("S", "c_out"),
        _rows("0000 0110 0220 1010 1120 1201 2020 2101 2211", 2),
    ),
    "full-adder": TruthTable(
        ("A", "B", "C"), ("S", "c_out"),
        _rows(
            "00000 00110 00220 01010 01120 01201 02020 02101 02211 "
            "10010 10120 10201 11020 11101 11211 12001 12111 12221 "
            "20020 20101 20211 21001 21111 21221 22011 22121 22202",
            3,
        ),
    ),
    "half-sub": TruthTable(
        ("A", "B"), ("D", "b_out"),
        _rows("0000 0121 0211 1010 1100 1221 2020 2110 2200", 2),
    ),
    "full-sub": TruthTable(
        ("A", "B", "C"), ("D", "b_out"),
        _rows(
            "00000 00121 00211 01021 01111 01201 02011 02101 02222 "
            "10010 10100 10221 11000 11121 11211 12021 12111 12201 "
            "20020 20110 20200 21010 21100 21221 22000 22121 22211",
            3,
        ),
    ),
    "tppg": TruthTable(
        ("A", "B"), ("P", "cp"),
        _rows("0000 1000 2000 0100 1110 2120 0200 1220 2211", 2),
    ),
    "block1": TruthTable(
        ("A", "B", "c_in"), ("Sum", "c_out"),
        _rows(
            "00000 10010 20020 01010 11020 21001 02020 12001 22011 "
            "00110 10120 20101 01120 11101 21111 02101 12111 22121",
            3,
        ),
    ),
    "block2": TruthTable(
        ("A", "B", "c_in"), ("Sum", "c_out"),
        _rows("00000 10010 20020 01010 11020 21001 00110 10120 20101 01120 11101 21111", 3),
    ),
    "block3": TruthTable(
        ("A", "B", "c_in"), ("Sum", "c_out"),
        _rows("00000 10010 01010 11020 00110 10120 01120 11101", 3),
    ),
    "block4": TruthTable(
        ("A", "c_in"), ("Sum", "c_out"),
        _rows("0000 1010 2020 0110 1120 2101", 2),
    ),
}  # fmt: skip


def oracle_table(name: str) -> TruthTable:
    """Expected outputs from integer arithmetic over the blueprint's domain."""
    bp = get_blueprint(name)
    domain = bp.domain or [range(3)] * len(bp.input_wires)
    rows = []
    for ins in itertools.product(*domain):
        rows.append((tuple(ins), _ORACLES[name](*ins)))
    return TruthTable(bp.input_names, bp.output_names, tuple(rows))


def _add(*xs: int) -> tuple[int, int]:
    s = sum(xs)
    return s % 3, s // 3


def _sub(a: int, *bs: int) -> tuple[int, int]:
    d = a - sum(bs)
    borrow = -(d // 3)
    return d + 3 * borrow, borrow


def _adder2(a0, b0, a1, b1):
    s = (3 * a1 + a0) + (3 * b1 + b0)
    return s % 3, (s // 3) % 3, s // 9


def _multiply(a0, a1, b0, b1):
    p = (3 * a1 + a0) * (3 * b1 + b0)
    return p % 3, (p // 3) % 3, (p // 9) % 3, (p // 27) % 3, p // 81


_ORACLES: dict[str, Callable[..., tuple[int, ...]]] = {
    "half-adder": _add,
    "full-adder": _add,
    "adder2": _adder2,
    "half-sub": _sub,
    "full-sub": _sub,
    "tppg": lambda a, b: ((a * b) % 3, (a * b) // 3),
    "block1": _add,
    "block2": _add,
    "block3": _add,
    "block4": _add,
    "multiplier": _multiply,
}


@dataclass(frozen=True)
class TableComparison:
    matched: int
    total: int
    mismatches: tuple[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...] | None], ...]

    @property
    def ok(self) -> bool:
        return self.matched == self.total and not self.mismatches


def compare_tables(actual: TruthTable, expected: TruthTable) -> TableComparison:
    """Cell-for-cell comparison keyed by input assignment."""
    got = actual.as_dict()
    bad = []
    matched = 0
    for ins, outs in expected.rows:
        if got.get(ins) == outs:
            matched += 1
        else:
            bad.append((ins, outs, got.get(ins)))
    extra = set(got) - {ins for ins, _ in expected.rows}
    for ins in sorted(extra):
        bad.append((ins, (), got[ins]))
    return TableComparison(matched, len(expected.rows), tuple(bad))


def expected_table(name: str) -> TruthTable:
    """Printed table when one exists, otherwise the arithmetic oracle."""
    return PRINTED_TABLES.get(name) or oracle_table(name)


def verify_blueprint(bp: CircuitBlueprint, reference: TruthTable | None = None) -> TableComparison:
    return compare_tables(bp.truth_table(), reference or expected_table(bp.name))


def digits_to_int(digits: Sequence[int]) -> int:
    """Little-endian base-3 digits to an integer."""
    return sum(d * 3**i for i, d in enumerate(digits))
