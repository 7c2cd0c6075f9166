"""Qutrit circuits: gate IR, state-vector simulation, measurement, truth tables.

Wire 0 is the most significant digit of a basis index, so kets print with the
first wire leftmost.  Local gate matrices follow the order of ``gate.wires``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .metaplectic_gates import OMEGA, PERM_01, PERM_02, PERM_12, SHIFT_1, SHIFT_2

TOL = 1e-9
NORM_TOL = 1e-12

CHRESTENSON = np.array([[1, 1, 1], [1, OMEGA, OMEGA.conjugate()], [1, OMEGA.conjugate(), OMEGA]]) / np.sqrt(3)

ONE_QUTRIT = {
    "shift+1": SHIFT_1,
    "shift+2": SHIFT_2,
    "perm01": PERM_01,
    "perm12": PERM_12,
    "perm02": PERM_02,
    "chrestenson": CHRESTENSON,
    "chrestenson-dg": CHRESTENSON.conj().T,
    "z": np.diag([1, OMEGA, OMEGA**2]),
    "z-dg": np.diag([1, OMEGA**2, OMEGA]),
}
INVERSE_NAME = {
    "shift+1": "shift+2",
    "shift+2": "shift+1",
    "perm01": "perm01",
    "perm12": "perm12",
    "perm02": "perm02",
    "chrestenson": "chrestenson-dg",
    "chrestenson-dg": "chrestenson",
    "z": "z-dg",
    "z-dg": "z",
}


class NonClassicalCircuitError(ValueError):
    """A circuit sent a basis state to a superposition."""


def _from_classical(n_local: int, fn) -> np.ndarray:
    """Permutation matrix of the digit map ``fn`` on ``n_local`` qutrits."""
    dim = 3**n_local
    m = np.zeros((dim, dim))
    for col, digits in enumerate(itertools.product(range(3), repeat=n_local)):
        out = fn(digits)
        m[int(np.ravel_multi_index(out, (3,) * n_local)), col] = 1
    return m


class Gate:
    """Base class; subclasses define ``wires``, ``matrix`` and ``inverse``."""

    wires: tuple[int, ...]
    clifford: bool = True
    kind: str = "gate"

    def matrix(self) -> np.ndarray:
        raise NotImplementedError

    def inverse(self) -> "Gate":
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    @cached_property
    def permutation(self) -> tuple[int, ...] | None:
        """Classical action as ``table[col] = row`` if the matrix is a permutation."""
        m = self.matrix()
        mag = np.abs(m)
        rows = mag.argmax(axis=0)
        if np.all(np.abs(mag[rows, np.arange(m.shape[1])] - 1) < TOL) and np.abs(mag.sum(axis=0) - 1).max() < TOL:
            if len(set(rows.tolist())) == m.shape[1]:
                return tuple(int(r) for r in rows)
        return None

    def _check_wires(self) -> None:
        if len(set(self.wires)) != len(self.wires):
            raise ValueError(f"{type(self).__name__}: repeated wire in {self.wires}")
        if any(w < 0 for w in self.wires):
            raise ValueError("wire indices are non-negative")


@dataclass(frozen=True, eq=True)
class OneQutritGate(Gate):
    name: str
    target: int
    kind = "one"

    def __post_init__(self) -> None:
        if self.name not in ONE_QUTRIT:
            raise ValueError(f"unknown one-qutrit gate {self.name!r}")

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.target,)

    def matrix(self) -> np.ndarray:
        return np.asarray(ONE_QUTRIT[self.name], dtype=complex)

    def inverse(self) -> "OneQutritGate":
        return OneQutritGate(INVERSE_NAME[self.name], self.target)

    def to_dict(self) -> dict:
        return {"kind": self.name, "target": self.target}


def Shift(amount: int, target: int) -> OneQutritGate:
    if amount % 3 not in (1, 2):
        raise ValueError("shift amount must be 1 or 2")
    return OneQutritGate(f"shift+{amount % 3}", target)


def Perm(pair: str, target: int) -> OneQutritGate:
    return OneQutritGate(f"perm{pair}", target)


def Chrestenson(target: int) -> OneQutritGate:
    return OneQutritGate("chrestenson", target)


@dataclass(frozen=True)
class Sum(Gate):
    """``|c, t> -> |c, t + power*c>``; ``power=1`` is SUM1, ``power=2`` is SUM2."""

    control: int
    target: int
    power: int = 1
    kind = "sum"

    def __post_init__(self) -> None:
        if self.power not in (1, 2):
            raise ValueError("SUM power must be 1 or 2")
        self._check_wires()

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.control, self.target)

    def matrix(self) -> np.ndarray:
        p = self.power
        return _from_classical(2, lambda d: (d[0], (d[1] + p * d[0]) % 3)).astype(complex)

    def inverse(self) -> "Sum":
        return Sum(self.control, self.target, 3 - self.power)

    def to_dict(self) -> dict:
        return {"kind": f"sum{self.power}", "control": self.control, "target": self.target}


@dataclass(frozen=True)
class HardControlled(Gate):
    """One-qutrit gate on ``target`` applied iff every control wire holds its value."""

    inner: str
    controls: tuple[tuple[int, int], ...]
    target: int
    clifford = False
    kind = "hard"

    def __post_init__(self) -> None:
        if self.inner not in ONE_QUTRIT:
            raise ValueError(f"unknown inner gate {self.inner!r}")
        if not self.controls:
            raise ValueError("hard-controlled gate needs at least one control")
        if any(v not in (0, 1, 2) for _, v in self.controls):
            raise ValueError("control values are 0, 1 or 2")
        self._check_wires()

    @property
    def wires(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.controls) + (self.target,)

    def matrix(self) -> np.ndarray:
        m = len(self.controls)
        inner = ONE_QUTRIT[self.inner]
        blocks = []
        for digits in itertools.product(range(3), repeat=m):
            hit = all(d == v for d, (_, v) in zip(digits, self.controls))
            blocks.append(inner if hit else np.eye(3))
        out = np.zeros((3 ** (m + 1),) * 2, dtype=complex)
        for i, b in enumerate(blocks):
            out[3 * i : 3 * i + 3, 3 * i : 3 * i + 3] = b
        return out

    def inverse(self) -> "HardControlled":
        return HardControlled(INVERSE_NAME[self.inner], self.controls, self.target)

    def to_dict(self) -> dict:
        if len(self.controls) == 1:
            control, value = self.controls[0]
        else:
            control = [w for w, _ in self.controls]
            value = [v for _, v in self.controls]
        return {"kind": "hard", "inner": self.inner, "control": control, "value": value, "target": self.target}


@dataclass(frozen=True)
class ControlledSum(Gate):
    """``C_c(SUM)``: ``|h, s, t> -> |h, s, t + power*s*[h == value]>``."""

    hard_control: int
    value: int
    soft_control: int
    target: int
    power: int = 1
    clifford = False
    kind = "csum"

    def __post_init__(self) -> None:
        if self.value not in (0, 1, 2) or self.power not in (1, 2):
            raise ValueError("invalid controlled-SUM parameters")
        self._check_wires()

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.hard_control, self.soft_control, self.target)

    def matrix(self) -> np.ndarray:
        c, p = self.value, self.power
        return _from_classical(3, lambda d: (d[0], d[1], (d[2] + p * d[1] * (d[0] == c)) % 3)).astype(complex)

    def inverse(self) -> "ControlledSum":
        return ControlledSum(self.hard_control, self.value, self.soft_control, self.target, 3 - self.power)

    def to_dict(self) -> dict:
        return {
            "kind": "csum",
            "control": self.hard_control,
            "value": self.value,
            "soft": self.soft_control,
            "target": self.target,
            "power": self.power,
        }


@dataclass(frozen=True)
class Horner(Gate):
    """``|i, j, k> -> |i, j, power*i*j + k>``."""

    i: int
    j: int
    k: int
    power: int = 1
    clifford = False
    kind = "horner"

    def __post_init__(self) -> None:
        self._check_wires()

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.i, self.j, self.k)

    def matrix(self) -> np.ndarray:
        p = self.power
        return _from_classical(3, lambda d: (d[0], d[1], (p * d[0] * d[1] + d[2]) % 3)).astype(complex)

    def inverse(self) -> "Horner":
        return Horner(self.i, self.j, self.k, 3 - self.power)

    def to_dict(self) -> dict:
        return {"kind": "horner", "wires": list(self.wires), "power": self.power}


@dataclass(frozen=True)
class Swap(Gate):
    w1: int
    w2: int
    kind = "swap"

    def __post_init__(self) -> None:
        self._check_wires()

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.w1, self.w2)

    def matrix(self) -> np.ndarray:
        return _from_classical(2, lambda d: (d[1], d[0])).astype(complex)

    def inverse(self) -> "Swap":
        return self

    def to_dict(self) -> dict:
        return {"kind": "swap", "wires": [self.w1, self.w2]}


@dataclass(frozen=True)
class Measure(Gate):
    wire: int
    clifford = False
    kind = "measure"

    @property
    def wires(self) -> tuple[int, ...]:
        return (self.wire,)

    def matrix(self) -> np.ndarray:
        raise TypeError("measurement has no unitary matrix")

    @cached_property
    def permutation(self):
        return None

    def inverse(self) -> "Measure":
        raise TypeError("measurement is not invertible")

    def to_dict(self) -> dict:
        return {"kind": "measure", "target": self.wire}


@dataclass(frozen=True, eq=False)
class Unitary(Gate):
    """Arbitrary local unitary, e.g. a braid-synthesized gate."""

    mat: np.ndarray
    targets: tuple[int, ...]
    label: str = "U"
    clifford: bool = True
    kind = "unitary"

    def __post_init__(self) -> None:
        if self.mat.shape != (3 ** len(self.targets),) * 2:
            raise ValueError("matrix size does not match the number of wires")
        self._check_wires()

    @property
    def wires(self) -> tuple[int, ...]:
        return self.targets

    def matrix(self) -> np.ndarray:
        return self.mat

    def inverse(self) -> "Unitary":
        return Unitary(self.mat.conj().T, self.targets, self.label + "^-1", self.clifford)

    def to_dict(self) -> dict:
        return {"kind": "unitary", "label": self.label, "wires": list(self.targets)}


def gate_matrix(gate: Gate) -> np.ndarray:
    return gate.matrix()


def gate_from_dict(d: dict) -> Gate:
    kind = d["kind"]
    if kind in ONE_QUTRIT:
        return OneQutritGate(kind, int(d["target"]))
    if kind in ("sum", "sum1", "sum2"):
        power = int(d.get("power", 2 if kind == "sum2" else 1))
        return Sum(int(d["control"]), int(d["target"]), power)
    if kind == "hard":
        ctrl, val = d["control"], d["value"]
        if isinstance(ctrl, int):
            ctrl, val = [ctrl], [val]
        if len(ctrl) != len(val):
            raise ValueError("control and value lists differ in length")
        return HardControlled(d["inner"], tuple(zip(map(int, ctrl), map(int, val))), int(d["target"]))
    if kind == "csum":
        return ControlledSum(
            int(d["control"]), int(d["value"]), int(d["soft"]), int(d["target"]), int(d.get("power", 1))
        )
    if kind == "horner":
        i, j, k = d["wires"]
        return Horner(i, j, k, int(d.get("power", 1)))
    if kind == "swap":
        a, b = d["wires"]
        return Swap(a, b)
    if kind == "measure":
        return Measure(int(d["target"]))
    raise ValueError(f"unknown gate kind {kind!r}")


@dataclass(frozen=True)
class QutritCircuit:
    n_wires: int
    gates: tuple[Gate, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n_wires < 1:
            raise ValueError("a circuit needs at least one wire")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.wires) >= self.n_wires:
                raise ValueError(f"gate {g} addresses a wire outside 0..{self.n_wires - 1}")
        if self.labels is not None and len(self.labels) != self.n_wires:
            raise ValueError("one label per wire")

    def inverse(self) -> "QutritCircuit":
        return QutritCircuit(self.n_wires, tuple(g.inverse() for g in reversed(self.gates)), self.labels)

    def then(self, other: "QutritCircuit") -> "QutritCircuit":
        return QutritCircuit(self.n_wires, self.gates + other.gates, self.labels)

    def to_dict(self) -> dict:
        out = {"wires": self.n_wires, "gates": [g.to_dict() for g in self.gates]}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "QutritCircuit":
        labels = d.get("labels")
        return cls(int(d["wires"]), tuple(gate_from_dict(g) for g in d["gates"]), tuple(labels) if labels else None)

    @classmethod
    def from_json(cls, text: str) -> "QutritCircuit":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class QutritState:
    amplitudes: np.ndarray
    n_wires: int

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (3**self.n_wires,):
            raise ValueError("amplitude vector must have length 3**n_wires")

    @classmethod
    def basis(cls, digits: Sequence[int]) -> "QutritState":
        n = len(digits)
        amps = np.zeros(3**n, dtype=complex)
        amps[int(np.ravel_multi_index(tuple(digits), (3,) * n))] = 1
        return cls(amps, n)

    @classmethod
    def from_vector(cls, vec: Iterable[complex]) -> "QutritState":
        amps = np.asarray(list(vec), dtype=complex)
        n = round(np.log(len(amps)) / np.log(3))
        return cls(amps, n)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def fidelity(self, other: "QutritState") -> float:
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)) ** 2)

    def basis_digits(self, tol: float = TOL) -> tuple[int, ...] | None:
        """Digits of the basis state this equals up to phase, else ``None``."""
        idx = int(np.argmax(np.abs(self.amplitudes)))
        if abs(abs(self.amplitudes[idx]) - 1) > tol:
            return None
        return tuple(int(d) for d in np.unravel_index(idx, (3,) * self.n_wires))

    def ket(self, tol: float = 1e-12) -> str:
        terms = []
        for idx in np.flatnonzero(np.abs(self.amplitudes) > tol):
            digits = "".join(str(d) for d in np.unravel_index(idx, (3,) * self.n_wires))
            a = self.amplitudes[idx]
            terms.append(f"({a.real:+.6f}{a.imag:+.6f}j)|{digits}>")
        return " + ".join(terms) if terms else "0"


def apply(state: QutritState, gate: Gate | np.ndarray, wires: Sequence[int] | None = None) -> QutritState:
    """Apply a gate (or a raw local matrix on ``wires``) to ``state``."""
    if isinstance(gate, Measure):
        raise TypeError("use measure() for measurement gates")
    if isinstance(gate, Gate):
        mat, wires = gate.matrix(), gate.wires if wires is None else tuple(wires)
    else:
        mat = np.asarray(gate)
        if wires is None:
            raise ValueError("wires are required for a raw matrix")
    wires = tuple(wires)
    n, m = state.n_wires, len(wires)
    if mat.shape != (3**m, 3**m):
        raise ValueError(f"matrix of shape {mat.shape} does not act on {m} qutrits")
    if max(wires) >= n:
        raise ValueError("wire index out of range")
    psi = state.amplitudes.reshape((3,) * n)
    u = mat.reshape((3,) * (2 * m))
    out = np.tensordot(u, psi, axes=(list(range(m, 2 * m)), list(wires)))
    out = np.moveaxis(out, list(range(m)), list(wires))
    return QutritState(out.reshape(-1), n)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def measure(state: QutritState, wire: int, seed=None) -> tuple[int, QutritState]:
    """Projective measurement of one wire in the computational basis."""
    rng = _rng(seed)
    psi = state.amplitudes.reshape((3,) * state.n_wires)
    probs = np.sum(np.abs(np.moveaxis(psi, wire, 0).reshape(3, -1)) ** 2, axis=1)
    probs = probs / probs.sum()
    outcome = int(rng.choice(3, p=probs))
    proj = np.zeros_like(psi)
    sl = [slice(None)] * state.n_wires
    sl[wire] = outcome
    proj[tuple(sl)] = psi[tuple(sl)]
    proj = proj / np.sqrt(probs[outcome])
    return outcome, QutritState(proj.reshape(-1), state.n_wires)


def sample(state: QutritState, shots: int, seed=None) -> np.ndarray:
    """Sample full-register outcomes; returns an array of basis indices."""
    rng = _rng(seed)
    p = state.probabilities()
    return rng.choice(len(p), size=shots, p=p / p.sum())


@dataclass
class SimulationResult:
    state: QutritState
    outcomes: list[tuple[int, int]] = field(default_factory=list)
    retries: list[int] = field(default_factory=list)
    """Attempts per measurement-assisted gate; filled only in stochastic mode."""


def run(
    circuit: QutritCircuit,
    input_state: QutritState | Sequence[int],
    seed=None,
    assisted_success: float | None = None,
) -> SimulationResult:
    """Simulate ``circuit``; non-Clifford gates act as exact unitaries.

    With ``assisted_success=p`` each non-Clifford gate is also modelled as a
    repeat-until-success protocol and the number of attempts (geometric with
    success probability ``p``) is drawn from the seeded generator.
    """
    state = input_state if isinstance(input_state, QutritState) else QutritState.basis(input_state)
    if state.n_wires != circuit.n_wires:
        raise ValueError("state and circuit sizes differ")
    if assisted_success is not None and not 0 < assisted_success <= 1:
        raise ValueError("success probability must lie in (0, 1]")
    rng = _rng(seed)
    result = SimulationResult(state)
    for g in circuit.gates:
        if isinstance(g, Measure):
            o, state = measure(state, g.wire, rng)
            result.outcomes.append((g.wire, o))
            continue
        if assisted_success is not None and not g.clifford:
            result.retries.append(int(rng.geometric(assisted_success)))
        state = apply(state, g)
    result.state = state
    return result


def simulate(circuit: QutritCircuit, input_state: QutritState | Sequence[int], seed=None) -> QutritState:
    return run(circuit, input_state, seed).state


def classical_run(circuit: QutritCircuit, digits: Sequence[int]) -> tuple[int, ...]:
    """Push a basis state through a circuit whose gates are all permutations."""
    d = list(digits)
    for g in circuit.gates:
        table = g.permutation
        if table is None:
            raise NonClassicalCircuitError(f"gate {g} is not a classical permutation")
        local = [d[w] for w in g.wires]
        idx = int(np.ravel_multi_index(tuple(local), (3,) * len(local)))
        for w, v in zip(g.wires, np.unravel_index(table[idx], (3,) * len(local))):
            d[w] = int(v)
    return tuple(d)


@dataclass(frozen=True)
class TruthTable:
    input_names: tuple[str, ...]
    output_names: tuple[str, ...]
    rows: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def as_dict(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        return dict(self.rows)

    def to_csv(self) -> str:
        lines = [",".join(self.input_names + self.output_names)]
        for ins, outs in self.rows:
            lines.append(",".join(str(x) for x in ins + outs))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "inputs": list(self.input_names),
            "outputs": list(self.output_names),
            "rows": [{"in": list(i), "out": list(o)} for i, o in self.rows],
        }


def truth_table(
    circuit: QutritCircuit,
    input_wires: Sequence[int],
    output_wires: Sequence[int],
    constants: dict[int, int] | None = None,
    domain: Sequence[Sequence[int]] | None = None,
    names: tuple[Sequence[str], Sequence[str]] | None = None,
    full: bool = False,
) -> TruthTable:
    """Tabulate outputs over all input assignments in lexicographic order.

    Circuits made of permutation gates are evaluated digit by digit; anything
    else is simulated and must land on a basis state.  With ``full=True`` the
    output tuple holds every wire.
    """
    constants = dict(constants or {})
    input_wires = tuple(input_wires)
    output_wires = tuple(range(circuit.n_wires)) if full else tuple(output_wires)
    domain = domain or [range(3)] * len(input_wires)
    classical = all(g.permutation is not None for g in circuit.gates)
    rows = []
    for values in itertools.product(*domain):
        digits = [constants.get(w, 0) for w in range(circuit.n_wires)]
        for w, v in zip(input_wires, values):
            digits[w] = v
        if classical:
            final = classical_run(circuit, digits)
        else:
            final = simulate(circuit, digits).basis_digits()
            if final is None:
                raise NonClassicalCircuitError(f"input {tuple(values)} does not map to a basis state")
        rows.append((tuple(values), tuple(final[w] for w in output_wires)))
    if names is None:
        labels = circuit.labels or tuple(f"q{w}" for w in range(circuit.n_wires))
        names = ([labels[w] for w in input_wires], [labels[w] for w in output_wires])
    return TruthTable(tuple(names[0]), tuple(names[1]), tuple(rows))


@dataclass(frozen=True)
class BraidStep:
    gate: Gate
    word: tuple[int, ...]
    strands: int
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class AssistedStep:
    """Non-Clifford gate realized with topological-charge measurement."""

    gate: Gate
    note: str = "measurement-assisted"


@dataclass(frozen=True)
class BraidProgram:
    n_wires: int
    steps: tuple[BraidStep | AssistedStep, ...]

    def braid_count(self) -> int:
        return sum(isinstance(s, BraidStep) for s in self.steps)

    def assisted_count(self) -> int:
        return sum(isinstance(s, AssistedStep) for s in self.steps)

    def as_circuit(self) -> QutritCircuit:
        gates = []
        for s in self.steps:
            if isinstance(s, BraidStep):
                gates.append(Unitary(s.matrix, s.gate.wires, s.gate.kind))
            else:
                gates.append(s.gate)
        return QutritCircuit(self.n_wires, tuple(gates))


def _one_qutrit_words():
    from . import metaplectic_gates as mg

    h, hinv = mg.H_WORD, mg.invert_word(mg.H_WORD)
    z, zinv = mg.Z_WORD, mg.invert_word(mg.Z_WORD)
    return {
        "shift+1": h + zinv + hinv,
        "shift+2": h + z + hinv,
        "perm01": mg.Q_WORD * 2,
        "perm02": mg.P_WORD * 2,
        "perm12": h * 2,
        "chrestenson": h,
        "chrestenson-dg": hinv,
        "z": z,
        "z-dg": zinv,
    }


def _two_qutrit_word(gate: Gate) -> tuple[int, ...]:
    from . import metaplectic_gates as mg

    if isinstance(gate, Sum):
        return mg.sum_word(inverse_cz=gate.power == 1)
    if isinstance(gate, Swap):
        s12 = mg.sum_word(inverse_cz=True)
        s21 = mg.sum_word(inverse_cz=True, control_second=True)
        return mg.H_WORD * 2 + s12 + s21 + s21 + s12
    raise TypeError(f"no two-qutrit braid word for {gate}")


def lower_to_braids(circuit: QutritCircuit, library) -> BraidProgram:
    """Replace Clifford gates by braid words; keep the rest as assisted steps."""
    words = _one_qutrit_words()
    steps: list[BraidStep | AssistedStep] = []
    for g in circuit.gates:
        if isinstance(g, OneQutritGate):
            w = words[g.name]
            steps.append(BraidStep(g, w, 4, library.one.evaluate(w)))
        elif isinstance(g, (Sum, Swap)):
            w = _two_qutrit_word(g)
            steps.append(BraidStep(g, w, 8, library.two.evaluate(w)))
        else:
            steps.append(AssistedStep(g))
    return BraidProgram(circuit.n_wires, tuple(steps))


def simulate_program(program: BraidProgram, input_state: QutritState | Sequence[int], seed=None) -> QutritState:
    return simulate(program.as_circuit(), input_state, seed)


def gate_counts(circuit: QutritCircuit) -> dict[str, int]:
    counts = {"clifford": 0, "non_clifford": 0, "measure": 0}
    for g in circuit.gates:
        if isinstance(g, Measure):
            counts["measure"] += 1
        elif g.clifford:
            counts["clifford"] += 1
        else:
            counts["non_clifford"] += 1
    return counts
