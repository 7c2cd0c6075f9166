"""Command-line front end: ``anyon-qutrit <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import anyon_models as am
from . import arithmetic, circuit, fusion_space, kauffman, qdeform, su2k
from . import metaplectic_gates as mg

DEFAULT_SEED = 20240601

DEFAULT_LEAF = {"metaplectic": "X", "fibonacci": "τ", "ising": "σ"}


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="anyon-qutrit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("json", "csv"), default=default)

    sp = sub.add_parser("verify", help="pentagon, hexagon and ribbon residuals")
    sp.add_argument("--model", default="metaplectic", help="fibonacci, ising, metaplectic or su2k")
    sp.add_argument("--level", type=int, help="level k when --model su2k")
    fmt(sp)

    sp = sub.add_parser("data", help="SU(2)_k data: dims, twists, S, fusion")
    sp.add_argument("--level", type=int, default=4)
    fmt(sp)

    sp = sub.add_parser("braid", help="braid generator on a fusion space")
    sp.add_argument("--model", default="metaplectic")
    sp.add_argument("--leaf", help="anyon type of every leaf (model default if omitted)")
    sp.add_argument("--anyons", type=int, default=4)
    sp.add_argument("--total", default=None)
    sp.add_argument("--generator", type=int, default=1)
    fmt(sp)

    sp = sub.add_parser("synth", help="gate matrix synthesized from braids")
    sp.add_argument("--gate", required=True)
    sp.add_argument("--check", action="store_true", help="report the deviation from the printed reference")
    fmt(sp)

    sp = sub.add_parser("simulate", help="run a circuit JSON file")
    sp.add_argument("-c", "--circuit", required=True, dest="circuit_file")
    sp.add_argument("--input", default=None, help="initial basis digits, e.g. '0 1 2'")
    sp.add_argument("--shots", type=int, default=0)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    fmt(sp)

    sp = sub.add_parser("truth-table", help="truth table of an arithmetic blueprint")
    sp.add_argument("name", choices=sorted(arithmetic.BLUEPRINTS))
    sp.add_argument("--expected", action="store_true", help="diff against the reference table")
    fmt(sp, default="csv")

    sp = sub.add_parser("bracket", help="Kauffman bracket of a braid closure")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--jones", action="store_true", help="print the writhe-normalized polynomial")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("coeff", help="q-6j symbol, F-symbol and classical 6j for doubled spins")
    sp.add_argument("spins", type=int, nargs=6, metavar="2J", help="j1 j2 j12 j3 j j23, doubled")
    sp.add_argument("--level", type=int, default=4)
    fmt(sp)
    return p


def _complex(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix_json(m: np.ndarray) -> dict:
    return {"real": np.real(m).tolist(), "imag": np.imag(m).tolist()}


def _matrix_csv(m: np.ndarray) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in m:
        w.writerow([f"{complex(z).real:.12g}{complex(z).imag:+.12g}j" for z in row])
    return buf.getvalue()


def _records_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(out, fmt: str, payload: dict, csv_text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(csv_text)


def _model(name: str, level: int | None) -> am.AnyonModel:
    if name == "su2k":
        if level is None:
            raise UsageError("--model su2k needs --level")
        return am.su2k_model(level)
    try:
        return am.get_model(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args, out) -> int:
    model = _model(args.model, args.level)
    res = {
        "model": model.name,
        "pentagon": am.verify_pentagon(model),
        "hexagon": am.verify_hexagon(model),
        "ribbon": am.verify_ribbon(model),
        "f_unitarity": am.verify_f_unitarity(model),
    }
    ok = all(v < am.TOL for k, v in res.items() if k != "model")
    res["ok"] = ok
    _emit(out, args.format, res, _records_csv(list(res), [list(res.values())]))
    return 0 if ok else 1


def cmd_data(args, out) -> int:
    if args.level < 1:
        raise UsageError("--level must be positive")
    d = su2k.Su2kData(args.level).as_dict()
    rows = [
        [label, dim, tw[0], tw[1]]
        for label, dim, tw in zip(d["charges"], d["quantum_dims"], d["twists"])
    ]
    _emit(out, args.format, d, _records_csv(["charge", "dim", "twist_re", "twist_im"], rows))
    return 0


def cmd_braid(args, out) -> int:
    model = _model(args.model, None)
    leaf = am.normalize_label(args.leaf or DEFAULT_LEAF.get(args.model, model.labels[1]))
    total = am.normalize_label(args.total) if args.total else model.vacuum
    if leaf not in model.labels or total not in model.labels:
        raise UsageError(f"labels must be among {list(model.labels)}")
    try:
        basis = fusion_space.enumerate_basis(model, leaf, args.anyons, total)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not len(basis):
        raise UsageError("empty fusion space")
    try:
        m = fusion_space.braid_generator(model, basis, args.generator)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "model": model.name,
        "basis": [list(t.internals) for t in basis.trees],
        "generator": args.generator,
        "matrix": _matrix_json(m),
    }
    _emit(out, args.format, payload, _matrix_csv(m))
    return 0


def cmd_synth(args, out) -> int:
    gates = mg.synthesized_gates(mg.build_gate_library())
    if args.gate not in gates:
        raise UsageError(f"unknown gate {args.gate!r}; choose from {sorted(gates)}")
    m = gates[args.gate]
    payload: dict = {"gate": args.gate, "matrix": _matrix_json(m)}
    status = 0
    if args.check:
        ref = mg.reference_gates().get(args.gate)
        if ref is None:
            raise UsageError(f"no printed reference for {args.gate!r}")
        phase, dev = mg.align_phase(m, ref)
        payload.update(phase=_complex(phase), deviation=dev, ok=dev < mg.TOL)
        status = 0 if dev < mg.TOL else 1
    text = _matrix_csv(m)
    if args.check:
        text += f"# deviation {payload['deviation']:.3e}\n"
    _emit(out, args.format, payload, text)
    return status


def cmd_simulate(args, out) -> int:
    try:
        with open(args.circuit_file, encoding="utf-8") as fh:
            circ = circuit.QutritCircuit.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load circuit: {exc}") from None
    digits = [int(x) for x in args.input.replace(",", " ").split()] if args.input else [0] * circ.n_wires
    if len(digits) != circ.n_wires or any(d not in (0, 1, 2) for d in digits):
        raise UsageError(f"--input needs {circ.n_wires} digits in 0..2")
    rng = np.random.default_rng(args.seed)
    result = circuit.run(circ, digits, seed=rng)
    probs = result.state.probabilities()
    nz = [int(i) for i in np.flatnonzero(probs > 1e-15)]
    labels = ["".join(map(str, np.unravel_index(i, (3,) * circ.n_wires))) for i in nz]
    payload: dict = {
        "wires": circ.n_wires,
        "input": digits,
        "measurements": [list(o) for o in result.outcomes],
        "amplitudes": {lab: _complex(result.state.amplitudes[i]) for lab, i in zip(labels, nz)},
        "probabilities": {lab: float(probs[i]) for lab, i in zip(labels, nz)},
    }
    rows = [[lab, float(probs[i])] for lab, i in zip(labels, nz)]
    header = ["basis", "probability"]
    if args.shots:
        draws = circuit.sample(result.state, args.shots, seed=rng)
        counts = np.bincount(draws, minlength=len(probs))
        payload["counts"] = {lab: int(counts[i]) for lab, i in zip(labels, nz) if counts[i]}
        header.append("count")
        rows = [r + [int(counts[i])] for r, i in zip(rows, nz)]
    _emit(out, args.format, payload, _records_csv(header, rows))
    return 0


def cmd_truth_table(args, out) -> int:
    bp = arithmetic.get_blueprint(args.name)
    table = bp.truth_table()
    summary = None
    status = 0
    if args.expected:
        cmp = arithmetic.compare_tables(table, arithmetic.expected_table(args.name))
        summary = f"{cmp.matched}/{cmp.total} rows match"
        status = 0 if cmp.ok else 1
    if args.format == "json":
        payload = table.to_json()
        payload["gate_counts"] = bp.gate_counts()
        if summary:
            payload["comparison"] = summary
            payload["mismatches"] = [
                {"in": list(i), "expected": list(e), "actual": list(a) if a else None}
                for i, e, a in cmp.mismatches
            ]
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(table.to_csv())
        if summary:
            out.write(summary + "\n")
    return status


def cmd_bracket(args, out) -> int:
    try:
        word = kauffman.parse_braid(args.braid, args.strands)
        poly = kauffman.jones(word) if args.jones else kauffman.bracket(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "text":
        out.write(str(poly) + "\n")
    else:
        terms = sorted(poly.coeffs.items(), reverse=True)
        payload = {"braid": list(word.letters), "strands": word.n_strands, "writhe": kauffman.writhe(word),
                   "terms": [[e, c] for e, c in terms]}
        _emit(out, args.format, payload, _records_csv(["exponent", "coefficient"], terms))
    return 0


def cmd_coeff(args, out) -> int:
    j1, j2, j12, j3, j, j23 = args.spins
    if any(s < 0 for s in args.spins) or args.level < 1:
        raise UsageError("spins must be non-negative and --level positive")
    level = qdeform.DeformationLevel(args.level)
    try:
        q6 = qdeform.q_six_j(j1, j2, j12, j3, j, j23, level)
        f = su2k.f_symbol(j1, j2, j3, j, j12, j23, level) if q6 != 0 else 0
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "spins": list(args.spins),
        "level": args.level,
        "q_six_j": _complex(q6),
        "f_symbol": _complex(f),
        "classical_six_j": qdeform.classical_six_j(j1, j2, j12, j3, j, j23),
    }
    row = [*payload["q_six_j"], *payload["f_symbol"], payload["classical_six_j"]]
    _emit(out, args.format, payload,
          _records_csv(["q6j_re", "q6j_im", "f_re", "f_im", "classical"], [row]))
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "data": cmd_data,
    "braid": cmd_braid,
    "synth": cmd_synth,
    "simulate": cmd_simulate,
    "truth-table": cmd_truth_table,
    "bracket": cmd_bracket,
    "coeff": cmd_coeff,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
