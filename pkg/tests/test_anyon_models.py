import cmath
import copy
import itertools
import math

import pytest

from anyon_qutrit.anyon_models import (
    AnyonModel,
    LabelMap,
    fibonacci_model,
    fusion_probabilities,
    get_model,
    ising_model,
    metaplectic_model,
    normalize_label,
    su2k_model,
    vacuum_model,
    verify_f_unitarity,
    verify_hexagon,
    verify_pentagon,
    verify_ribbon,
)
from anyon_qutrit.fusion_space import dimension_by_walks, enumerate_basis

TOL = 1e-9
PHI = (1 + math.sqrt(5)) / 2
MODELS = ["fibonacci", "ising", "metaplectic"]


@pytest.fixture(scope="module", params=MODELS)
def model(request):
    return get_model(request.param)


def test_fibonacci_basics():
    fib = fibonacci_model()
    assert abs(fib.dims["τ"] - PHI) < TOL
    assert set(fib.fuse("τ", "τ")) == {"1", "τ"}
    assert normalize_label("tau") == "τ"


def test_ising_basics():
    ising = ising_model()
    assert abs(ising.dims["σ"] - math.sqrt(2)) < TOL
    assert ising.fuse("ψ", "ψ") == ("1",)
    for n in (1, 2, 3, 4):
        assert len(enumerate_basis(ising, "σ", 2 * n, "1")) == 2 ** (n - 1)


def test_metaplectic_basics():
    meta = metaplectic_model()
    assert set(meta.fuse("X", "X")) == {"1", "Y"}
    dims = [meta.dims[a] for a in ("1", "Z", "X", "X'", "Y")]
    assert dims == pytest.approx([1, 1, math.sqrt(3), math.sqrt(3), 2], abs=TOL)
    assert abs(meta.twists["Y"] - cmath.exp(2j * math.pi / 3)) < TOL
    assert meta.fuse("Xp", "Z") == ("X",)


def test_label_map():
    lm = LabelMap()
    assert lm.name(3) == "X'" and lm.spin("Xp") == 3


def test_su2k_generic_names():
    m = su2k_model(2)
    assert m.labels == ("0", "1/2", "1") and m.vacuum == "0"
    assert verify_pentagon(m) < TOL


def test_model_checks_reject_bad_dims():
    fib = fibonacci_model()
    with pytest.raises(ValueError):
        AnyonModel(
            "bad", fib.labels, fib.fusion_rules, fib.f_tensor, fib.r_tensor, {"1": 1.0, "τ": 1.5}, fib.twists
        )


def test_unknown_model():
    with pytest.raises(ValueError):
        get_model("toric")


def test_all_consistency_residuals(model):
    assert verify_pentagon(model) < TOL
    assert verify_hexagon(model) < TOL
    assert verify_ribbon(model) < TOL
    assert verify_f_unitarity(model) < TOL


def test_vacuum_model_exact():
    v = vacuum_model()
    assert verify_pentagon(v) == 0
    assert verify_hexagon(v) == 0
    assert verify_ribbon(v) == 0


@pytest.mark.parametrize("name", MODELS)
def test_perturbed_f_breaks_pentagon(name):
    m = copy.deepcopy(get_model(name))
    key = next(k for k, v in m.f_tensor.items() if abs(v) < 1 and len(set(k)) > 1)
    m.f_tensor[key] += 1e-3
    assert verify_pentagon(m) >= 1e-4


@pytest.mark.parametrize("name", MODELS)
def test_perturbed_r_breaks_hexagon(name):
    m = copy.deepcopy(get_model(name))
    key = next(k for k in m.r_tensor if "1" not in k[:2])
    m.r_tensor[key] *= cmath.exp(1e-3j)
    assert verify_hexagon(m) >= 1e-4


def test_printed_style_fibonacci_r_violates_hexagon():
    # -e^{3πi/5} for the τ channel is incompatible with the real golden-ratio F
    m = copy.deepcopy(fibonacci_model())
    m.r_tensor[("τ", "τ", "τ")] = -cmath.exp(3j * math.pi / 5)
    assert verify_hexagon(m) > 0.5


def test_metaplectic_ribbon_example():
    meta = metaplectic_model()
    r = meta.R("X", "X", "Y")
    assert abs(r**2 - cmath.exp(2j * math.pi / 3) / cmath.exp(1j * math.pi / 4) ** 2) < TOL


def test_fusion_probabilities():
    fib = fibonacci_model()
    p = fusion_probabilities(fib, "τ", "τ")
    assert p["1"] == pytest.approx(1 / PHI**2, abs=TOL)
    assert p["τ"] == pytest.approx(1 / PHI, abs=TOL)
    assert fusion_probabilities(fib, "τ", "1") == {"τ": pytest.approx(1.0)}
    ising = fusion_probabilities(ising_model(), "σ", "σ")
    assert ising == {"1": pytest.approx(0.5), "ψ": pytest.approx(0.5)}


@pytest.mark.parametrize("name", MODELS)
def test_fusion_probabilities_sum_to_one(name):
    m = get_model(name)
    for a, b in itertools.product(m.labels, repeat=2):
        assert sum(fusion_probabilities(m, a, b).values()) == pytest.approx(1.0, abs=TOL)


def test_dimension_walks_agree_with_trees(model):
    leaf = model.labels[1]
    for n in range(2, 7):
        for total in model.labels:
            assert len(enumerate_basis(model, leaf, n, total)) == dimension_by_walks(model, leaf, n, total)
