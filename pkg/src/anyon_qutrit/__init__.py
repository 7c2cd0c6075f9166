"""Metaplectic anyon braiding, qutrit gate synthesis and ternary arithmetic."""

from .anyon_models import AnyonModel, fibonacci_model, get_model, ising_model, metaplectic_model, su2k_model
from .arithmetic import get_blueprint
from .circuit import QutritCircuit, QutritState, simulate, truth_table
from .fusion_space import braid_generator, enumerate_basis
from .kauffman import BraidWord, LaurentPoly, bracket, jones
from .metaplectic_gates import build_gate_library
from .qdeform import DeformationLevel, q_integer, q_six_j

__all__ = [
    "AnyonModel",
    "BraidWord",
    "DeformationLevel",
    "LaurentPoly",
    "QutritCircuit",
    "QutritState",
    "braid_generator",
    "bracket",
    "build_gate_library",
    "enumerate_basis",
    "fibonacci_model",
    "get_blueprint",
    "get_model",
    "ising_model",
    "jones",
    "metaplectic_model",
    "q_integer",
    "q_six_j",
    "simulate",
    "su2k_model",
    "truth_table",
]

__version__ = "0.1.0"
