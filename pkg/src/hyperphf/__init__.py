"""Pseudo-hyperbolic functions, circulant root-of-unity algebra, tri-complex
numbers, Hermite-extended PHF and an exact crystallographic operator table."""
from .circulant import Circulant, circ_det, circ_expm, circ_mul, shift_power, to_dense
from .errors import ConvergenceError, DomainError
from .hermite import hermite2, hermite3, hermite_rotate, hphf3, hphf4
from .phf_core import PhfVector, phf_add, phf_derivative, phf_eval, phf_eval_series
from .tricomplex import TriComplex, compose, decompose, invariant_rotate, polar, rotate

__version__ = "0.1.0"

__all__ = [
    "Circulant",
    "ConvergenceError",
    "DomainError",
    "PhfVector",
    "TriComplex",
    "circ_det",
    "circ_expm",
    "circ_mul",
    "compose",
    "decompose",
    "hermite2",
    "hermite3",
    "hermite_rotate",
    "hphf3",
    "hphf4",
    "invariant_rotate",
    "phf_add",
    "phf_derivative",
    "phf_eval",
    "phf_eval_series",
    "polar",
    "rotate",
    "shift_power",
    "to_dense",
]
