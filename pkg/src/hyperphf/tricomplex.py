"""Tri-complex numbers ``x + y h + z k`` (order-3 circulants) and Eisenstein numbers.

Conventions
-----------
The Eisenstein unit is ``w = exp(2 pi i / 3) = (-1 + i sqrt(3)) / 2``.  The
planar image of ``x + y h + z k`` is ``x + y w + z w**2``, i.e.
``(x - (y + z) / 2, +sqrt(3) / 2 * (y - z))``; phases are measured in that
plane, so ``rotate(zeta, alpha)`` advances the phase by ``+sqrt(3) alpha / 2``
while shrinking the modulus by ``exp(-alpha / 2)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .circulant import Circulant, circ_expm, circ_mul, shift_power
from .errors import DomainError
from .phf_core import phf_eval

__all__ = [
    "TriComplex",
    "PolarForm",
    "Decomposition",
    "EisensteinNumber",
    "OrthoCoords",
    "OMEGA",
    "ORTHO_MATRIX",
    "det_norm",
    "modulus",
    "polar",
    "decompose",
    "decompose_polar",
    "decomposition_residual",
    "compose",
    "to_plane",
    "rotate",
    "invariant_rotate",
    "ortho_coords",
    "eisenstein_norm",
    "eisenstein_to_cartesian",
    "pseudo_rotation",
    "pseudo_rotation_matrix",
    "plane_complex",
    "plane_factor",
]

OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)

_S3 = math.sqrt(3.0)
_S2 = math.sqrt(2.0)
ORTHO_MATRIX = np.array(
    [
        [2.0, -1.0, -1.0],
        [0.0, _S3, -_S3],
        [_S2, _S2, _S2],
    ]
) / math.sqrt(6.0)


@dataclass(frozen=True)
class TriComplex:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"non-finite component {name}={v!r}")
            object.__setattr__(self, name, v)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __mul__(self, other):
        if isinstance(other, TriComplex):
            return TriComplex.from_circulant(circ_mul(self.to_circulant(), other.to_circulant()))
        return NotImplemented

    def to_circulant(self) -> Circulant:
        return Circulant((self.x, self.y, self.z))

    @classmethod
    def from_circulant(cls, c: Circulant) -> "TriComplex":
        if c.order != 3:
            raise DomainError(f"tri-complex numbers are order-3 circulants, got order {c.order}")
        return cls(*c.coeffs)

    @property
    def trace_sum(self) -> float:
        return self.x + self.y + self.z


class PolarForm(NamedTuple):
    modulus: float
    phase: float
    trace_sum: float
    degenerate: bool = False


class Decomposition(NamedTuple):
    beta: float
    gamma: float


class OrthoCoords(NamedTuple):
    xi1: float
    xi2: float
    xi3: float


@dataclass(frozen=True)
class EisensteinNumber:
    """``a + w b`` with ``w`` the primitive cube root of unity."""

    a: float
    b: float

    def __complex__(self):
        return complex(self.a) + OMEGA * self.b


def det_norm(zeta: TriComplex) -> float:
    """Determinant of the 3x3 circulant, ``x**3 + y**3 + z**3 - 3xyz``."""
    x, y, z = zeta
    return math.fsum((x**3, y**3, z**3, -3.0 * x * y * z))


def modulus(zeta: TriComplex) -> float:
    # x^2+y^2+z^2-xy-xz-yz written as half a sum of squares: never negative
    x, y, z = zeta
    return math.sqrt(0.5 * ((x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2))


def to_plane(zeta: TriComplex) -> tuple[float, float]:
    """Planar image ``x + y w + z w**2`` as ``(re, im)``."""
    x, y, z = zeta
    return x - 0.5 * (y + z), 0.5 * _S3 * (y - z)


def polar(zeta: TriComplex) -> PolarForm:
    """Modulus, planar phase in (-pi, pi] and trace sum ``x + y + z``.

    A zero modulus (the point lies on the symmetric axis x = y = z) gives
    phase 0 with ``degenerate=True``.
    """
    mod = modulus(zeta)
    if mod == 0.0:
        return PolarForm(0.0, 0.0, zeta.trace_sum, True)
    re, im = to_plane(zeta)
    phase = math.atan2(im, re)
    if phase == -math.pi:
        phase = math.pi
    return PolarForm(mod, phase, zeta.trace_sum)


def decompose(zeta: TriComplex) -> Decomposition:
    """Exponential decomposition ``zeta = exp(beta) * phf(3, gamma)``.

    Uses ``exp(3 beta) = det`` and ``exp(beta + gamma) = x + y + z``; only the
    real-logarithm branch is supported.
    """
    det = det_norm(zeta)
    if not det > 0:
        raise DomainError("non-decomposable: non-positive determinant")
    v = zeta.trace_sum
    if not v > 0:
        raise DomainError("non-decomposable: non-positive trace sum")
    beta = math.log(det) / 3.0
    return Decomposition(beta, math.log(v) - beta)


def decompose_polar(zeta: TriComplex) -> Decomposition:
    """Same decomposition through modulus and trace sum:
    ``exp(beta) = cbrt(|zeta|**2 v)``, ``exp(gamma) = cbrt(v**2 / |zeta|**2)``."""
    mod = modulus(zeta)
    v = zeta.trace_sum
    if not (mod > 0 and v > 0):
        raise DomainError("non-decomposable: non-positive determinant")
    log_mod2 = 2.0 * math.log(mod)
    log_v = math.log(v)
    return Decomposition((log_mod2 + log_v) / 3.0, (2.0 * log_v - log_mod2) / 3.0)


def decomposition_residual(zeta: TriComplex) -> float:
    """Relative distance between ``zeta`` and ``compose(*decompose(zeta))``.

    ``compose`` only reaches a two-parameter surface of the three-dimensional
    space (the planar phase is tied to ``gamma``), so a positive determinant
    and trace sum do not guarantee an exact decomposition.
    """
    back = compose(*decompose(zeta))
    return max(abs(u - v) for u, v in zip(back, zeta)) / max(abs(c) for c in zeta)


def compose(beta: float, gamma: float) -> TriComplex:
    """``exp(beta) * (e_0(gamma), e_1(gamma), e_2(gamma))``."""
    if not (math.isfinite(beta) and math.isfinite(gamma)):
        raise DomainError("beta and gamma must be finite")
    scale = math.exp(beta)
    return TriComplex(*(scale * e for e in phf_eval(3, gamma)))


def rotate(zeta: TriComplex, alpha: float) -> TriComplex:
    """Left action of ``exp(alpha h)`` on ``zeta``."""
    if not math.isfinite(alpha):
        raise DomainError("alpha must be finite")
    return TriComplex.from_circulant(circ_mul(circ_expm(alpha * shift_power(3, 1)), zeta.to_circulant()))


def invariant_rotate(zeta: TriComplex, alpha: float) -> TriComplex:
    """``exp(alpha / 2) * rotate(zeta, alpha)``: keeps the modulus fixed."""
    rotated = rotate(zeta, alpha)
    scale = math.exp(0.5 * alpha)
    return TriComplex(*(scale * c for c in rotated))


def ortho_coords(zeta: TriComplex) -> OrthoCoords:
    """Coordinates in the orthonormal frame adapted to the symmetric axis.

    ``xi3 = (x + y + z) / sqrt(3)`` measures the offset along the axis and
    ``(xi1, xi2) = sqrt(2/3) * to_plane(zeta)``.
    """
    xi = ORTHO_MATRIX @ np.array(tuple(zeta))
    return OrthoCoords(*(float(v) for v in xi))


def eisenstein_norm(rho: EisensteinNumber) -> float:
    a, b = rho.a, rho.b
    return a * a - a * b + b * b


def eisenstein_to_cartesian(rho: EisensteinNumber) -> tuple[float, float]:
    return rho.a - 0.5 * rho.b, 0.5 * _S3 * rho.b


def pseudo_rotation_matrix(alpha: float) -> np.ndarray:
    """Planar rotation by ``alpha`` composed with the Eisenstein shear."""
    return np.array(
        [
            [math.cos(alpha), -math.sin(alpha + math.pi / 6.0)],
            [math.sin(alpha), math.cos(alpha + math.pi / 6.0)],
        ]
    )


def pseudo_rotation(rho: EisensteinNumber, alpha: float) -> tuple[float, float]:
    """Cartesian image of ``rho`` rotated by ``alpha``; preserves the norm."""
    if not math.isfinite(alpha):
        raise DomainError("alpha must be finite")
    out = pseudo_rotation_matrix(alpha) @ np.array([rho.a, rho.b])
    return float(out[0]), float(out[1])


def plane_complex(zeta: TriComplex) -> complex:
    return complex(*to_plane(zeta))


def plane_factor(alpha: float) -> complex:
    """``exp(w alpha)``, the planar multiplier of ``rotate``."""
    return cmath.exp(OMEGA * alpha)
