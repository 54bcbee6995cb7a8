"""Circulant matrices over the cyclic shift.

A circulant of order ``m`` is ``sum_j c_j * h**j`` where ``h`` is the m x m
cyclic shift with ``h**m == 1``.  Every such matrix is stored as its first
row ``(c_0, ..., c_{m-1})``; products are cyclic convolutions and all
circulants share the Fourier eigenbasis, which is what ``circ_expm`` uses.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "Circulant",
    "shift_power",
    "circ_mul",
    "circ_det",
    "circ_eigenvalues",
    "circ_expm",
    "circ_expm_series",
    "to_dense",
]

# relative bound on the imaginary round-off tolerated in real results
_IMAG_RESIDUE = 1e-10


@dataclass(frozen=True)
class Circulant:
    """Coefficients of ``1, h, h**2, ...`` for a circulant of order ``len(coeffs)``."""

    coeffs: tuple

    # keep numpy scalars from broadcasting over the instance in ``a * circ``
    __array_ufunc__ = None

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) < 2:
            raise DomainError(f"circulant order must be >= 2, got {len(coeffs)}")
        for c in coeffs:
            if not math.isfinite(c):
                raise DomainError(f"non-finite circulant coefficient {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def identity(cls, m: int) -> "Circulant":
        return shift_power(m, 0)

    @classmethod
    def zeros(cls, m: int) -> "Circulant":
        return cls((0,) * m)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __add__(self, other):
        if not isinstance(other, Circulant):
            return NotImplemented
        _check_same_order(self, other)
        return Circulant(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, Circulant):
            return NotImplemented
        _check_same_order(self, other)
        return Circulant(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Circulant(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Circulant):
            return circ_mul(self, other)
        if isinstance(other, Real):
            return Circulant(tuple(other * c for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def to_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)


def _check_same_order(a: Circulant, b: Circulant) -> None:
    if a.order != b.order:
        raise DomainError(f"order mismatch: {a.order} vs {b.order}")


def shift_power(m: int, p: int) -> Circulant:
    """``h**p`` for the m x m cyclic shift; exponents are reduced mod m."""
    if m < 2:
        raise DomainError(f"circulant order must be >= 2, got {m}")
    coeffs = [0] * m
    coeffs[p % m] = 1
    return Circulant(tuple(coeffs))


def circ_mul(a: Circulant, b: Circulant) -> Circulant:
    """Cyclic convolution ``c_k = sum_{i+j = k mod m} a_i b_j``.

    Pure Python arithmetic, so integer coefficients give exact integer
    results.
    """
    _check_same_order(a, b)
    m = a.order
    out = [0] * m
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[(i + j) % m] += ai * bj
    return Circulant(tuple(out))


def to_dense(a: Circulant) -> np.ndarray:
    """Dense m x m matrix with entry ``(r, c) = coeffs[(c - r) mod m]``."""
    m = a.order
    idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m
    return np.asarray(a.coeffs)[idx]


def circ_eigenvalues(a: Circulant) -> np.ndarray:
    """Eigenvalues ``lambda_j = sum_k c_k w**(j k)`` with ``w = exp(2 pi i / m)``.

    ``lambda_j`` belongs to the eigenvector ``(w**(j r))_r``.
    """
    m = a.order
    # numpy's ifft carries the +2 pi i sign and a 1/m factor
    return m * np.fft.ifft(a.to_array())


def _from_eigenvalues(lam: np.ndarray, scale: float) -> Circulant:
    coeffs = np.fft.fft(lam) / lam.size
    residue = float(np.max(np.abs(coeffs.imag)))
    if residue > _IMAG_RESIDUE * max(scale, 1.0):
        raise ArithmeticError(f"imaginary residue {residue:.3e} exceeds round-off bound")
    return Circulant(tuple(float(c) for c in coeffs.real))


def circ_det(a: Circulant) -> float:
    """Determinant as the product of the Fourier eigenvalues.

    For order 3 this is ``x**3 + y**3 + z**3 - 3xyz``.
    """
    lam = circ_eigenvalues(a)
    det = complex(np.prod(lam))
    scale = float(np.prod(np.abs(lam)))
    if abs(det.imag) > _IMAG_RESIDUE * max(scale, 1.0):
        raise ArithmeticError(f"imaginary residue {det.imag:.3e} in determinant")
    return det.real


def circ_expm(a: Circulant) -> Circulant:
    """Matrix exponential computed in the shared Fourier eigenbasis."""
    lam = circ_eigenvalues(a)
    with np.errstate(over="raise", invalid="raise"):
        try:
            mu = np.exp(lam)
        except FloatingPointError as exc:
            raise DomainError("matrix exponential overflows double precision") from exc
    return _from_eigenvalues(mu, float(np.max(np.abs(mu))))


def circ_expm_series(a: Circulant, tol: float = 1e-13) -> Circulant:
    """Scaling-and-squaring Taylor exponential in the circulant algebra.

    Independent of the eigenbasis path and meant as a test oracle.  The
    argument is halved until its infinity norm is at most 1/2, summed with
    a Taylor series to relative accuracy ``tol / 2**s`` (floored at machine
    epsilon) and squared back ``s`` times.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    m = a.order
    c = a.to_array()
    norm = float(np.sum(np.abs(c)))  # induced inf-norm of a circulant
    s = max(0, math.ceil(math.log2(norm)) + 1) if norm > 0 else 0
    c = c / 2.0**s
    stop = max(tol / 2.0**s, np.finfo(float).eps)

    dense = to_dense(Circulant(tuple(c)))
    total = np.zeros(m)
    total[0] = 1.0
    term = total.copy()
    for k in range(1, 200):
        term = (term @ dense) / k
        total = total + term
        if np.max(np.abs(term)) <= stop * np.max(np.abs(total)):
            break
    for _ in range(s):
        total = total @ to_dense(Circulant(tuple(total)))
    return Circulant(tuple(float(v) for v in total))
