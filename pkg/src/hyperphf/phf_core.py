"""Pseudo-hyperbolic functions of arbitrary order.

The order-m family splits the exponential series by residue class::

    e_s(alpha) = sum_{r >= 0} alpha**(m r + s) / (m r + s)!,   s = 0 .. m-1

so that ``sum_s e_s(alpha) == exp(alpha)``; m = 2 gives ``(cosh, sinh)``.
The vector ``(e_0, ..., e_{m-1})`` is also the coefficient vector of
``exp(alpha * h)`` for the m x m cyclic shift ``h``, which is where the
addition theorem and the derivative shift come from.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "PhfVector",
    "check_order",
    "phf_eval",
    "phf_eval_series",
    "phf_closed_form",
    "phf_add",
    "phf_derivative",
    "cubic_identities",
    "sum_residual",
    "SERIES_TERM_CAP",
]

SERIES_TERM_CAP = 400
SMALL_ALPHA = 1.0  # below this phf_eval sums each component directly
_EPS = sys.float_info.epsilon


def check_order(m) -> int:
    if isinstance(m, bool) or int(m) != m:
        raise DomainError(f"order must be an integer, got {m!r}")
    m = int(m)
    if m < 2:
        raise DomainError(f"order must be >= 2, got {m}")
    return m


def _check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"argument must be finite, got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class PhfVector:
    """Values ``(e_0, ..., e_{m-1})`` of one order-m evaluation.

    ``converged`` is False only for a series evaluation that ran out of
    terms before its stopping rule fired.
    """

    order: int
    values: tuple
    converged: bool = True

    def __post_init__(self):
        m = check_order(self.order)
        values = tuple(float(v) for v in self.values)
        if len(values) != m:
            raise DomainError(f"expected {m} values, got {len(values)}")
        if not all(math.isfinite(v) for v in values):
            raise DomainError("PHF values must be finite")
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, s):
        return self.values[s]

    def total(self) -> float:
        return math.fsum(self.values)


def phf_closed_form(order: int, alpha: float) -> PhfVector:
    """Root-of-unity resolution ``e_s = (1/m) sum_j w**(-j s) exp(w**j alpha)``.

    Every addend has modulus ``exp(alpha cos(2 pi j / m))``, so nothing
    cancels catastrophically for large negative ``alpha`` the way the
    Taylor series does.
    """
    m = check_order(order)
    alpha = _check_alpha(alpha)
    roots = np.exp(2j * np.pi * np.arange(m) / m)
    # exact roots where they exist; avoids 1e-16 leakage at m = 2, 4
    roots[0] = 1.0
    if m % 2 == 0:
        roots[m // 2] = -1.0
    if m % 4 == 0:
        roots[m // 4] = 1j
        roots[3 * m // 4] = -1j
    with np.errstate(over="raise", invalid="raise"):
        try:
            terms = np.exp(alpha * roots)
        except FloatingPointError as exc:
            raise DomainError(f"exp overflow at alpha={alpha}") from exc
    coeffs = np.fft.fft(terms) / m
    bound = 1e-10 * math.exp(abs(alpha))
    residue = float(np.max(np.abs(coeffs.imag)))
    if residue > bound:
        raise ArithmeticError(f"imaginary residue {residue:.3e} above {bound:.3e}")
    return PhfVector(m, tuple(coeffs.real))


def phf_eval(order: int, alpha: float) -> PhfVector:
    """Evaluate the order-m PHF vector at ``alpha``.

    >>> phf_eval(3, 0.0).values
    (1.0, 0.0, 0.0)
    """
    m = check_order(order)
    alpha = _check_alpha(alpha)
    if abs(alpha) <= SMALL_ALPHA:
        return PhfVector(m, tuple(_component_series(m, s, alpha) for s in range(m)))
    return phf_closed_form(m, alpha)


def _component_series(m: int, s: int, alpha: float) -> float:
    # the closed form cancels for small |alpha|; summing each residue class
    # on its own keeps every component accurate relative to itself
    term = 1.0
    for k in range(1, s + 1):
        term *= alpha / k
    total, n = term, s
    while term != 0.0:
        for k in range(n + 1, n + m + 1):
            term *= alpha / k
        n += m
        if abs(term) <= 0.5 * _EPS * abs(total):
            break
        total += term
    return total


def phf_eval_series(order: int, alpha: float, max_terms: int = SERIES_TERM_CAP) -> PhfVector:
    """Direct Taylor summation with Neumaier-compensated accumulation.

    Stops once three consecutive terms fall below machine epsilon times the
    largest running component.  ``max_terms`` is clamped to the hard cap of
    400; hitting it returns a vector flagged ``converged=False``.
    """
    m = check_order(order)
    alpha = _check_alpha(alpha)
    if max_terms < 1:
        raise DomainError("max_terms must be >= 1")
    max_terms = min(int(max_terms), SERIES_TERM_CAP)

    sums = [0.0] * m
    comps = [0.0] * m
    term = 1.0
    quiet = 0
    converged = False
    for k in range(max_terms):
        if k:
            term *= alpha / k
        s = k % m
        t = sums[s] + term
        if abs(sums[s]) >= abs(term):
            comps[s] += (sums[s] - t) + term
        else:
            comps[s] += (term - t) + sums[s]
        sums[s] = t
        scale = max(abs(v) for v in sums)
        quiet = quiet + 1 if abs(term) <= _EPS * scale else 0
        if quiet >= 3:
            converged = True
            break
    return PhfVector(m, tuple(a + c for a, c in zip(sums, comps)), converged)


def phf_add(u: PhfVector, v: PhfVector) -> PhfVector:
    """Addition theorem: ``w_k = sum_{i+j = k mod m} u_i v_j``.

    With ``u = phf_eval(m, a)`` and ``v = phf_eval(m, b)`` the result is
    ``phf_eval(m, a + b)``.
    """
    if u.order != v.order:
        raise DomainError(f"order mismatch: {u.order} vs {v.order}")
    m = u.order
    acc = [[] for _ in range(m)]
    for i, ui in enumerate(u.values):
        for j, vj in enumerate(v.values):
            acc[(i + j) % m].append(ui * vj)
    return PhfVector(m, tuple(math.fsum(a) for a in acc))


def phf_derivative(v: PhfVector, k: int) -> PhfVector:
    """k-th derivative in alpha, realized as the index shift ``s -> s - k``.

    For m = 3 this is ``d^k e_s = e_{s + 2k mod 3}``.
    """
    if k < 0:
        raise DomainError("derivative order must be >= 0")
    m = v.order
    return PhfVector(m, tuple(v.values[(s - k) % m] for s in range(m)))


def cubic_identities(v: PhfVector, alpha: float) -> tuple[float, float]:
    """Return ``(cubic, quadratic)`` forms of an order-3 vector.

    For ``v = phf_eval(3, alpha)`` the cubic form equals 1 and the quadratic
    form equals ``exp(-alpha)``.  ``alpha`` is only checked for finiteness;
    callers compare the quadratic form against ``exp(-alpha)``.
    """
    if v.order != 3:
        raise DomainError(f"cubic identities need order 3, got {v.order}")
    _check_alpha(alpha)
    e0, e1, e2 = v.values
    cubic = math.fsum((e0**3, e1**3, e2**3, -3.0 * e0 * e1 * e2))
    quadratic = math.fsum((e0 * e0, e1 * e1, e2 * e2, -e0 * e1, -e1 * e2, -e0 * e2))
    return cubic, quadratic


def sum_residual(values: Sequence[float], total_arg: float) -> float:
    """``|sum(values) - exp(t)| / exp(|t|)``, the scaled sum-rule defect."""
    return abs(math.fsum(values) - math.exp(total_arg)) / math.exp(abs(total_arg))
