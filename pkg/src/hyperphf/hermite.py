"""Multi-variable Hermite polynomials and the Hermite-extended PHF families.

``H_n(x, y)`` is generated by ``exp(x t + y t**2)`` and ``H3_n(x, y, z)`` by
``exp(x t + y t**2 + z t**3)``.  Exponentials of several shift powers,
``exp(alpha h + eta h**2 [+ delta h**3])``, expand in these polynomials; the
coefficient vectors are the Hermite-extended PHF returned by ``hphf3`` and
``hphf4``.
"""
from __future__ import annotations

import math
import sys
from functools import lru_cache
from math import factorial, gcd

from .circulant import Circulant, circ_mul
from .errors import ConvergenceError, DomainError
from .phf_core import SERIES_TERM_CAP, PhfVector, phf_eval
from .tricomplex import TriComplex

__all__ = [
    "MAX_DEGREE",
    "hermite2",
    "hermite3",
    "hermite_scaled",
    "hphf3",
    "hphf4",
    "hphf_series",
    "generator_exp",
    "hermite_rotate",
]

# n! overflows a double beyond this
MAX_DEGREE = 170
_EPS = sys.float_info.epsilon


def _check_degree(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    n = int(n)
    if n > MAX_DEGREE:
        raise DomainError(f"degree {n} exceeds {MAX_DEGREE}: n! overflows double precision")
    return n


@lru_cache(maxsize=None)
def _ratio(n: int, r: int, step: int) -> float:
    # n! / ((n - step r)! r!) formed exactly in integers, then rounded once
    return float(factorial(n) // (factorial(n - step * r) * factorial(r)))


def hermite2(n: int, x: float, y: float) -> float:
    """``H_n(x, y) = n! sum_r x**(n-2r) y**r / ((n-2r)! r!)``."""
    n = _check_degree(n)
    return math.fsum(_ratio(n, r, 2) * x ** (n - 2 * r) * y**r for r in range(n // 2 + 1))


def hermite3(n: int, x: float, y: float, z: float) -> float:
    """Three-variable Hermite polynomial, the ``t**n / n!`` coefficient of
    ``exp(x t + y t**2 + z t**3)``:

        H3_n = n! sum_{r <= n/3} z**r H_{n-3r}(x, y) / (r! (n-3r)!)
    """
    n = _check_degree(n)
    return math.fsum(
        _ratio(n, r, 3) * z**r * hermite2(n - 3 * r, x, y) for r in range(n // 3 + 1)
    )


def _next_scaled(g: list, coeffs) -> float:
    n = len(g)
    acc = math.fsum(p * c * g[n - p] for p, c in enumerate(coeffs, start=1) if n - p >= 0)
    return acc / n


def hermite_scaled(coeffs, nmax: int) -> list[float]:
    """``H_n / n!`` for ``n = 0 .. nmax`` of ``exp(sum_p coeffs[p-1] t**p)``.

    Uses the recurrence obtained by differentiating the generating function,
    ``n g_n = sum_p p c_p g_{n-p}``, so no factorial is ever formed.
    """
    g = [1.0]
    for _ in range(nmax):
        g.append(_next_scaled(g, coeffs))
    return g


def hphf_series(order: int, coeffs, max_terms: int = SERIES_TERM_CAP) -> PhfVector:
    """Hermite series for the coefficients of ``exp(sum_p coeffs[p-1] h**p)``.

    Component s sums ``H_n / n!`` over ``n = s mod order``; same stopping rule
    as the plain PHF series (three consecutive terms below epsilon times the
    largest partial sum).  Raises ``ConvergenceError`` at the term cap.
    """
    coeffs = tuple(float(c) for c in coeffs)
    if not all(math.isfinite(c) for c in coeffs):
        raise DomainError("arguments must be finite")
    sums = [[] for _ in range(order)]
    partial = [0.0] * order
    g = [1.0]
    quiet = 0
    for n in range(max_terms):
        if n:
            g.append(_next_scaled(g, coeffs))
        term = g[n]
        sums[n % order].append(term)
        partial[n % order] += term
        scale = max(abs(v) for v in partial)
        quiet = quiet + 1 if abs(term) <= _EPS * scale else 0
        if quiet >= 3:
            return PhfVector(order, tuple(math.fsum(s) for s in sums))
    raise ConvergenceError(f"Hermite series did not converge in {max_terms} terms")


def generator_exp(m: int, p: int, t: float) -> Circulant:
    """``exp(t * h**p)`` in the order-m circulant algebra.

    ``h**p`` generates a cyclic group of order ``q = m / gcd(m, p)``, so the
    exponential resums into order-q PHF: ``sum_c e_c(t) h**(p c)``.
    """
    q = m // gcd(m, p % m) if p % m else 1
    coeffs = [0.0] * m
    if q == 1:
        coeffs[0] = math.exp(t)
        return Circulant(tuple(coeffs))
    for c, e in enumerate(phf_eval(q, t)):
        coeffs[(p * c) % m] += e
    return Circulant(tuple(coeffs))


def hphf3(alpha: float, eta: float) -> PhfVector:
    """Coefficients of ``exp(alpha h + eta k)`` for order 3 (``k = h**2``).

    Resummed product form ``_h e_s = sum_c e_c(eta) e_{s+c mod 3}(alpha)``;
    free of the cancellation the Hermite series suffers.
    """
    prod = circ_mul(generator_exp(3, 1, alpha), generator_exp(3, 2, eta))
    return PhfVector(3, prod.coeffs)


def hphf4(alpha: float, eta: float, delta: float) -> PhfVector:
    """Coefficients of ``exp(alpha h + eta h**2 + delta h**3)`` for order 4."""
    prod = circ_mul(
        circ_mul(generator_exp(4, 1, alpha), generator_exp(4, 2, eta)),
        generator_exp(4, 3, delta),
    )
    return PhfVector(4, prod.coeffs)


def hermite_rotate(zeta: TriComplex, alpha: float, eta: float) -> TriComplex:
    """Left action of ``exp(alpha h + eta k)`` on a tri-complex number.

    In the plane this multiplies by ``exp(-eta) * exp(w (alpha - eta))``, a
    modulus factor of ``exp(-(alpha + eta) / 2)``.
    """
    gen = Circulant(hphf3(alpha, eta).values)
    return TriComplex.from_circulant(circ_mul(gen, zeta.to_circulant()))
