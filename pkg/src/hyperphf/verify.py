"""Identity checks run by ``hyperphf verify``.

Each suite evaluates its identities on a fixed alpha grid plus a seeded
random sample and reports the worst residual per identity.  Residuals are
scaled to the natural size of the quantities involved (``exp(|alpha|)`` for
PHF values, ``1 + sum |terms|`` for polynomial identities) so a single
tolerance applies across the whole argument range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import crystallo
from .circulant import (
    Circulant,
    circ_det,
    circ_expm,
    circ_expm_series,
    shift_power,
    to_dense,
)
from .hermite import hermite2, hermite3, hermite_rotate, hphf3, hphf4
from .phf_core import phf_add, phf_closed_form, phf_eval, phf_eval_series
from .tricomplex import (
    ORTHO_MATRIX,
    EisensteinNumber,
    TriComplex,
    compose,
    decompose,
    decompose_polar,
    det_norm,
    eisenstein_norm,
    invariant_rotate,
    modulus,
    plane_complex,
    plane_factor,
    pseudo_rotation,
    rotate,
)

__all__ = ["Check", "GRID", "SUITES", "run_suite"]

GRID = (-10.0, -5.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0)
N_RANDOM = 1000


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol


def _alphas(rng, lo: float, hi: float) -> np.ndarray:
    return np.concatenate([GRID, rng.uniform(lo, hi, N_RANDOM)])


def phf_checks(tol: float, rng) -> list[Check]:
    out = []
    alphas = _alphas(rng, -20.0, 20.0)

    worst = 0.0
    for m in range(2, 9):
        for a in alphas:
            worst = max(worst, abs(phf_eval(m, a).total() - math.exp(a)) / math.exp(abs(a)))
    out.append(Check("phf", "sum rule, m = 2..8", worst, tol))

    cubic = quad = 0.0
    for a in alphas:
        e0, e1, e2 = phf_eval(3, a)
        terms = (e0**3, e1**3, e2**3, -3 * e0 * e1 * e2)
        cubic = max(cubic, abs(math.fsum(terms) - 1) / (1 + sum(map(abs, terms))))
        terms = (e0 * e0, e1 * e1, e2 * e2, -e0 * e1, -e1 * e2, -e0 * e2)
        quad = max(quad, abs(math.fsum(terms) - math.exp(-a)) / (1 + sum(map(abs, terms))))
    out.append(Check("phf", "fundamental cubic identity", cubic, tol))
    out.append(Check("phf", "quadratic identity = exp(-alpha)", quad, tol))

    worst = 0.0
    pairs = rng.uniform(-5.0, 5.0, (N_RANDOM, 2))
    for m in (2, 3, 4):
        for a, b in pairs:
            w = phf_add(phf_eval(m, a), phf_eval(m, b))
            d = np.max(np.abs(np.subtract(w.values, phf_eval(m, a + b).values)))
            worst = max(worst, d / math.exp(abs(a) + abs(b)))
    out.append(Check("phf", "addition theorem, m = 2, 3, 4", worst, tol))

    h = 1e-6
    worst = 0.0
    for m in (2, 3, 4):
        for a in GRID:
            plus, minus, here = phf_eval(m, a + h), phf_eval(m, a - h), phf_eval(m, a)
            for s in range(m):
                fd = (plus[s] - minus[s]) / (2 * h)
                worst = max(worst, abs(fd - here[(s - 1) % m]) / math.exp(abs(a)))
    out.append(Check("phf", "derivative shift (finite difference)", worst, 1e4 * tol))

    worst = 0.0
    for m in (2, 3, 4, 5, 7):
        for a in _alphas(rng, -10.0, 10.0)[:200]:
            p = np.array(phf_eval(m, a).values)
            q = np.array(phf_eval_series(m, a).values)
            r = np.array(phf_closed_form(m, a).values)
            d = max(np.max(np.abs(p - q)), np.max(np.abs(p - r)), np.max(np.abs(q - r)))
            worst = max(worst, d / math.exp(abs(a)))
    out.append(Check("phf", "eval / series / closed form agree", worst, tol))

    worst = hyp = 0.0
    for a in alphas:
        c, s = phf_eval(2, a)
        worst = max(worst, max(abs(c - math.cosh(a)), abs(s - math.sinh(a))) / math.cosh(a))
        hyp = max(hyp, abs(c * c - s * s - 1) / (1 + c * c + s * s))
    out.append(Check("phf", "order 2 = (cosh, sinh)", worst, 1e-2 * tol))
    out.append(Check("phf", "cosh^2 - sinh^2 = 1", hyp, tol))

    expm = detlaw = 0.0
    for _ in range(500):
        m = int(rng.integers(2, 7))
        a = Circulant(tuple(rng.uniform(-2.0, 2.0, m)))
        e = circ_expm(a)
        ea, eb = e.to_array(), circ_expm_series(a).to_array()
        expm = max(expm, np.max(np.abs(ea - eb)) / max(1.0, np.max(np.abs(ea))))
        trace = m * a[0]
        detlaw = max(detlaw, abs(circ_det(e) - math.exp(trace)) / math.exp(abs(trace)))
    out.append(Check("phf", "circulant exp: eigenbasis vs Taylor", expm, tol))
    out.append(Check("phf", "det(exp a) = exp(trace a)", detlaw, 100 * tol))
    return out


def tricomplex_checks(tol: float, rng) -> list[Check]:
    out = []
    pts = rng.uniform(-5.0, 5.0, (N_RANDOM, 3))

    fact = alg = 0.0
    for x, y, z in pts:
        zeta = TriComplex(x, y, z)
        d = det_norm(zeta)
        fact = max(fact, abs(d - zeta.trace_sum * modulus(zeta) ** 2) / (1 + abs(d)))
        rhs = (x + y + z) * (x * x + y * y + z * z - x * y - y * z - x * z)
        alg = max(alg, abs(d - rhs) / (1 + abs(x) ** 3 + abs(y) ** 3 + abs(z) ** 3))
    out.append(Check("tricomplex", "det = trace_sum * modulus^2", fact, tol))
    out.append(Check("tricomplex", "sum-of-cubes factorization", alg, tol))

    rt = agree = 0.0
    for beta, gamma in rng.uniform(-3.0, 3.0, (N_RANDOM, 2)):
        zeta = compose(beta, gamma)
        b2, g2 = decompose(zeta)
        rt = max(rt, abs(b2 - beta), abs(g2 - gamma))
        b3, g3 = decompose_polar(zeta)
        agree = max(agree, abs(b3 - b2), abs(g3 - g2))
        back = compose(b2, g2)
        rt = max(rt, max(abs(u - v) for u, v in zip(back, zeta)) / max(map(abs, zeta)))
    out.append(Check("tricomplex", "compose/decompose roundtrip", rt, tol))
    out.append(Check("tricomplex", "determinant vs modulus decomposition", agree, tol))

    rot = inv = plane = 0.0
    for (x, y, z), a in zip(pts, rng.uniform(-5.0, 5.0, N_RANDOM)):
        zeta = TriComplex(x, y, z)
        mod = modulus(zeta)
        r = rotate(zeta, a)
        rot = max(rot, abs(modulus(r) - math.exp(-a / 2) * mod) / (math.exp(-a / 2) * mod))
        inv = max(inv, abs(modulus(invariant_rotate(zeta, a)) - mod) / mod)
        want = plane_factor(a) * plane_complex(zeta)
        plane = max(plane, abs(plane_complex(r) - want) / abs(want))
    out.append(Check("tricomplex", "rotation scales modulus by exp(-alpha/2)", rot, tol))
    out.append(Check("tricomplex", "invariant rotation keeps modulus", inv, tol))
    out.append(Check("tricomplex", "planar image multiplies by exp(w alpha)", plane, tol))

    ortho = float(np.max(np.abs(ORTHO_MATRIX @ ORTHO_MATRIX.T - np.eye(3))))
    out.append(Check("tricomplex", "orthonormal frame matrix", ortho, 1e-15))

    pr = 0.0
    for a, b, t in rng.uniform(-5.0, 5.0, (N_RANDOM, 3)):
        rho = EisensteinNumber(a, b)
        u, v = pseudo_rotation(rho, t)
        n = eisenstein_norm(rho)
        pr = max(pr, abs(u * u + v * v - n) / (1 + n))
    out.append(Check("tricomplex", "pseudo-rotation preserves a^2 - ab + b^2", pr, tol))
    return out


def hermite_checks(tol: float, rng) -> list[Check]:
    out = []
    grid = np.linspace(-1.0, 1.0, 5)

    # 40 terms leave a true truncation error of ~3e-8 for H3 at x = y = z = t = 1,
    # so the three-variable sum runs to n = 60
    gen2 = gen3 = 0.0
    for t in grid:
        for x in grid:
            for y in grid:
                partial = math.fsum(t**n * hermite2(n, x, y) / math.factorial(n) for n in range(41))
                gen2 = max(gen2, abs(partial - math.exp(x * t + y * t * t)))
                for z in grid:
                    partial = math.fsum(
                        t**n * hermite3(n, x, y, z) / math.factorial(n) for n in range(61)
                    )
                    gen3 = max(gen3, abs(partial - math.exp(x * t + y * t * t + z * t**3)))
    out.append(Check("hermite", "generating function H_n(x, y), n <= 40", gen2, 100 * tol))
    out.append(Check("hermite", "generating function H3_n(x, y, z), n <= 60", gen3, 100 * tol))

    h3, k3 = shift_power(3, 1), shift_power(3, 2)
    mat = resum = planar = sums = 0.0
    for a, eta in rng.uniform(-3.0, 3.0, (N_RANDOM, 2)):
        v = np.array(hphf3(a, eta).values)
        ref = circ_expm(a * h3 + eta * k3).to_array()
        scale = math.exp(abs(a) + abs(eta))
        mat = max(mat, np.max(np.abs(v - ref)) / scale)
        ea, ee = phf_eval(3, a), phf_eval(3, eta)
        rs = [math.fsum(ee[c] * ea[(s + c) % 3] for c in range(3)) for s in range(3)]
        resum = max(resum, np.max(np.abs(v - rs)) / scale)
        sums = max(sums, abs(math.fsum(v) - math.exp(a + eta)) / scale)

        zeta = TriComplex(*rng.uniform(-2.0, 2.0, 3))
        got = plane_complex(hermite_rotate(zeta, a, eta))
        want = math.exp(-eta) * plane_complex(rotate(zeta, a - eta))
        planar = max(planar, abs(got - want) / (scale * max(map(abs, zeta))))
    out.append(Check("hermite", "hphf3 = exp(alpha h + eta k)", mat, tol))
    out.append(Check("hermite", "resummed heat-operator form", resum, tol))
    out.append(Check("hermite", "planar action, factor exp(-eta)", planar, tol))

    mat4 = 0.0
    gens = [shift_power(4, p) for p in (1, 2, 3)]
    for a, eta, d in rng.uniform(-2.0, 2.0, (N_RANDOM, 3)):
        v = np.array(hphf4(a, eta, d).values)
        ref = circ_expm(a * gens[0] + eta * gens[1] + d * gens[2]).to_array()
        scale = math.exp(abs(a) + abs(eta) + abs(d))
        mat4 = max(mat4, np.max(np.abs(v - ref)) / scale)
        sums = max(sums, abs(math.fsum(v) - math.exp(a + eta + d)) / scale)
    out.append(Check("hermite", "hphf4 = exp(alpha h + eta h^2 + delta h^3)", mat4, tol))
    out.append(Check("hermite", "sum rules", sums, tol))
    return out


def crystallo_checks(tol: float, rng) -> list[Check]:
    # exact checks: residual is the number of failures, tolerance zero
    R = {op.label: op for op in crystallo.table()}
    power = crystallo.matpow
    cube_roots = [
        power(R["R6"], 2) == R["R11"].entries,
        power(R["R6"], 3) == R["R1"].entries,
        power(R["R7"], 2) == R["R12"].entries,
        power(R["R7"], 3) == R["R1"].entries,
    ]
    ops = crystallo.table()
    closed, count = crystallo.closure_report()
    h, k = (tuple(map(tuple, to_dense(shift_power(3, p)).tolist())) for p in (1, 2))
    transpose = lambda m: tuple(zip(*m))  # noqa: E731
    return [
        Check("crystallo", "R6^2 = R11, R6^3 = 1, R7^2 = R12, R7^3 = 1", cube_roots.count(False), 0),
        Check("crystallo", "determinants all +1", sum(op.det != 1 for op in ops), 0),
        Check("crystallo", "orders in {1, 2, 3}",
              sum(crystallo.order_of(op) not in (1, 2, 3) for op in ops), 0),
        Check("crystallo", "R5, R9 are the transposed cubic shifts",
              (R["R5"].entries != transpose(h)) + (R["R9"].entries != transpose(k)), 0),
        Check("crystallo", f"closure (closed={closed}, products={count})",
              (not closed) + (count != 12), 0),
    ]


SUITES: dict[str, Callable] = {
    "phf": phf_checks,
    "tricomplex": tricomplex_checks,
    "hermite": hermite_checks,
    "crystallo": crystallo_checks,
}


def run_suite(name: str, tol: float = 1e-12, seed: int = 0) -> list[Check]:
    names = list(SUITES) if name == "all" else [name]
    checks = []
    for n in names:
        checks.extend(SUITES[n](tol, np.random.default_rng(seed)))
    return checks
