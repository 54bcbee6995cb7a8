"""Exact-integer point operators R1..R12 and their group structure.

All arithmetic here is on Python ints; nothing is ever converted to float.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError

__all__ = [
    "PointOperator",
    "IDENTITY",
    "table",
    "by_label",
    "compose",
    "matpow",
    "order_of",
    "cubic_roots",
    "closure_report",
    "ClosureReport",
    "det3",
]

Matrix = tuple  # 3-tuple of 3-tuples of ints

IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def det3(m: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _is_signed_permutation(m: Matrix) -> bool:
    if any(v not in (-1, 0, 1) for row in m for v in row):
        return False
    rows_ok = all(sum(1 for v in row if v) == 1 for row in m)
    cols_ok = all(sum(1 for row in m if row[c]) == 1 for c in range(3))
    return rows_ok and cols_ok


@dataclass(frozen=True)
class PointOperator:
    label: str
    entries: Matrix

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len(entries) != 3 or any(len(row) != 3 for row in entries):
            raise DomainError(f"{self.label}: point operators are 3x3")
        if not _is_signed_permutation(entries):
            raise DomainError(f"{self.label}: not a signed permutation matrix")
        if det3(entries) not in (-1, 1):
            raise DomainError(f"{self.label}: determinant must be +-1")
        object.__setattr__(self, "entries", entries)

    @property
    def det(self) -> int:
        return det3(self.entries)


_TABLE_ENTRIES = {
    "R1": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "R2": ((-1, 0, 0), (0, -1, 0), (0, 0, 1)),
    "R3": ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
    "R4": ((-1, 0, 0), (0, 1, 0), (0, 0, -1)),
    "R5": ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    "R6": ((0, 0, -1), (-1, 0, 0), (0, 1, 0)),
    "R7": ((0, 0, 1), (-1, 0, 0), (0, -1, 0)),
    "R8": ((0, 0, -1), (1, 0, 0), (0, -1, 0)),
    "R9": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    "R10": ((0, 1, 0), (0, 0, -1), (-1, 0, 0)),
    "R11": ((0, -1, 0), (0, 0, 1), (-1, 0, 0)),
    "R12": ((0, -1, 0), (0, 0, -1), (1, 0, 0)),
}

_TABLE = tuple(PointOperator(label, m) for label, m in _TABLE_ENTRIES.items())
for _op in _TABLE:
    if _op.det != 1:
        raise RuntimeError(f"table operator {_op.label} has determinant {_op.det}")


def table() -> tuple[PointOperator, ...]:
    """The twelve operators R1..R12, in order."""
    return _TABLE


def by_label(label: str) -> PointOperator:
    try:
        return _TABLE[int(label.lstrip("Rr")) - 1]
    except (ValueError, IndexError):
        raise DomainError(f"unknown operator label {label!r}") from None


def _entries(a) -> Matrix:
    return a.entries if isinstance(a, PointOperator) else a


def compose(a, b) -> Matrix:
    """Exact matrix product ``a @ b``; accepts operators or raw matrices."""
    a, b = _entries(a), _entries(b)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(3)) for c in range(3)) for r in range(3)
    )


def matpow(a, n: int) -> Matrix:
    out = IDENTITY
    for _ in range(n):
        out = compose(out, a)
    return out


def order_of(a) -> int:
    """Smallest n >= 1 with ``a**n == 1``; at most 6 for 3x3 signed permutations."""
    m = _entries(a)
    power = m
    for n in range(1, 7):
        if power == IDENTITY:
            return n
        power = compose(power, m)
    raise DomainError("not a finite-order signed permutation")


def cubic_roots() -> list[str]:
    """Labels of the table operators of order exactly 3."""
    return [op.label for op in _TABLE if order_of(op) == 3]


class ClosureReport(NamedTuple):
    closed: bool
    product_count: int


def closure_report(ops: Sequence[PointOperator] | None = None) -> ClosureReport:
    """Brute-force all pairwise products.

    ``product_count`` is the number of distinct matrices among the products;
    ``closed`` says whether every product is already in the set.
    """
    ops = _TABLE if ops is None else tuple(ops)
    members = {op.entries for op in ops}
    products = {compose(a, b) for a in ops for b in ops}
    return ClosureReport(products <= members, len(products))
