"""Riordan arrays: infinite lower-triangular arrays generated by a pair of
series (g, f) with g invertible and f vanishing to order exactly one.

Two flavors share the same pair: the ordinary entry is the t^n coefficient of
g*f^k, the exponential entry scales that by n!/k! (conjugation by the
factorial diagonal, which commutes with the group law, so multiplication is
flavor-agnostic).
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

from .algebra import scalar_json, scalar_latex, scalar_str
from .series import Series, const_series, t_series

FLAVORS = ("ordinary", "exponential")


def _validate_flavor(flavor: str) -> str:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    return flavor


class RiordanArray:
    __slots__ = ("g", "f", "flavor", "_cols")

    def __init__(self, g: Series, f: Series, flavor: str = "ordinary"):
        if g.vanishing_order != 0:
            raise ValueError("g must have a nonzero constant term")
        if f.vanishing_order != 1:
            raise ValueError("f must vanish to order exactly 1")
        self.g = g
        self.f = f
        self.flavor = _validate_flavor(flavor)
        self._cols = [g.truncated(self.order)]

    @classmethod
    def identity(cls, order: int, flavor: str = "ordinary") -> "RiordanArray":
        return cls(const_series(1, order), t_series(order), flavor)

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def column_series(self, k: int) -> Series:
        """g * f**k, the generating function of column k."""
        while len(self._cols) <= k:
            self._cols.append(self._cols[-1] * self.f)
        return self._cols[k]

    def entry(self, n: int, k: int):
        if n > self.order or k > self.order:
            raise IndexError(f"entry ({n}, {k}) beyond truncation order {self.order}")
        if k > n:
            return 0
        value = self.column_series(k).coeff(n)
        if self.flavor == "exponential":
            value = Fraction(factorial(n), factorial(k)) * value
        return value

    def matrix(self, rows: int, cols: int) -> list:
        return [[self.entry(n, k) for k in range(cols)] for n in range(rows)]

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        """Group product: (g1*g2(f1), f2(f1))."""
        if not isinstance(other, RiordanArray):
            return NotImplemented
        if self.flavor != other.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} * {other.flavor}")
        return RiordanArray(
            self.g * other.g.compose(self.f),
            other.f.compose(self.f),
            self.flavor,
        )

    def apply(self, column_gf: Series) -> Series:
        """Fundamental theorem: the product of the array with the column whose
        generating function is column_gf has generating function g*A(f).

        For the exponential flavor both the argument and the result are read
        as exponential generating functions.
        """
        return self.g * column_gf.compose(self.f)

    def to_json(self, rows: int, cols: int) -> str:
        return json.dumps([[scalar_json(v) for v in row] for row in self.matrix(rows, cols)])

    def to_latex(self, rows: int, cols: int) -> str:
        return matrix_latex(self.matrix(rows, cols))


def matrix_latex(matrix: list) -> str:
    lines = [r"\begin{pmatrix}"]
    for row in matrix:
        lines.append(" & ".join(scalar_latex(v) for v in row) + r" \\")
    lines.append(r"\end{pmatrix}")
    return "\n".join(lines)


def matrix_text(matrix: list) -> str:
    """Column-aligned plain text, deterministic for golden tests."""
    cells = [[scalar_str(v) for v in row] for row in matrix]
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))] if cells else []
    return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells)
