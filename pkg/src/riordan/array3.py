"""The 3-D Riordan group: triples (g, f, h) with g, h invertible and f of
order one.  Layer k of a triple is the 2-D array (g*h^k, f); multiplying two
triples layerwise agrees with the componentwise group law, and the "bullet"
product pairs layer k with column k of an arbitrary column family.
"""

from __future__ import annotations

import json

from .array2 import RiordanArray, _validate_flavor, matrix_latex
from .algebra import scalar_json
from .series import Series, const_series, invert_unit, t_series


class RiordanTriple:
    __slots__ = ("g", "f", "h", "flavor", "_layers")

    def __init__(self, g: Series, f: Series, h: Series, flavor: str = "ordinary"):
        if g.vanishing_order != 0:
            raise ValueError("g must have a nonzero constant term")
        if f.vanishing_order != 1:
            raise ValueError("f must vanish to order exactly 1")
        if h.vanishing_order != 0:
            raise ValueError("h must have a nonzero constant term")
        self.g = g
        self.f = f
        self.h = h
        self.flavor = _validate_flavor(flavor)
        self._layers: list[RiordanArray] = []

    @classmethod
    def identity(cls, order: int, flavor: str = "ordinary") -> "RiordanTriple":
        one = const_series(1, order)
        return cls(one, t_series(order), one, flavor)

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order, self.h.order)

    def layer(self, k: int) -> RiordanArray:
        """The 2-D array (g*h^k, f), flavor inherited."""
        while len(self._layers) <= k:
            g = self._layers[-1].g * self.h if self._layers else self.g.truncated(self.order)
            self._layers.append(RiordanArray(g, self.f, self.flavor))
        return self._layers[k]

    def entry(self, i: int, j: int, k: int):
        return self.layer(k).entry(i, j)

    def __mul__(self, other: "RiordanTriple") -> "RiordanTriple":
        """Group product: (g1*g2(f1), f2(f1), h1*h2(f1))."""
        if not isinstance(other, RiordanTriple):
            return NotImplemented
        if self.flavor != other.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} * {other.flavor}")
        return RiordanTriple(
            self.g * other.g.compose(self.f),
            other.f.compose(self.f),
            self.h * other.h.compose(self.f),
            self.flavor,
        )

    def inverse(self) -> "RiordanTriple":
        """The triple B with self*B = identity, found by solving the three
        component equations coefficient by coefficient."""
        f_inv = _solve_compose(t_series(self.order), self.f)
        return RiordanTriple(
            _solve_compose(self.g.truncated(self.order).reciprocal(), self.f),
            f_inv,
            _solve_compose(self.h.truncated(self.order).reciprocal(), self.f),
            self.flavor,
        )

    def prod21(self, other: "RiordanTriple", i: int, j: int, k: int):
        """(2,1)-product entry: sum over x of self[i,x,k]*other[x,j,k]; the
        sum is finite because layers are lower-triangular."""
        acc = 0
        for x in range(i + 1):
            a = self.entry(i, x, k)
            if a:
                b = other.entry(x, j, k)
                if b:
                    acc = acc + a * b
        return acc

    def bullet(self, family: "ColumnFamily", rows: int, cols: int) -> list:
        """Formal product with a family of columns: column k of the result is
        layer(k) times family column k.  Returned as a rows x cols table."""
        columns = []
        for k in range(cols):
            b = family.column(k)
            if len(b) < rows:
                raise ValueError(f"column {k} has {len(b)} entries, need {rows}")
            layer = self.layer(k)
            columns.append([_dot(layer, i, b) for i in range(rows)])
        return [[columns[k][i] for k in range(cols)] for i in range(rows)]

    def apply_layer(self, column_gf: Series, k: int) -> Series:
        """3-D fundamental theorem, one layer: g*h^k*(column_gf(f))."""
        return self.layer(k).apply(column_gf)

    def layers_json(self, layer_count: int, rows: int, cols: int) -> str:
        layers = [
            [[scalar_json(v) for v in row] for row in self.layer(k).matrix(rows, cols)]
            for k in range(layer_count)
        ]
        return json.dumps({"layers": layers})

    def layer_latex(self, k: int, rows: int, cols: int) -> str:
        return matrix_latex(self.layer(k).matrix(rows, cols))


def _dot(layer: RiordanArray, i: int, column) -> object:
    acc = 0
    for j in range(i + 1):
        a = layer.entry(i, j)
        if a:
            acc = acc + a * column[j]
    return acc


def _solve_compose(target: Series, f: Series) -> Series:
    """The series S with S(f) = target up to truncation; f must have order
    exactly 1 with an invertible linear coefficient."""
    if f.vanishing_order != 1:
        raise ValueError("solving S(f) = target needs f of order exactly 1")
    n = min(target.order, f.order)
    inv_f1 = invert_unit(f.coeff(1))
    coeffs = [target.coeff(0)]
    powers = [const_series(1, n)]  # powers[m] = f**m
    for m in range(1, n + 1):
        powers.append(powers[-1] * f.truncated(n))
        residue = target.coeff(m)
        for j in range(1, m):
            cj = coeffs[j]
            if cj:
                residue = residue - cj * powers[j].coeff(m)
        coeffs.append(residue * inv_f1**m)
    return Series(tuple(coeffs))


class ColumnFamily:
    """Indexed family k -> column of ring elements, fed to the bullet
    product.  Columns may be given explicitly or materialized from
    generating functions."""

    __slots__ = ("_columns",)

    def __init__(self, columns):
        self._columns = [list(col) for col in columns]

    @classmethod
    def constant(cls, column, count: int) -> "ColumnFamily":
        return cls([list(column)] * count)

    @classmethod
    def from_series(cls, gfs, rows: int, flavor: str = "ordinary") -> "ColumnFamily":
        """Materialize columns from their generating functions; for the
        exponential flavor the functions are exponential g.f.s, so entry n is
        n! times the t^n coefficient."""
        _validate_flavor(flavor)
        from math import factorial

        columns = []
        for gf in gfs:
            if gf.order < rows - 1:
                raise ValueError(f"series order {gf.order} too small for {rows} rows")
            if flavor == "exponential":
                columns.append([factorial(n) * gf.coeff(n) for n in range(rows)])
            else:
                columns.append([gf.coeff(n) for n in range(rows)])
        return cls(columns)

    def column(self, k: int) -> list:
        if k < 0 or k >= len(self._columns):
            raise ValueError(f"no column {k} in family of {len(self._columns)}")
        return self._columns[k]

    def __len__(self):
        return len(self._columns)
