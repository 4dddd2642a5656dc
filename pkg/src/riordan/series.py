"""Truncated formal power series over exact coefficients.

A Series holds coefficients c0..cN of a single indeterminate t; a BiSeries
holds coefficients of s^i t^j up to a total degree.  Coefficients may be
ints, Fractions, or Polynomials and mix freely.  Truncation is explicit:
binary operations truncate to the shorter operand, so no precision is ever
lost silently.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Polynomial

#: Truncation order used by the verification harness unless a caller asks
#: for more.
DEFAULT_ORDER = 16


def _check_exact(value):
    if isinstance(value, float):
        raise TypeError(f"floats are not allowed in exact series: {value!r}")
    return value


def invert_unit(value):
    """Multiplicative inverse of a ring unit (nonzero rational, possibly
    wrapped in a constant polynomial)."""
    if isinstance(value, Polynomial):
        if not value.is_constant():
            raise ValueError(f"cannot invert non-constant coefficient {value}")
        value = value.constant_term()
    if not value:
        raise ValueError("cannot invert zero")
    return Fraction(1) / Fraction(value)


class Series:
    """Power series in t truncated at an explicit order (inclusive)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(_check_exact(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        self._coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient index {n} outside truncation order {self.order}")
        return self._coeffs[n]

    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def vanishing_order(self):
        """Index of the first nonzero coefficient, or None if all stored
        coefficients vanish."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncated(self, order: int) -> "Series":
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to {order}")
        return Series(self._coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return Series(tuple(-c for c in self._coeffs))

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(tuple(self._coeffs[i] + other._coeffs[i] for i in range(n + 1)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            # scalar (int, Fraction, Polynomial)
            _check_exact(other)
            return Series(tuple(c * other for c in self._coeffs))
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                a = self._coeffs[i]
                b = other._coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Series(tuple(out))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"series exponent must be a non-negative integer: {exponent!r}")
        result = const_series(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def reciprocal(self) -> "Series":
        """The series g with self*g = 1 up to truncation; needs a unit
        constant term."""
        if self.vanishing_order != 0:
            raise ValueError("reciprocal requires a nonzero constant term")
        inv0 = invert_unit(self._coeffs[0])
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for i in range(1, n + 1):
                if self._coeffs[i]:
                    acc = acc + self._coeffs[i] * out[n - i]
            out.append((-inv0) * acc)
        return Series(tuple(out))

    def compose(self, inner: "Series") -> "Series":
        """self(inner), where inner must have no constant term."""
        if inner._coeffs[0]:
            raise ValueError("composition requires the inner series to vanish at 0")
        n = min(self.order, inner.order)
        inner = inner.truncated(n)
        # Horner evaluation: ((c_n*u + c_{n-1})*u + ...) + c_0
        acc = const_series(self._coeffs[n], n)
        for i in range(n - 1, -1, -1):
            acc = acc * inner + const_series(self._coeffs[i], n)
        return acc

    def exp(self) -> "Series":
        """e**self, defined when the constant term vanishes."""
        if self._coeffs[0]:
            raise ValueError("exp requires the argument to vanish at 0")
        n = self.order
        acc = const_series(1, n)
        term = const_series(1, n)
        for i in range(1, n + 1):
            term = term * self * Fraction(1, i)
            acc = acc + term
        return acc

    def __str__(self):
        parts = []
        for i, c in enumerate(self._coeffs):
            text = str(c)
            if (" + " in text or " - " in text) and i:
                text = f"({text})"
            if i == 0:
                parts.append(text)
            elif i == 1:
                parts.append(f"{text}*t")
            else:
                parts.append(f"{text}*t^{i}")
        return " + ".join(parts)

    __repr__ = __str__


def const_series(value, order: int) -> Series:
    return Series((value,) + (0,) * order)


def t_series(order: int) -> Series:
    """The indeterminate t itself."""
    if order < 1:
        raise ValueError("t needs truncation order at least 1")
    return Series((0, 1) + (0,) * (order - 1))


def geom(order: int, power: int = 1) -> Series:
    """1/(1-t)**power for power >= 1; coefficients are binomials."""
    if power < 1:
        raise ValueError("geom needs power >= 1")
    coeffs = [1]
    for n in range(1, order + 1):
        # C(n+power-1, n) built incrementally
        coeffs.append(coeffs[-1] * (n + power - 1) // n)
    return Series(tuple(coeffs))


def neg_t_geom(order: int, scale=1) -> Series:
    """scale * (-t)/(1-t): zero constant term, then -scale forever."""
    return Series((0,) + (-scale,) * order)


class BiSeries:
    """Power series in s and t truncated at a total degree."""

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("total-degree truncation must be non-negative")
        data = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0 or i + j > order:
                raise ValueError(f"exponent pair {(i, j)} outside total degree {order}")
            _check_exact(c)
            if c:
                data[(i, j)] = c
        self._coeffs = data
        self._order = order

    @property
    def order(self) -> int:
        return self._order

    def coeff(self, i: int, j: int):
        if i < 0 or j < 0 or i + j > self._order:
            raise IndexError(f"coefficient index {(i, j)} outside total degree {self._order}")
        return self._coeffs.get((i, j), 0)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        if self._order != other._order:
            return False
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self._coeffs.get(k, 0) == other._coeffs.get(k, 0) for k in keys)

    def __neg__(self):
        return BiSeries({k: -c for k, c in self._coeffs.items()}, self._order)

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        order = min(self._order, other._order)
        out = {}
        for k in set(self._coeffs) | set(other._coeffs):
            if k[0] + k[1] <= order:
                out[k] = self._coeffs.get(k, 0) + other._coeffs.get(k, 0)
        return BiSeries(out, order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            _check_exact(other)
            return BiSeries({k: c * other for k, c in self._coeffs.items()}, self._order)
        order = min(self._order, other._order)
        out = {}
        for (ai, aj), ac in self._coeffs.items():
            for (bi, bj), bc in other._coeffs.items():
                i, j = ai + bi, aj + bj
                if i + j <= order:
                    key = (i, j)
                    out[key] = out.get(key, 0) + ac * bc
        return BiSeries(out, order)

    def __rmul__(self, other):
        return self * other

    def reciprocal(self) -> "BiSeries":
        c00 = self._coeffs.get((0, 0), 0)
        if not c00:
            raise ValueError("reciprocal requires a nonzero constant term")
        inv0 = invert_unit(c00)
        out = {(0, 0): inv0}
        for degree in range(1, self._order + 1):
            for i in range(degree + 1):
                j = degree - i
                acc = 0
                for (fi, fj), fc in self._coeffs.items():
                    if (fi, fj) == (0, 0) or fi > i or fj > j:
                        continue
                    g = out.get((i - fi, j - fj), 0)
                    if g:
                        acc = acc + fc * g
                if acc:
                    out[(i, j)] = -inv0 * acc
        return BiSeries(out, self._order)

    def exp(self) -> "BiSeries":
        if self._coeffs.get((0, 0), 0):
            raise ValueError("exp requires the argument to vanish at 0")
        one = BiSeries({(0, 0): 1}, self._order)
        acc = one
        term = one
        for i in range(1, self._order + 1):
            term = term * self * Fraction(1, i)
            acc = acc + term
        return acc

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self._coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1])):
            text = str(c)
            if " + " in text or " - " in text:
                text = f"({text})"
            mono = "*".join(m for m in (_mono("s", i), _mono("t", j)) if m)
            parts.append(f"{text}*{mono}" if mono else text)
        return " + ".join(parts)

    __repr__ = __str__


def _mono(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"
